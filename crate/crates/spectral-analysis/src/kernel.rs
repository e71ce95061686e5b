//! Exact row reduction, ranks and kernels of T(n) at a specialization.

use exact_rings::{Field, Matrix, Scalar, Specialization};

use crate::{t_matrix, SpectralError};

/// Reduced row echelon form. Returns the nonzero rows and their pivot
/// columns. The pivot for each column is the candidate entry of smallest size.
pub fn rref<E: Scalar>(m: &Matrix<E>) -> Result<(Vec<Vec<E>>, Vec<usize>), SpectralError> {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..cols {
        if top == rows {
            break;
        }
        let Some(p) = (top..rows).filter(|&i| !a[i][c].is_zero()).min_by_key(|&i| a[i][c].size()) else {
            continue;
        };
        a.swap(p, top);
        let inv = a[top][c].inv()?;
        let pivot_row: Vec<E> = a[top].iter().map(|v| if v.is_zero() { v.clone() } else { v.mul(&inv) }).collect();
        for (i, row) in a.iter_mut().enumerate() {
            if i == top || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    row[j] = row[j].sub(&f.mul(&pivot_row[j]));
                }
            }
        }
        a[top] = pivot_row;
        pivots.push(c);
        top += 1;
    }
    a.truncate(top);
    Ok((a, pivots))
}

/// Rank by row reduction.
pub fn rank<E: Scalar>(m: &Matrix<E>) -> Result<usize, SpectralError> {
    Ok(rref(m)?.1.len())
}

/// Basis of the right kernel of `m`, itself in reduced row echelon form.
pub fn nullspace<E: Scalar>(m: &Matrix<E>, zero: &E, one: &E) -> Result<Vec<Vec<E>>, SpectralError> {
    let (r, pivots) = rref(m)?;
    let cols = m.cols();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.clone(); cols];
        v[free] = one.clone();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = row[free].neg();
        }
        basis.push(v);
    }
    if basis.is_empty() {
        return Ok(basis);
    }
    Ok(rref(&Matrix::from_rows(basis))?.0)
}

/// Kernel of T(n) at a specialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport<E> {
    pub n: usize,
    pub spec: Specialization,
    pub basis: Vec<Vec<E>>,
    pub dim: usize,
    pub rank: usize,
}

/// Ker T(n) over a field in which l has been specialized.
pub fn kernel<F: Field>(n: usize, field: &F) -> Result<KernelReport<F::El>, SpectralError> {
    let spec = field.specialization();
    if spec == Specialization::Generic {
        return Err(SpectralError::Unsupported(
            "kernels are computed only after specializing l".into(),
        ));
    }
    let t = t_matrix(n, field)?;
    let basis = nullspace(&t, &field.zero(), &field.one())?;
    let dim = basis.len();
    Ok(KernelReport { n, spec, basis, dim, rank: t.cols() - dim })
}
