//! Square submatrices of T(n): exact minors, a search for an invertible
//! minor, and the nested family S(n) with its closed-form determinant.

use exact_rings::{Field, FieldElement, RationalFunctions, Scalar};
use itertools::Itertools;
use rayon::prelude::*;
use root_system::binom2;

use crate::{t_matrix, SpectralError};

/// 1-based row and column indices of a square submatrix.
pub type Minor = (Vec<usize>, Vec<usize>);

fn to_zero_based(idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|&k| {
        assert!(k >= 1, "submatrix indices are 1-based");
        k - 1
    }).collect()
}

/// The minor of T(n) on the given 1-based rows and columns.
pub fn submatrix_det<F: Field>(n: usize, field: &F, rows: &[usize], cols: &[usize]) -> Result<F::El, SpectralError> {
    assert_eq!(rows.len(), cols.len(), "a minor needs as many rows as columns");
    let t = t_matrix(n, field)?;
    let sub = t.submatrix(&to_zero_based(rows), &to_zero_based(cols));
    Ok(field.determinant(&sub)?)
}

/// First invertible `size`-square submatrix of T(n) with rows drawn from
/// `row_pool` and columns from `col_pool` (1-based). Column sets are
/// enumerated lexicographically in the outer loop and row sets in the inner
/// loop; the lexicographically first hit is returned regardless of the order
/// in which parallel workers finish.
pub fn rank_witness<F: Field>(
    n: usize,
    field: &F,
    size: usize,
    row_pool: &[usize],
    col_pool: &[usize],
) -> Result<Option<Minor>, SpectralError> {
    assert!(size <= row_pool.len() && size <= col_pool.len(), "size exceeds a pool");
    let t = t_matrix(n, field)?;
    let col_sets: Vec<Vec<usize>> = col_pool.iter().copied().combinations(size).collect();
    let hit = col_sets.par_iter().map(|cols| -> Result<Option<Minor>, SpectralError> {
        let c0 = to_zero_based(cols);
        for rows in row_pool.iter().copied().combinations(size) {
            let sub = t.submatrix(&to_zero_based(&rows), &c0);
            if !field.determinant(&sub)?.is_zero() {
                return Ok(Some((rows, cols.clone())));
            }
        }
        Ok(None)
    });
    match hit.find_first(|r| !matches!(r, Ok(None))) {
        Some(r) => r,
        None => Ok(None),
    }
}

/// Row and column indices (1-based) of S(n), n >= 5: both start from
/// [1, 3, 4, 7] at n = 5; each step appends binom(n-1, 2) + 1 to the rows and
/// binom(n-1, 2) + n - 4 to the columns.
pub fn s_n_indices(n: usize) -> (Vec<usize>, Vec<usize>) {
    assert!(n >= 5, "S(n) starts at n = 5");
    let mut rows = vec![1, 3, 4, 7];
    let mut cols = rows.clone();
    for k in 6..=n {
        rows.push(binom2(k - 1) + 1);
        cols.push(binom2(k - 1) + k - 4);
    }
    (rows, cols)
}

/// `(-1)^{n+1} (1 + r^4 + ... + r^{4(n-1)}) / r^{8 + n(n-5)/2}`.
pub fn det_sn_formula(n: usize) -> FieldElement {
    let r = FieldElement::r();
    let mut sum = FieldElement::zero();
    for k in 0..n {
        sum = sum.add(&r.pow(4 * k as i64).expect("power"));
    }
    let e = 8 + (n * (n - 5) / 2) as i64;
    let v = sum.mul(&r.pow(-e).expect("r is invertible"));
    if n % 2 == 0 {
        v.neg()
    } else {
        v
    }
}

/// det S(n) at l = -r^3 compared with [`det_sn_formula`].
pub fn det_sn_formula_check(n: usize) -> Result<bool, SpectralError> {
    let f = RationalFunctions::with_l(FieldElement::r().pow(3).expect("power").neg())?;
    let (rows, cols) = s_n_indices(n);
    Ok(submatrix_det(n, &f, &rows, &cols)? == det_sn_formula(n))
}
