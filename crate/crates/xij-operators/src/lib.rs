//! The conjugate operators
//! `X_ij = g_{j-1} … g_{i+1} e_i g_{i+1}^{-1} … g_{j-1}^{-1}`, their
//! single-coefficient action rules, and the sum matrix `T(n) = Σ ν(X_ij)`.
//!
//! The matrix of ν(X_ij) vanishes outside the row of `w_ij`, so an operator is
//! stored as that one row.

use exact_rings::{Field, Matrix, Scalar};
use lk_representation::{LKMatrices, Params, SparseColumn};
use rayon::prelude::*;
use root_system::{num_roots, roots, RootIndex};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum XijError {
    #[error("X({i},{j}) has nonzero rows {rows:?} (1-based) outside row {expected}")]
    Structure { i: usize, j: usize, rows: Vec<usize>, expected: usize },
    #[error("w({i},{j}) is not a root for n = {n}")]
    OutOfRange { i: usize, j: usize, n: usize },
}

/// ν(X_ij), stored as its row at position(w_ij).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XOperator<E> {
    pub i: usize,
    pub j: usize,
    pub row: SparseColumn<E>,
}

impl<E: Scalar> XOperator<E> {
    pub fn root(&self) -> RootIndex {
        RootIndex::new(self.i, self.j)
    }

    /// Coefficient of w_ij in X_ij(x_σ).
    pub fn coeff(&self, sigma: RootIndex) -> Option<&E> {
        self.row.get(sigma)
    }
}

fn check_pair(n: usize, i: usize, j: usize) -> Result<(), XijError> {
    if 1 <= i && i < j && j <= n {
        Ok(())
    } else {
        Err(XijError::OutOfRange { i, j, n })
    }
}

/// Full matrix of ν(X_ij) as the product
/// `G_{j-1} ⋯ G_{i+1} E_i G_{i+1}^{-1} ⋯ G_{j-1}^{-1}`.
///
/// The product is accumulated outward from E_i, so every intermediate factor
/// keeps the single nonzero row of E_i and the sparse product stays cheap.
pub fn xij_matrix<F: Field>(m: &LKMatrices<F>, i: usize, j: usize) -> Result<Matrix<F::El>, XijError> {
    check_pair(m.n, i, j)?;
    let mut y = m.e(i).clone();
    for k in i + 1..j {
        y = y.mul(m.ginv(k));
    }
    for k in i + 1..j {
        y = m.g(k).mul(&y);
    }
    Ok(y)
}

/// ν(X_ij) by conjugation, after checking that the product vanishes outside
/// the row of w_ij.
pub fn xij_by_conjugation<F: Field>(m: &LKMatrices<F>, i: usize, j: usize) -> Result<XOperator<F::El>, XijError> {
    let full = xij_matrix(m, i, j)?;
    let target = RootIndex::new(i, j).index();
    let rows = full.nonzero_rows();
    if rows.iter().any(|&r| r != target) {
        return Err(XijError::Structure {
            i,
            j,
            rows: rows.iter().map(|r| r + 1).collect(),
            expected: target + 1,
        });
    }
    let mut row = SparseColumn::new();
    for sigma in roots(m.n) {
        row.push(sigma, full.get(target, sigma.index()).clone());
    }
    Ok(XOperator { i, j, row })
}

/// Which single-coefficient rule applies to σ for the operator X_ij.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum XRule {
    /// σ = w_ij.
    Diagonal,
    /// σ = w_{i+k,j}.
    MR(usize),
    /// σ = w_{i,j-k}.
    ML(usize),
    /// σ = w_{i,j+k}.
    TR(usize),
    /// σ = w_{i-k,j}.
    TL(usize),
    /// σ = w_{j,j+k}.
    SR(usize),
    /// σ = w_{i-k,i}.
    SL(usize),
    /// σ = w_{i+s,j+t}.
    CR(usize, usize),
    /// σ = w_{i-s,j-t}.
    CL(usize, usize),
    /// Every other position.
    Zero,
}

/// Classifies σ = w_{s,t} relative to (i, j). Exact-match rules are tried
/// before the crossing rules.
pub fn xij_rule(i: usize, j: usize, sigma: RootIndex) -> XRule {
    let (s, t) = (sigma.i(), sigma.j());
    if (s, t) == (i, j) {
        XRule::Diagonal
    } else if t == j && i < s {
        XRule::MR(s - i)
    } else if s == i && t < j {
        XRule::ML(j - t)
    } else if s == i && t > j {
        XRule::TR(t - j)
    } else if t == j && s < i {
        XRule::TL(i - s)
    } else if s == j {
        XRule::SR(t - j)
    } else if t == i {
        XRule::SL(i - s)
    } else if i < s && s < j && t > j {
        XRule::CR(s - i, t - j)
    } else if s < i && i < t && t < j {
        XRule::CL(i - s, j - t)
    } else {
        XRule::Zero
    }
}

/// Coefficient of w_ij in ν(X_ij)(x_σ), computed by the rule of [`xij_rule`].
pub fn xij_direct_coeff<F: Field>(p: &Params<F>, n: usize, i: usize, j: usize, sigma: RootIndex) -> F::El {
    assert!(j <= n && sigma.j() <= n, "roots must lie in A_(n-1)");
    let rp = |k: i64| p.r_pow(k);
    let gap = (j - i - 1) as i64;
    match xij_rule(i, j, sigma) {
        XRule::Diagonal => p.x.clone(),
        XRule::MR(k) | XRule::TR(k) => p.l.mul(&rp(k as i64 - 1)),
        XRule::ML(k) | XRule::TL(k) => p.l_inv.mul(&rp(1 - k as i64)),
        XRule::SR(k) => rp(k as i64 - 1 + gap),
        XRule::SL(k) => rp(-(k as i64 - 1 + gap)),
        XRule::CR(s, t) => {
            let e = (s + t) as i64;
            rp(e - 1).sub(&rp(e - 3)).mul(&p.l.sub(&p.r))
        }
        XRule::CL(s, t) => {
            let e = (s + t) as i64;
            rp(1 - e).sub(&rp(3 - e)).mul(&p.l_inv.sub(&rp(-1)))
        }
        XRule::Zero => p.field.zero(),
    }
}

/// ν(X_ij) assembled from the single-coefficient rules.
pub fn xij_direct<F: Field>(p: &Params<F>, n: usize, i: usize, j: usize) -> Result<XOperator<F::El>, XijError> {
    check_pair(n, i, j)?;
    let mut row = SparseColumn::new();
    for sigma in roots(n) {
        row.push(sigma, xij_direct_coeff(p, n, i, j, sigma));
    }
    Ok(XOperator { i, j, row })
}

/// `T(n)`: the matrix of Σ_{i<j} ν(X_ij). Row position(w_ij) is the X_ij row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumMatrix<E: Scalar> {
    pub n: usize,
    pub matrix: Matrix<E>,
}

fn stack<F: Field>(f: &F, n: usize, ops: Vec<XOperator<F::El>>) -> SumMatrix<F::El> {
    let d = num_roots(n);
    let mut t = Matrix::filled(d, d, f.zero());
    for op in ops {
        let row = op.root().index();
        for (sigma, c) in op.row.entries() {
            t.set(row, sigma.index(), c.clone());
        }
    }
    SumMatrix { n, matrix: t }
}

/// T(n) from the conjugation products.
pub fn sum_matrix<F: Field>(m: &LKMatrices<F>) -> Result<SumMatrix<F::El>, XijError> {
    let pairs: Vec<RootIndex> = roots(m.n).collect();
    let ops = pairs.par_iter().map(|w| xij_by_conjugation(m, w.i(), w.j())).collect::<Result<Vec<_>, _>>()?;
    Ok(stack(m.field(), m.n, ops))
}

/// T(n) from the single-coefficient rules; needs no representation matrices.
pub fn sum_matrix_direct<F: Field>(p: &Params<F>, n: usize) -> SumMatrix<F::El> {
    let pairs: Vec<RootIndex> = roots(n).collect();
    let ops = pairs.par_iter().map(|w| xij_direct(p, n, w.i(), w.j()).expect("pairs come from roots(n)")).collect();
    stack(&p.field, n, ops)
}
