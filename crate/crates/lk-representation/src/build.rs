//! Assembly of the matrices G_i, E_i, G_i^{-1}: directly from the closed-form
//! action, and independently by the block recursion on n.

use exact_rings::{Field, Matrix, RingError, Scalar, Specialization};
use rayon::prelude::*;
use root_system::{binom2, num_roots, roots, RootIndex};

use crate::action::{nu_action, nu_e_action, nu_inv_action, Params, SparseColumn};

/// The images of g_i, e_i and g_i^{-1} (i = 1..n-1) as square matrices of
/// size n(n-1)/2. Column k holds the image of the k-th basis vector.
#[derive(Clone, Debug)]
pub struct LKMatrices<F: Field> {
    pub n: usize,
    pub params: Params<F>,
    pub g: Vec<Matrix<F::El>>,
    pub e: Vec<Matrix<F::El>>,
    pub ginv: Vec<Matrix<F::El>>,
}

impl<F: Field> LKMatrices<F> {
    pub fn field(&self) -> &F {
        &self.params.field
    }

    pub fn specialization(&self) -> Specialization {
        self.params.field.specialization()
    }

    pub fn dim(&self) -> usize {
        num_roots(self.n)
    }

    /// G_i for the 1-based node i.
    pub fn g(&self, i: usize) -> &Matrix<F::El> {
        &self.g[i - 1]
    }

    pub fn e(&self, i: usize) -> &Matrix<F::El> {
        &self.e[i - 1]
    }

    pub fn ginv(&self, i: usize) -> &Matrix<F::El> {
        &self.ginv[i - 1]
    }

    pub fn identity(&self) -> Matrix<F::El> {
        let f = self.field();
        Matrix::identity(self.dim(), &f.zero(), &f.one())
    }
}

fn from_columns<F: Field>(
    f: &F,
    n: usize,
    col: impl Fn(RootIndex) -> SparseColumn<F::El>,
) -> Matrix<F::El> {
    let d = num_roots(n);
    let mut m = Matrix::filled(d, d, f.zero());
    for beta in roots(n) {
        for (rho, c) in col(beta).entries() {
            m.set(rho.index(), beta.index(), c.clone());
        }
    }
    m
}

fn check_n(n: usize, min: usize) {
    assert!(n >= min, "n = {n} is below the minimum {min}");
}

/// Builds all matrices column by column from the closed-form action.
pub fn build_matrices<F: Field>(n: usize, field: &F) -> Result<LKMatrices<F>, RingError> {
    check_n(n, 2);
    let p = Params::new(field)?;
    let nodes: Vec<usize> = (1..n).collect();
    let g = nodes.par_iter().map(|&i| from_columns(field, n, |b| nu_action(&p, i, b))).collect();
    let e = nodes.par_iter().map(|&i| from_columns(field, n, |b| nu_e_action(&p, i, b))).collect();
    let ginv = nodes.par_iter().map(|&i| from_columns(field, n, |b| nu_inv_action(&p, i, b))).collect();
    Ok(LKMatrices { n, params: p, g, e, ginv })
}

/// `E_i = (l/m)(G_i^2 + m G_i - I)`.
pub fn e_from_g<F: Field>(p: &Params<F>, g: &Matrix<F::El>) -> Matrix<F::El> {
    let id = Matrix::identity(g.rows(), &p.field.zero(), &p.field.one());
    let c = p.l.mul(&p.m.inv().expect("m is nonzero"));
    g.mul(g).add(&g.scale(&p.m)).sub(&id).scale(&c)
}

/// `G_i^{-1} = G_i + m I - m E_i`.
pub fn ginv_from_g_e<F: Field>(p: &Params<F>, g: &Matrix<F::El>, e: &Matrix<F::El>) -> Matrix<F::El> {
    let id = Matrix::identity(g.rows(), &p.field.zero(), &p.field.one());
    g.add(&id.scale(&p.m)).sub(&e.scale(&p.m))
}

/// G_i(k) for i <= k-2 from G_i(k-1): the old matrix is the leading block,
/// and the trailing roots w_{s,k} carry r on the diagonal except for s = i
/// (sent to w_{i+1,k}) and s = i+1 (sent to w_{i,k} + m r^{k-i-2} α_i - m w_{i+1,k}).
fn first_kind<F: Field>(p: &Params<F>, prev: &Matrix<F::El>, i: usize, k: usize) -> Matrix<F::El> {
    let d = num_roots(k);
    let mut m = Matrix::filled(d, d, p.field.zero());
    for a in 0..prev.rows() {
        for b in 0..prev.cols() {
            m.set(a, b, prev.get(a, b).clone());
        }
    }
    for s in 1..k {
        let beta = RootIndex::new(s, k).index();
        if s == i {
            m.set(RootIndex::new(i + 1, k).index(), beta, p.field.one());
        } else if s == i + 1 {
            m.set(RootIndex::new(i, k).index(), beta, p.field.one());
            m.set(binom2(i), beta, p.m.mul(&p.r_pow((k - i - 2) as i64)));
            m.set(beta, beta, p.m.neg());
        } else {
            m.set(beta, beta, p.r.clone());
        }
    }
    m
}

/// G_{k-1}(k): r on the first binom(k-2, 2) roots, w_{s,k-1} sent to w_{s,k},
/// α_{k-1} scaled by 1/l, and w_{s,k} sent to
/// w_{s,k-1} + m/(l r^{k-s-2}) α_{k-1} - m w_{s,k}.
fn second_kind<F: Field>(p: &Params<F>, k: usize) -> Matrix<F::El> {
    let d = num_roots(k);
    let mut m = Matrix::filled(d, d, p.field.zero());
    for a in 0..binom2(k - 2) {
        m.set(a, a, p.r.clone());
    }
    let alpha = RootIndex::simple(k - 1).index();
    m.set(alpha, alpha, p.l_inv.clone());
    for s in 1..k - 1 {
        let low = RootIndex::new(s, k - 1).index();
        let high = RootIndex::new(s, k).index();
        m.set(high, low, p.field.one());
        m.set(low, high, p.field.one());
        m.set(alpha, high, p.m.mul(&p.l_inv).mul(&p.r_pow(2 + s as i64 - k as i64)));
        m.set(high, high, p.m.neg());
    }
    m
}

/// Builds the matrices by the block recursion on n, starting from the 1×1
/// matrix G_1(2) = (1/l); E_i and G_i^{-1} are derived from G_i.
pub fn build_matrices_recursive<F: Field>(n: usize, field: &F) -> Result<LKMatrices<F>, RingError> {
    check_n(n, 2);
    let p = Params::new(field)?;
    let mut gs = vec![Matrix::filled(1, 1, p.l_inv.clone())];
    for k in 3..=n {
        let mut next: Vec<Matrix<F::El>> =
            gs.par_iter().enumerate().map(|(idx, g)| first_kind(&p, g, idx + 1, k)).collect();
        next.push(second_kind(&p, k));
        gs = next;
    }
    let e: Vec<_> = gs.par_iter().map(|g| e_from_g(&p, g)).collect();
    let ginv = gs.par_iter().zip(&e).map(|(g, e)| ginv_from_g_e(&p, g, e)).collect();
    Ok(LKMatrices { n, params: p, g: gs, e, ginv })
}
