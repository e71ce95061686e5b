//! Closed-form action of ν(g_i), ν(e_i) and ν(g_i)^{-1} on a basis vector x_β.

use exact_rings::{Field, RingError, Scalar};
use root_system::{Dir, RootIndex};

/// Image of one basis vector: a sparse combination of basis vectors, sorted
/// by root position, with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseColumn<E> {
    entries: Vec<(RootIndex, E)>,
}

impl<E: Scalar> SparseColumn<E> {
    pub fn new() -> Self {
        SparseColumn { entries: Vec::new() }
    }

    /// Adds `c * x_root`, merging with an existing entry.
    pub fn push(&mut self, root: RootIndex, c: E) {
        match self.entries.binary_search_by(|(r, _)| r.cmp(&root)) {
            Ok(k) => {
                let v = self.entries[k].1.add(&c);
                if v.is_zero() {
                    self.entries.remove(k);
                } else {
                    self.entries[k].1 = v;
                }
            }
            Err(k) => {
                if !c.is_zero() {
                    self.entries.insert(k, (root, c));
                }
            }
        }
    }

    pub fn entries(&self) -> &[(RootIndex, E)] {
        &self.entries
    }

    pub fn get(&self, root: RootIndex) -> Option<&E> {
        self.entries.binary_search_by(|(r, _)| r.cmp(&root)).ok().map(|k| &self.entries[k].1)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl<E: Scalar> Default for SparseColumn<E> {
    fn default() -> Self {
        SparseColumn::new()
    }
}

/// The six mutually exclusive situations of a root β relative to α_i.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NuCase {
    /// `2(β|α_i) = 0`.
    Orthogonal,
    /// `β = α_i`.
    Simple,
    /// `2(β|α_i) = 1` and `β - α_i ≻ α_i`.
    DownAfter,
    /// `2(β|α_i) = 1` and `β - α_i ≺ α_i`.
    DownBefore,
    /// `2(β|α_i) = -1` and `β ≻ α_i`.
    UpAfter,
    /// `2(β|α_i) = -1` and `β ≺ α_i`.
    UpBefore,
}

/// Selects the case for the pair (i, β).
pub fn nu_case(i: usize, beta: RootIndex) -> NuCase {
    let alpha = RootIndex::simple(i);
    match beta.inner2(i) {
        0 => NuCase::Orthogonal,
        2 => NuCase::Simple,
        1 => {
            let lower = beta.shift(i, Dir::Minus).expect("inner product 1 allows β - α_i");
            if alpha.precedes(&lower) {
                NuCase::DownAfter
            } else {
                NuCase::DownBefore
            }
        }
        -1 => {
            if alpha.precedes(&beta) {
                NuCase::UpAfter
            } else {
                NuCase::UpBefore
            }
        }
        v => unreachable!("inner product {v} out of range"),
    }
}

/// Parameters of the representation in a chosen field, with the derived
/// quantities m, x, 1/l precomputed.
#[derive(Clone, Debug)]
pub struct Params<F: Field> {
    pub field: F,
    pub l: F::El,
    pub l_inv: F::El,
    pub r: F::El,
    pub m: F::El,
    pub x: F::El,
}

impl<F: Field> Params<F> {
    /// Fails when l = 0 or m = 0 in the target field.
    pub fn new(field: &F) -> Result<Self, RingError> {
        let l = field.l();
        let l_inv = l.inv()?;
        let m = field.m();
        if m.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let x = field.x()?;
        Ok(Params { field: field.clone(), l, l_inv, r: field.r(), m, x })
    }

    pub fn r_pow(&self, k: i64) -> F::El {
        self.field.r_pow(k)
    }
}

fn height(beta: RootIndex) -> i64 {
    beta.height() as i64
}

/// ν(g_i)(x_β).
pub fn nu_action<F: Field>(p: &Params<F>, i: usize, beta: RootIndex) -> SparseColumn<F::El> {
    let alpha = RootIndex::simple(i);
    let ht = height(beta);
    let mut col = SparseColumn::new();
    match nu_case(i, beta) {
        NuCase::Orthogonal => col.push(beta, p.r.clone()),
        NuCase::Simple => col.push(beta, p.l_inv.clone()),
        NuCase::DownAfter => col.push(beta.shift(i, Dir::Minus).unwrap(), p.field.one()),
        NuCase::DownBefore => {
            col.push(beta.shift(i, Dir::Minus).unwrap(), p.field.one());
            col.push(alpha, p.m.mul(&p.l_inv).mul(&p.r_pow(2 - ht)));
            col.push(beta, p.m.neg());
        }
        NuCase::UpAfter => {
            col.push(beta.shift(i, Dir::Plus).unwrap(), p.field.one());
            col.push(alpha, p.m.mul(&p.r_pow(ht - 1)));
            col.push(beta, p.m.neg());
        }
        NuCase::UpBefore => col.push(beta.shift(i, Dir::Plus).unwrap(), p.field.one()),
    }
    col
}

/// Coefficient c with ν(e_i)(x_β) = c·x_{α_i}.
pub fn nu_e_coeff<F: Field>(p: &Params<F>, i: usize, beta: RootIndex) -> F::El {
    let ht = height(beta);
    match nu_case(i, beta) {
        NuCase::Orthogonal => p.field.zero(),
        NuCase::Simple => p.x.clone(),
        NuCase::DownAfter => p.l.mul(&p.r_pow(ht - 2)),
        NuCase::DownBefore => p.l_inv.mul(&p.r_pow(2 - ht)),
        NuCase::UpAfter => p.r_pow(ht - 1),
        NuCase::UpBefore => p.r_pow(1 - ht),
    }
}

/// ν(e_i)(x_β).
pub fn nu_e_action<F: Field>(p: &Params<F>, i: usize, beta: RootIndex) -> SparseColumn<F::El> {
    let mut col = SparseColumn::new();
    col.push(RootIndex::simple(i), nu_e_coeff(p, i, beta));
    col
}

/// ν(g_i)^{-1}(x_β).
pub fn nu_inv_action<F: Field>(p: &Params<F>, i: usize, beta: RootIndex) -> SparseColumn<F::El> {
    let alpha = RootIndex::simple(i);
    let ht = height(beta);
    let mut col = SparseColumn::new();
    match nu_case(i, beta) {
        NuCase::Orthogonal => col.push(beta, p.r_pow(-1)),
        NuCase::Simple => col.push(beta, p.l.clone()),
        NuCase::DownAfter => {
            col.push(beta.shift(i, Dir::Minus).unwrap(), p.field.one());
            col.push(alpha, p.m.mul(&p.l).mul(&p.r_pow(ht - 2)).neg());
            col.push(beta, p.m.clone());
        }
        NuCase::DownBefore => col.push(beta.shift(i, Dir::Minus).unwrap(), p.field.one()),
        NuCase::UpAfter => col.push(beta.shift(i, Dir::Plus).unwrap(), p.field.one()),
        NuCase::UpBefore => {
            col.push(beta.shift(i, Dir::Plus).unwrap(), p.field.one());
            col.push(alpha, p.m.mul(&p.r_pow(1 - ht)).neg());
            col.push(beta, p.m.clone());
        }
    }
    col
}
