//! The determinant of T(n) and its factorization in l.

use std::fmt;

use exact_rings::{poly2, Field, FieldElement, Poly2, RationalFunctions};

use crate::{t_matrix, SizeGuard, SpectralError};

/// det T(n) over the given field. Symbolic determinants over Q(l, r) are
/// refused above the size guard.
pub fn det_t<F: Field>(n: usize, field: &F, guard: SizeGuard) -> Result<F::El, SpectralError> {
    assert!(n >= 2, "T(n) needs n >= 2");
    if field.specialization() == exact_rings::Specialization::Generic && n > guard.generic_max_n {
        return Err(SpectralError::SizeGuard { n, limit: guard.generic_max_n });
    }
    let t = t_matrix(n, field)?;
    Ok(field.determinant(&t)?)
}

/// One linear factor `l - root` of det T(n), with `root = ±r^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusFactor {
    pub root: FieldElement,
    pub multiplicity: u32,
}

impl LocusFactor {
    /// The factor `l - root` as an element of Q(l, r).
    pub fn factor(&self) -> FieldElement {
        FieldElement::l().sub(&self.root)
    }
}

/// det T(n) = Π factor^multiplicity · residual · scalar / l^l_denominator_power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusReport {
    pub n: usize,
    pub det: FieldElement,
    pub factors: Vec<LocusFactor>,
    /// What remains after the trial divisions, with its l-free content moved
    /// into `scalar`; equal to 1 when every root was found.
    pub residual: FieldElement,
    pub l_denominator_power: i64,
    /// Element of Q(r).
    pub scalar: FieldElement,
}

impl LocusReport {
    /// Multiplicity of `l - root` (0 when absent).
    pub fn multiplicity(&self, root: &FieldElement) -> u32 {
        self.factors.iter().find(|f| &f.root == root).map_or(0, |f| f.multiplicity)
    }

    /// Degree in l of the residual numerator.
    pub fn residual_l_degree(&self) -> u32 {
        self.residual.numerator().deg_l().max(self.residual.denominator().deg_l())
    }

    /// Total degree in l of the located factors.
    pub fn located_degree(&self) -> u32 {
        self.factors.iter().map(|f| f.multiplicity).sum()
    }

    /// The product of the reported pieces; equals `det` when the report is
    /// consistent.
    pub fn reconstruct(&self) -> FieldElement {
        let mut acc = self.residual.mul(&self.scalar);
        for f in &self.factors {
            acc = acc.mul(&f.factor().pow(f.multiplicity as i64).expect("positive power"));
        }
        acc.mul(&FieldElement::l().pow(-self.l_denominator_power).expect("l is invertible"))
    }
}

impl fmt::Display for LocusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        for fac in &self.factors {
            writeln!(f, "  l = {}  multiplicity {}", fac.root, fac.multiplicity)?;
        }
        writeln!(f, "  residual: {} (l-degree {})", self.residual, self.residual_l_degree())?;
        writeln!(f, "  l^-{}  scalar: {}", self.l_denominator_power, self.scalar)
    }
}

/// The candidate roots `ε r^k` with `|k| <= 2n - 3`, ordered by k then sign.
fn candidates(n: usize) -> Vec<FieldElement> {
    let bound = 2 * n as i64 - 3;
    let mut out = Vec::new();
    for k in -bound..=bound {
        let p = FieldElement::r().pow(k).expect("r is invertible");
        out.push(p.clone());
        out.push(p.neg());
    }
    out
}

/// Coefficients of the powers of l, each a polynomial in r.
fn l_coefficients(p: &Poly2) -> Vec<Poly2> {
    let mut out = vec![Poly2::zero(); p.deg_l() as usize + 1];
    for ((a, b), c) in p.terms() {
        let t = Poly2::monomial(c.clone(), (0, *b));
        out[*a as usize] = out[*a as usize].add(&t);
    }
    out
}

/// The gcd over Q[r] of the l-coefficients.
fn l_content(p: &Poly2) -> Poly2 {
    l_coefficients(p).iter().filter(|c| !c.is_zero()).fold(Poly2::zero(), |g, c| if g.is_zero() { c.clone() } else { poly2::gcd(&g, c) })
}

/// Factors det T(n) by trial division against `l - ε r^k`.
pub fn reducibility_locus(n: usize, guard: SizeGuard) -> Result<LocusReport, SpectralError> {
    let det = det_t(n, &RationalFunctions::generic(), guard)?;
    Ok(locus_of(n, det))
}

/// Factors a given element of Q(l, r) by trial division against the
/// candidates for T(n).
pub fn locus_of(n: usize, det: FieldElement) -> LocusReport {
    assert!(!det.is_zero(), "the determinant vanishes identically");
    let mut num = det.numerator().clone();
    let mut rest = det.clone();
    let mut factors = Vec::new();
    for root in candidates(n) {
        let f = FieldElement::l().sub(&root);
        let divisor = f.numerator().clone();
        let mut multiplicity = 0;
        while let Some(q) = num.div_exact(&divisor) {
            num = q;
            multiplicity += 1;
        }
        if multiplicity > 0 {
            rest = rest.div(&f.pow(multiplicity as i64).expect("positive power")).expect("factor is nonzero");
            factors.push(LocusFactor { root, multiplicity });
        }
    }
    let a = rest.numerator().min_exponents().0 as i64;
    let b = rest.denominator().min_exponents().0 as i64;
    let l_denominator_power = b - a;
    let rest = rest.mul(&FieldElement::l().pow(l_denominator_power).expect("l is invertible"));
    let scalar = FieldElement::new(l_content(rest.numerator()), l_content(rest.denominator())).expect("nonzero content");
    let residual = rest.div(&scalar).expect("nonzero scalar");
    let (residual, scalar) = if residual.is_free_of_l() {
        (FieldElement::one(), scalar.mul(&residual))
    } else {
        (residual, scalar)
    };
    LocusReport { n, det, factors, residual, l_denominator_power, scalar }
}
