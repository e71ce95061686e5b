//! Univariate polynomials in r over Q, cyclotomic polynomials, and the
//! quotient fields Q[r]/(f).

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::RingError;
use crate::poly2::Poly2;
use crate::ratfunc::FieldElement;
use crate::Rational;

/// Dense polynomial in r over Q, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly(Vec<Rational>);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn one() -> Self {
        UPoly(vec![Rational::one()])
    }

    pub fn from_coeffs(v: Vec<Rational>) -> Self {
        let mut p = UPoly(v);
        p.trim();
        p
    }

    pub fn from_ints(v: &[i64]) -> Self {
        UPoly::from_coeffs(v.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect())
    }

    /// `r^k`.
    pub fn monomial(k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = Rational::one();
        UPoly(v)
    }

    fn trim(&mut self) {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn deg(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> &Rational {
        self.0.last().expect("leading coefficient of zero")
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.lc().is_one()
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let mut v = self.0.clone();
        v.resize(n, Rational::zero());
        for (a, b) in v.iter_mut().zip(o.0.iter()) {
            *a += b;
        }
        UPoly::from_coeffs(v)
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(v)
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        UPoly::from_coeffs(self.0.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, d: &UPoly) -> Result<(UPoly, UPoly), RingError> {
        let Some(dd) = d.deg() else { return Err(RingError::DivisionByZero) };
        let mut rem = self.0.clone();
        if self.0.len() <= dd {
            return Ok((UPoly::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); self.0.len() - dd];
        let inv_lc = d.lc().recip();
        for k in (0..q.len()).rev() {
            let t = &rem[k + dd] * &inv_lc;
            if t.is_zero() {
                continue;
            }
            for (j, b) in d.0.iter().enumerate() {
                rem[k + j] -= &t * b;
            }
            q[k] = t;
        }
        rem.truncate(dd);
        Ok((UPoly::from_coeffs(q), UPoly::from_coeffs(rem)))
    }

    pub fn rem(&self, d: &UPoly) -> Result<UPoly, RingError> {
        Ok(self.div_rem(d)?.1)
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let inv = a.lc().recip();
            a.scale(&inv)
        }
    }

    /// Extended Euclid: returns `(g, s)` with `s * self ≡ g (mod m)` and `g`
    /// the monic gcd of `self` and `m`.
    pub fn gcd_inverse(&self, m: &UPoly) -> (UPoly, UPoly) {
        let (mut r0, mut r1) = (m.clone(), self.rem(m).expect("nonzero modulus"));
        let (mut s0, mut s1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        let inv = r0.lc().recip();
        (r0.scale(&inv), s0.scale(&inv))
    }

    pub fn to_poly2(&self) -> Poly2 {
        Poly2::from_terms(self.0.iter().enumerate().map(|(k, c)| ((0, k as u32), c.clone())))
    }

    /// Converts a polynomial free of l; fails when l occurs.
    pub fn from_poly2(p: &Poly2) -> Option<UPoly> {
        if !p.is_free_of_l() {
            return None;
        }
        let mut v = vec![Rational::zero(); p.deg_r() as usize + 1];
        for ((_, b), c) in p.terms() {
            v[*b as usize] = c.clone();
        }
        Some(UPoly::from_coeffs(v))
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_poly2().fmt(f)
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

/// The m-th cyclotomic polynomial, computed by dividing `r^m - 1` by the
/// cyclotomic polynomials of the proper divisors of m.
pub fn cyclotomic(m: u32) -> UPoly {
    assert!(m >= 1, "cyclotomic index must be positive");
    let mut p = UPoly::monomial(m as usize).sub(&UPoly::one());
    for d in 1..m {
        if m % d == 0 {
            let (q, rem) = p.div_rem(&cyclotomic(d)).expect("nonzero divisor");
            debug_assert!(rem.is_zero());
            p = q;
        }
    }
    p
}

/// Element of Q[r]/(f) for a monic modulus f, stored as its reduced
/// representative of degree below deg f.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuotientElement {
    rep: UPoly,
    modulus: Arc<UPoly>,
}

impl QuotientElement {
    pub fn new(p: UPoly, modulus: Arc<UPoly>) -> Self {
        let rep = p.rem(&modulus).expect("nonzero modulus");
        QuotientElement { rep, modulus }
    }

    pub fn representative(&self) -> &UPoly {
        &self.rep
    }

    pub fn modulus(&self) -> &Arc<UPoly> {
        &self.modulus
    }

    pub fn zero_like(&self) -> Self {
        QuotientElement { rep: UPoly::zero(), modulus: self.modulus.clone() }
    }

    pub fn one_like(&self) -> Self {
        QuotientElement::new(UPoly::one(), self.modulus.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.is_one()
    }

    pub fn neg(&self) -> Self {
        QuotientElement { rep: self.rep.neg(), modulus: self.modulus.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        QuotientElement { rep: self.rep.add(&o.rep), modulus: self.modulus.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        QuotientElement { rep: self.rep.sub(&o.rep), modulus: self.modulus.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        QuotientElement::new(self.rep.mul(&o.rep), self.modulus.clone())
    }

    /// Inverse; fails with the gcd found when the element is a zero divisor.
    pub fn inv(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let (g, s) = self.rep.gcd_inverse(&self.modulus);
        if !g.is_one() {
            return Err(RingError::NotInvertible { gcd: g.to_string() });
        }
        Ok(QuotientElement::new(s, self.modulus.clone()))
    }

    /// Canonical text form "(representative)/(1)".
    pub fn to_canonical_string(&self) -> String {
        format!("({})/(1)", self.rep)
    }
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl fmt::Debug for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod ({})", self.to_canonical_string(), self.modulus)
    }
}

/// Maps an element of Q(r) into Q[r]/(f).
pub fn reduce_into_quotient(a: &FieldElement, modulus: &Arc<UPoly>) -> Result<QuotientElement, RingError> {
    let num = UPoly::from_poly2(a.numerator()).ok_or(RingError::NotInQr)?;
    let den = UPoly::from_poly2(a.denominator()).ok_or(RingError::NotInQr)?;
    let n = QuotientElement::new(num, modulus.clone());
    let d = QuotientElement::new(den.clone(), modulus.clone());
    if d.is_zero() {
        return Err(RingError::Pole { factor: format!("({})", den) });
    }
    let dinv = d.inv().map_err(|e| match e {
        RingError::NotInvertible { gcd } => RingError::Pole { factor: format!("({}) sharing factor ({})", den, gcd) },
        other => other,
    })?;
    Ok(n.mul(&dinv))
}
