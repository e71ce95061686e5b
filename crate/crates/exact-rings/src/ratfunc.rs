//! Elements of the fraction field Q(l, r) (and of its subfield Q(r)).

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::RingError;
use crate::poly2::{self, Exp, Poly2};
use crate::Rational;

/// A reduced fraction `numerator / denominator` of polynomials in l and r.
///
/// Canonical form: numerator and denominator are coprime, the denominator's
/// lex-leading coefficient is 1, and zero is `0 / 1`. Structural equality is
/// therefore field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    num: Poly2,
    den: Poly2,
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement { num: Poly2::zero(), den: Poly2::one() }
    }

    pub fn one() -> Self {
        FieldElement { num: Poly2::one(), den: Poly2::one() }
    }

    pub fn from_int(c: i64) -> Self {
        FieldElement { num: Poly2::from_int(c), den: Poly2::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        FieldElement { num: Poly2::constant(c), den: Poly2::one() }
    }

    pub fn from_poly(p: Poly2) -> Self {
        FieldElement { num: p, den: Poly2::one() }
    }

    /// The parameter l.
    pub fn l() -> Self {
        FieldElement::from_poly(Poly2::l())
    }

    /// The parameter r.
    pub fn r() -> Self {
        FieldElement::from_poly(Poly2::r())
    }

    /// `m = 1/r - r`.
    pub fn m() -> Self {
        FieldElement::new(Poly2::one().sub(&Poly2::r().pow(2)), Poly2::r()).unwrap()
    }

    /// `x = 1 - (l - 1/l) / m`, the eigenvalue in `e_i^2 = x e_i`.
    pub fn x() -> Self {
        x_from(&FieldElement::l(), &FieldElement::r()).unwrap()
    }

    /// Builds and normalizes `num / den`.
    pub fn new(num: Poly2, den: Poly2) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(normalize(num, den))
    }

    pub fn numerator(&self) -> &Poly2 {
        &self.num
    }

    pub fn denominator(&self) -> &Poly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when l does not occur, i.e. the element lies in Q(r).
    pub fn is_free_of_l(&self) -> bool {
        self.num.is_free_of_l() && self.den.is_free_of_l()
    }

    /// Total number of stored terms, used as a size measure for pivoting.
    pub fn term_count(&self) -> usize {
        self.num.len() + self.den.len()
    }

    pub fn neg(&self) -> Self {
        FieldElement { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.add_signed(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add_signed(o, true)
    }

    fn add_signed(&self, o: &Self, negate: bool) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { o.neg() } else { o.clone() };
        }
        if self.den == o.den {
            let num = if negate { self.num.sub(&o.num) } else { self.num.add(&o.num) };
            if self.den.is_one() {
                return FieldElement { num, den: Poly2::one() };
            }
            return normalize(num, self.den.clone());
        }
        // Work over the lcm of the denominators to keep sizes down.
        let g = poly2::gcd(&self.den, &o.den);
        let (da, db) = if g.is_one() {
            (self.den.clone(), o.den.clone())
        } else {
            (self.den.div_exact(&g).expect("gcd divides"), o.den.div_exact(&g).expect("gcd divides"))
        };
        let left = self.num.mul(&db);
        let right = o.num.mul(&da);
        let num = if negate { left.sub(&right) } else { left.add(&right) };
        let den = self.den.mul(&db);
        normalize(num, den)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return FieldElement::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return FieldElement { num: self.num.mul(&o.num), den: Poly2::one() };
        }
        // Cross cancellation: gcd(a, d) and gcd(c, b) for (a/b)(c/d).
        let g1 = poly2::gcd(&self.num, &o.den);
        let g2 = poly2::gcd(&o.num, &self.den);
        let a = div_by(&self.num, &g1);
        let d = div_by(&o.den, &g1);
        let c = div_by(&o.num, &g2);
        let b = div_by(&self.den, &g2);
        finish(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(finish(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self, RingError> {
        Ok(self.mul(&o.inv()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, RingError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Ok(FieldElement { num: base.num.pow(e), den: base.den.pow(e) })
    }

    /// Substitutes `l := value` where `value` lies in Q(r).
    pub fn substitute_l(&self, value: &FieldElement) -> Result<FieldElement, RingError> {
        if self.num.is_free_of_l() && self.den.is_free_of_l() {
            return Ok(self.clone());
        }
        let d = self.num.deg_l().max(self.den.deg_l());
        let n = self.num.eval_l_fraction(&value.num, &value.den, d);
        let m = self.den.eval_l_fraction(&value.num, &value.den, d);
        if m.is_zero() {
            return Err(RingError::Pole { factor: format!("({})", self.den) });
        }
        Ok(normalize(n, m))
    }

    /// Canonical text form "(numerator)/(denominator)".
    pub fn to_canonical_string(&self) -> String {
        format!("({})/({})", self.num, self.den)
    }
}

fn div_by(p: &Poly2, g: &Poly2) -> Poly2 {
    if g.is_one() {
        p.clone()
    } else {
        p.div_exact(g).expect("gcd divides")
    }
}

/// Scales a coprime pair so that the denominator is lex-monic.
fn finish(num: Poly2, den: Poly2) -> FieldElement {
    let lc = den.leading().expect("nonzero denominator").1.clone();
    if lc.is_one() {
        return FieldElement { num, den };
    }
    let inv = lc.recip();
    FieldElement { num: num.scale(&inv), den: den.scale(&inv) }
}

/// Reduces `num / den` to canonical form.
fn normalize(num: Poly2, den: Poly2) -> FieldElement {
    if num.is_zero() {
        return FieldElement::zero();
    }
    if den.is_constant() {
        let c = den.leading().unwrap().1.clone();
        return FieldElement { num: num.scale(&c.recip()), den: Poly2::one() };
    }
    let (sn, mn, bn) = num.to_primitive_parts();
    let (sd, md, bd) = den.to_primitive_parts();
    let common: Exp = (mn.0.min(md.0), mn.1.min(md.1));
    let mn = (mn.0 - common.0, mn.1 - common.1);
    let md = (md.0 - common.0, md.1 - common.1);
    let (bn, bd) = if bn.is_integer_constant() || bd.is_integer_constant() {
        (bn, bd)
    } else {
        let g = bn.gcd(&bd);
        if g.is_integer_constant() {
            (bn, bd)
        } else {
            (bn.div_exact(&g).expect("gcd divides"), bd.div_exact(&g).expect("gcd divides"))
        }
    };
    let scale = sn / sd;
    let n = Poly2::from_parts(&scale, mn, &bn);
    let d = Poly2::from_parts(&Rational::one(), md, &bd);
    finish(n, d)
}

/// `x = 1 - (l - 1/l) / m` with `m = 1/r - r`, for arbitrary images of l, r.
pub fn x_from(l: &FieldElement, r: &FieldElement) -> Result<FieldElement, RingError> {
    let m = r.inv()?.sub(r);
    let t = l.sub(&l.inv()?).div(&m)?;
    Ok(FieldElement::one().sub(&t))
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl From<i64> for FieldElement {
    fn from(c: i64) -> Self {
        FieldElement::from_int(c)
    }
}

impl From<BigInt> for FieldElement {
    fn from(c: BigInt) -> Self {
        FieldElement::from_rational(Rational::from_integer(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_is_canonical() {
        assert_eq!(FieldElement::m().to_string(), "(1 - r^2)/(r)");
    }

    #[test]
    fn x_at_l_minus_r_cubed() {
        let r = FieldElement::r();
        let l = r.pow(3).unwrap().neg();
        let x = x_from(&l, &r).unwrap();
        // -(r^4 + 1) / r^2
        let expected = FieldElement::new(
            Poly2::from_int(-1).sub(&Poly2::r().pow(4)),
            Poly2::r().pow(2),
        )
        .unwrap();
        assert_eq!(x, expected);
    }

    #[test]
    fn inverse_law() {
        let l = FieldElement::l();
        let r = FieldElement::r();
        let a = l.mul(&l).sub(&r).div(&l.mul(&r.pow(3).unwrap())).unwrap();
        assert!(a.mul(&a.inv().unwrap()).is_one());
    }

    #[test]
    fn specialize_x_at_l_equals_r() {
        let x = FieldElement::x();
        assert_eq!(x.substitute_l(&FieldElement::r()).unwrap(), FieldElement::from_int(2));
    }
}
