//! The coefficient-field contract and its three implementations: the generic
//! field Q(l, r), Q(r) with l specialized, and cyclotomic quotients of Q[r].

use std::fmt;
use std::sync::Arc;

use crate::bareiss;
use crate::error::RingError;
use crate::matrix::Matrix;
use crate::ratfunc::FieldElement;
use crate::upoly::{reduce_into_quotient, QuotientElement, UPoly};

/// Elements of a coefficient field.
pub trait Scalar: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, RingError>;
    fn div(&self, o: &Self) -> Result<Self, RingError> {
        Ok(self.mul(&o.inv()?))
    }
    /// Size measure (stored term count) used for pivot selection.
    fn size(&self) -> usize;
    /// Canonical text form.
    fn canonical(&self) -> String;
}

impl Scalar for FieldElement {
    fn zero_like(&self) -> Self {
        FieldElement::zero()
    }
    fn one_like(&self) -> Self {
        FieldElement::one()
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn is_one(&self) -> bool {
        FieldElement::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        FieldElement::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        FieldElement::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        FieldElement::mul(self, o)
    }
    fn neg(&self) -> Self {
        FieldElement::neg(self)
    }
    fn inv(&self) -> Result<Self, RingError> {
        FieldElement::inv(self)
    }
    fn size(&self) -> usize {
        self.term_count()
    }
    fn canonical(&self) -> String {
        self.to_canonical_string()
    }
}

impl Scalar for QuotientElement {
    fn zero_like(&self) -> Self {
        QuotientElement::zero_like(self)
    }
    fn one_like(&self) -> Self {
        QuotientElement::one_like(self)
    }
    fn is_zero(&self) -> bool {
        QuotientElement::is_zero(self)
    }
    fn is_one(&self) -> bool {
        QuotientElement::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        QuotientElement::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        QuotientElement::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        QuotientElement::mul(self, o)
    }
    fn neg(&self) -> Self {
        QuotientElement::neg(self)
    }
    fn inv(&self) -> Result<Self, RingError> {
        QuotientElement::inv(self)
    }
    fn size(&self) -> usize {
        self.representative().coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count()
    }
    fn canonical(&self) -> String {
        self.to_canonical_string()
    }
}

/// Which field the parameters live in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// l and r independent indeterminates: Q(l, r).
    Generic,
    /// l replaced by an element of Q(r).
    LTo(FieldElement),
    /// l replaced by an element of Q(r), then r reduced modulo a monic
    /// modulus assumed irreducible over Q.
    LToAndQuotient(FieldElement, UPoly),
}

impl Specialization {
    /// Checks the structural invariants: the image of l is free of l, and a
    /// modulus is monic of positive degree.
    pub fn validate(&self) -> Result<(), RingError> {
        match self {
            Specialization::Generic => Ok(()),
            Specialization::LTo(f) => {
                if f.is_free_of_l() {
                    Ok(())
                } else {
                    Err(RingError::NotInQr)
                }
            }
            Specialization::LToAndQuotient(f, m) => {
                if !f.is_free_of_l() {
                    return Err(RingError::NotInQr);
                }
                if m.deg().unwrap_or(0) == 0 || !m.is_monic() {
                    return Err(RingError::InvalidModulus(format!(
                        "{m} must be monic of degree at least 1"
                    )));
                }
                Ok(())
            }
        }
    }

    /// Short human-readable label, e.g. `l -> (-r^3)/(1) mod (1 + r^8)`.
    pub fn label(&self) -> String {
        match self {
            Specialization::Generic => "generic".into(),
            Specialization::LTo(f) => format!("l -> {f}"),
            Specialization::LToAndQuotient(f, m) => format!("l -> {f} mod ({m})"),
        }
    }
}

/// A coefficient field together with the images of the parameters l and r.
pub trait Field: Clone + Send + Sync + fmt::Debug {
    type El: Scalar;

    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn int(&self, c: i64) -> Self::El;
    /// Image of the parameter l.
    fn l(&self) -> Self::El;
    /// Image of the parameter r.
    fn r(&self) -> Self::El;
    /// Image of a generic element of Q(l, r).
    fn embed(&self, a: &FieldElement) -> Result<Self::El, RingError>;
    fn specialization(&self) -> Specialization;

    /// `r^k` for any integer k.
    fn r_pow(&self, k: i64) -> Self::El {
        let base = if k < 0 { self.r().inv().expect("r is invertible") } else { self.r() };
        let mut acc = self.one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// `m = 1/r - r`.
    fn m(&self) -> Self::El {
        self.r_pow(-1).sub(&self.r())
    }

    /// `x = 1 - (l - 1/l)/m`.
    fn x(&self) -> Result<Self::El, RingError> {
        let l = self.l();
        let t = l.sub(&l.inv()?).div(&self.m())?;
        Ok(self.one().sub(&t))
    }

    /// Determinant; the default is Gaussian elimination over the field.
    fn determinant(&self, m: &Matrix<Self::El>) -> Result<Self::El, RingError> {
        bareiss::det_gauss(m, &self.zero(), &self.one())
    }

    /// Whether `(r^2)^k != 1` for `1 <= k <= n`; on failure the least
    /// violating k is returned.
    fn is_semisimple_point(&self, n: u32) -> (bool, Option<u32>) {
        let r2 = self.r().mul(&self.r());
        let mut p = self.one();
        for k in 1..=n {
            p = p.mul(&r2);
            if p.is_one() {
                return (false, Some(k));
            }
        }
        (true, None)
    }
}

/// Q(l, r) when `l_image` is `None`, otherwise Q(r) with l replaced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunctions {
    l_image: Option<FieldElement>,
}

impl RationalFunctions {
    pub fn generic() -> Self {
        RationalFunctions { l_image: None }
    }

    pub fn with_l(l: FieldElement) -> Result<Self, RingError> {
        if !l.is_free_of_l() {
            return Err(RingError::NotInQr);
        }
        Ok(RationalFunctions { l_image: Some(l) })
    }

    pub fn is_generic(&self) -> bool {
        self.l_image.is_none()
    }
}

impl Field for RationalFunctions {
    type El = FieldElement;

    fn zero(&self) -> FieldElement {
        FieldElement::zero()
    }
    fn one(&self) -> FieldElement {
        FieldElement::one()
    }
    fn int(&self, c: i64) -> FieldElement {
        FieldElement::from_int(c)
    }
    fn l(&self) -> FieldElement {
        self.l_image.clone().unwrap_or_else(FieldElement::l)
    }
    fn r(&self) -> FieldElement {
        FieldElement::r()
    }
    fn embed(&self, a: &FieldElement) -> Result<FieldElement, RingError> {
        match &self.l_image {
            None => Ok(a.clone()),
            Some(v) => a.substitute_l(v),
        }
    }
    fn specialization(&self) -> Specialization {
        match &self.l_image {
            None => Specialization::Generic,
            Some(v) => Specialization::LTo(v.clone()),
        }
    }
    fn r_pow(&self, k: i64) -> FieldElement {
        FieldElement::r().pow(k).expect("r is invertible")
    }
    fn determinant(&self, m: &Matrix<FieldElement>) -> Result<FieldElement, RingError> {
        Ok(bareiss::det_fraction_free(m))
    }
}

/// Q[r]/(modulus) with l replaced by an element of Q(r).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientField {
    l_expr: FieldElement,
    l_image: QuotientElement,
    modulus: Arc<UPoly>,
}

impl QuotientField {
    pub fn new(l: FieldElement, modulus: UPoly) -> Result<Self, RingError> {
        Specialization::LToAndQuotient(l.clone(), modulus.clone()).validate()?;
        let modulus = Arc::new(modulus);
        let l_image = reduce_into_quotient(&l, &modulus)?;
        Ok(QuotientField { l_expr: l, l_image, modulus })
    }

    pub fn modulus(&self) -> &UPoly {
        &self.modulus
    }
}

impl Field for QuotientField {
    type El = QuotientElement;

    fn zero(&self) -> QuotientElement {
        QuotientElement::new(UPoly::zero(), self.modulus.clone())
    }
    fn one(&self) -> QuotientElement {
        QuotientElement::new(UPoly::one(), self.modulus.clone())
    }
    fn int(&self, c: i64) -> QuotientElement {
        QuotientElement::new(UPoly::from_ints(&[c]), self.modulus.clone())
    }
    fn l(&self) -> QuotientElement {
        self.l_image.clone()
    }
    fn r(&self) -> QuotientElement {
        QuotientElement::new(UPoly::monomial(1), self.modulus.clone())
    }
    fn embed(&self, a: &FieldElement) -> Result<QuotientElement, RingError> {
        let in_qr = a.substitute_l(&self.l_expr)?;
        reduce_into_quotient(&in_qr, &self.modulus)
    }
    fn specialization(&self) -> Specialization {
        Specialization::LToAndQuotient(self.l_expr.clone(), (*self.modulus).clone())
    }
}

/// Applies a specialization to a generic element. For quotient targets the
/// result is the reduced representative, viewed as an element of Q(r).
pub fn specialize(a: &FieldElement, s: &Specialization) -> Result<FieldElement, RingError> {
    s.validate()?;
    match s {
        Specialization::Generic => Ok(a.clone()),
        Specialization::LTo(v) => a.substitute_l(v),
        Specialization::LToAndQuotient(v, m) => {
            let q = QuotientField::new(v.clone(), m.clone())?.embed(a)?;
            Ok(FieldElement::from_poly(q.representative().to_poly2()))
        }
    }
}

/// Runs code that is generic over the field selected at run time.
pub trait FieldVisitor {
    type Output;
    fn visit<F: Field>(self, field: &F) -> Self::Output;
}

/// Builds the field for `s` and hands it to the visitor.
pub fn with_field<V: FieldVisitor>(s: &Specialization, v: V) -> Result<V::Output, RingError> {
    s.validate()?;
    Ok(match s {
        Specialization::Generic => v.visit(&RationalFunctions::generic()),
        Specialization::LTo(f) => v.visit(&RationalFunctions::with_l(f.clone())?),
        Specialization::LToAndQuotient(f, m) => v.visit(&QuotientField::new(f.clone(), m.clone())?),
    })
}
