//! Exact arithmetic over Q, the polynomial rings Q[l, r] and Z[l, r], the
//! fraction field Q(l, r), its subfield Q(r), and cyclotomic quotient fields
//! Q[r]/(Φ_m).
//!
//! Downstream code is written against the [`Field`] trait, which fixes the
//! images of the two parameters l and r and supplies the arithmetic of the
//! chosen coefficient field.

pub mod bareiss;
pub mod error;
pub mod field;
pub mod matrix;
pub mod parse;
pub mod poly2;
pub mod ratfunc;
pub mod upoly;
pub mod zpoly;

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;

pub use error::RingError;
pub use field::{specialize, with_field, Field, FieldVisitor, QuotientField, RationalFunctions, Scalar, Specialization};
pub use matrix::Matrix;
pub use parse::parse_element;
pub use poly2::Poly2;
pub use ratfunc::FieldElement;
pub use upoly::{cyclotomic, QuotientElement, UPoly};
