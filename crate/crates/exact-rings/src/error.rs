//! Error type shared by all ring and field operations.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible in the quotient ring: its gcd with the modulus is {gcd}")]
    NotInvertible { gcd: String },
    #[error("pole: the denominator factor {factor} vanishes under the specialization")]
    Pole { factor: String },
    #[error("element depends on l and has no image in Q(r)")]
    NotInQr,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
}
