//! Exact arithmetic: big rationals, integer polynomials and isolated real
//! algebraic numbers.
//!
//! Root isolation uses Sturm sequences over dyadic rational endpoints, so
//! every comparison made at a decision point is exact. Floating-point values
//! are carried along only for display.

mod algebraic;
mod poly;
pub mod sturm;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use algebraic::{
    compare_to_rational, deflate, factor_squarefree, integer_roots, isolate_real_roots,
    AlgebraicKind, AlgebraicValue,
};
pub use poly::{IntPoly, RatPoly};

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("undefined roots: zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
}

/// Shorthand for the rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
