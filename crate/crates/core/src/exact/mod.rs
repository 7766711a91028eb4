//! Exact arithmetic in one formal variable.
//!
//! Everything downstream works over the rationals: scalars are
//! [`num_rational::BigRational`] values (always in lowest terms with a positive
//! denominator), polynomials are dense coefficient vectors, rational functions
//! are kept in a canonical reduced form so that equality is structural, and
//! truncated power series carry their truncation order explicitly.

pub mod matrix;
pub mod poly;
pub mod ratfun;
pub mod series;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use poly::{Polynomial, Var};
pub use ratfun::{rf_arith, RationalFunction, RfOp};
pub use series::{first_negative_coefficient, series_expand, TruncatedSeries};

/// An exact rational number.
pub type Scalar = BigRational;

/// Shorthand for an integer-valued [`Scalar`].
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `num / den`.
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("pole at origin: denominator has zero constant term")]
    PoleAtOrigin,
    #[error("division by zero")]
    DivisionByZero,
    #[error("series division by a series with zero constant term")]
    ZeroConstantTerm,
}
