//! Exact arithmetic substrate: rationals, sparse multivariate polynomials over
//! the `t`/`z` variable families, affine forms, and rational functions whose
//! denominators stay factored into affine forms.

mod affine;
mod poly;
mod ratfn;
mod text;
mod var;

pub use affine::AffineForm;
pub use poly::{Monomial, MultiPoly};
pub use ratfn::RationalFn;
pub use var::{Family, VarId};

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

/// Arbitrary-precision rational, always kept reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("no value supplied for variable {0}")]
    MissingVariable(VarId),
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not divisible by {divisor}")]
    NotDivisible { divisor: String },
    #[error("rational function does not reduce to a polynomial")]
    NotPolynomial,
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}
