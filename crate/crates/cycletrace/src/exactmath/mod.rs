//! Exact arithmetic and the number-theoretic special values consumed by the
//! trace formulas: arbitrary-precision rationals, Bernoulli numbers and
//! polynomials, Legendre polynomial coefficients, the Kronecker symbol, the
//! Moebius function, negative-exponent divisor sums, and the factorization
//! of a discriminant into fundamental part and conductor.
//!
//! # Conventions
//!
//! - Rationals are always kept in lowest terms with a positive denominator.
//! - Bernoulli numbers use the `B_1 = -1/2` convention, so that
//!   `B_k(x) = sum_j C(k,j) B_j x^(k-j)` are the standard Bernoulli
//!   polynomials and `B_k(0) = B_k`.
//! - Discriminants here are plain `i64`; only form coefficients, Pell
//!   solutions and rational values need arbitrary precision.

mod bernoulli;
mod discriminant;
mod legendre;
mod numtheory;

pub use bernoulli::{bernoulli_number, bernoulli_polynomial, BernoulliTable};
pub use discriminant::{
    factor_discriminant, is_discriminant, is_fundamental_discriminant, is_square,
    DiscriminantFactorization,
};
pub use legendre::{legendre_coeffs, LegendreCoeffs};
pub use numtheory::{divisor_sum_neg, divisors, factorize, kronecker_symbol, moebius};

use crate::{Error, Result};
use num_bigint::BigInt;

/// Exact rational numbers: arbitrary-precision numerator and positive
/// denominator, reduced after every operation.
pub type Rational = num_rational::BigRational;

/// `p/q` in lowest terms; division by zero is a typed error.
pub fn rational(p: i64, q: i64) -> Result<Rational> {
    if q == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(BigInt::from(p), BigInt::from(q)))
}

/// Integer as a rational.
pub fn rational_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact division with a typed error on a zero divisor.
pub fn try_div(a: &Rational, b: &Rational) -> Result<Rational> {
    use num_traits::Zero;
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Render a rational as a decimal-free `p/q` string (the denominator is
/// always printed, e.g. `4/1`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidInput(format!("cannot parse rational from {s:?}"));
    let mut parts = s.splitn(2, '/');
    let p: BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let q: BigInt = match parts.next() {
        Some(q) => q.trim().parse().map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    use num_traits::Zero;
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(p, q))
}
