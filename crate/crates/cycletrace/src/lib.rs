//! Exact rational traces of cycle integrals of meromorphic modular forms.
//!
//! For a positive-definite class `A` of discriminant `d < 0` and even
//! `k >= 2`, the meromorphic cusp form
//! `f_{k,A}(z) = |d|^((k+1)/2)/pi * sum_{Q in A} Q(z,1)^(-k)`
//! has traces of cycle integrals over the closed geodesics of a positive
//! non-square discriminant `D` which evaluate to explicit rational
//! numbers. This crate computes them exactly:
//!
//! - [`exactmath`]: arbitrary-precision rationals, Bernoulli numbers and
//!   polynomials, Legendre coefficients, Kronecker symbol, Moebius,
//!   divisor sums, `D = D0 f^2`.
//! - [`quadforms`]: binary quadratic forms, reduction and equivalence,
//!   CM points, Pell solutions, automorphs, class representatives.
//! - [`traces`]: the exact engine: the rational constant `c_k(D)`, the
//!   finite enumeration of interior forms, Legendre terms, single-`D`
//!   traces for `k` in `{2, 4}`, and general-`k` linear combinations.
//! - [`oracle`]: a floating-point cross-check: truncated orbit sums for
//!   `f_{k,A}`, Gauss-Legendre quadrature over closed geodesics, and the
//!   `L`-series form of `c_k(D)`.
//! - [`cli`]: the `cycletrace` command-line front end.
//!
//! Start with the `examples/` directory: each file exercises one
//! capability end to end.

pub mod cli;
pub mod exactmath;
pub mod oracle;
pub mod quadforms;
pub mod traces;

mod error;

pub use error::{Error, Result};
pub use exactmath::Rational;
pub use quadforms::{BinaryQuadraticForm, Matrix2};
pub use traces::{TraceRequest, TraceResult};
