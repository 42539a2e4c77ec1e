//! Exact-vs-numeric comparison reports.

use crate::exactmath::Rational;
use num_traits::{ToPrimitive, Zero};

/// Outcome of comparing an exact rational against a numeric value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompareReport {
    pub pass: bool,
    pub abs_diff: f64,
    pub rel_diff: f64,
}

/// Passes iff the relative difference is below `rel_tol`; when the exact
/// value is zero the absolute difference is used instead.
pub fn compare(exact: &Rational, numeric: f64, rel_tol: f64) -> CompareReport {
    let exact_f = exact.to_f64().unwrap_or(f64::NAN);
    let abs_diff = (exact_f - numeric).abs();
    if exact.is_zero() {
        return CompareReport {
            pass: abs_diff < rel_tol,
            abs_diff,
            rel_diff: abs_diff,
        };
    }
    let rel_diff = abs_diff / exact_f.abs();
    CompareReport {
        pass: rel_diff < rel_tol,
        abs_diff,
        rel_diff,
    }
}
