//! Numeric evaluation of `c_k(D)` from its `L`-series definition
//!
//! ```text
//! c_k(D) = D^(k-1/2) zeta(k) / (2^(k-3) (2k-1) zeta(2k))
//!          * L_{D0}(k) * sum_{m|f} mu(m) (D0/m) m^(-k) sigma_{1-2k}(f/m)
//! ```
//!
//! independent of the finite Bernoulli form: only `L_{D0}(k)` is
//! truncated. The zeta values at even arguments are exact via Bernoulli
//! numbers, and the character partial sums are bounded, so `n_terms =
//! 10^5` already gives far better than 1e-8 relative accuracy for the
//! small `D0` in play.

use crate::exactmath::{bernoulli_number, factor_discriminant, kronecker_symbol};
use crate::traces::conductor_sum;
use crate::{Error, Result};
use num_traits::ToPrimitive;

/// `zeta(k)` for even `k >= 2` via `(2 pi)^k |B_k| / (2 k!)`.
pub fn zeta_even(k: u32) -> f64 {
    assert!(k >= 2 && k % 2 == 0, "zeta_even requires even k >= 2");
    let bk = bernoulli_number(k as usize)
        .to_f64()
        .expect("Bernoulli number converts to f64")
        .abs();
    let mut factorial = 1.0f64;
    for i in 2..=k {
        factorial *= i as f64;
    }
    (2.0 * std::f64::consts::PI).powi(k as i32) * bk / (2.0 * factorial)
}

/// Truncated Dirichlet series `L_{D0}(k) = sum_{n>=1} (D0/n) n^(-k)`.
fn l_series(d0: i64, k: u32, n_terms: usize) -> f64 {
    let mut acc = 0.0f64;
    for n in 1..=n_terms as i64 {
        let chi = kronecker_symbol(d0, n);
        if chi != 0 {
            acc += chi as f64 / (n as f64).powi(k as i32);
        }
    }
    acc
}

/// Numeric `c_k(D)` with `L_{D0}(k)` truncated at `n_terms` (at least
/// 100); everything else exact or machine precision.
pub fn ck_numeric(k: u32, d: i64, n_terms: usize) -> Result<f64> {
    if k < 2 || k % 2 != 0 {
        return Err(Error::OddWeight(k));
    }
    if n_terms < 100 {
        return Err(Error::InvalidInput(
            "ck_numeric requires at least 100 series terms".into(),
        ));
    }
    let fac = factor_discriminant(d)?;
    let front = (d as f64).powf(k as f64 - 0.5) * zeta_even(k)
        / (2f64.powi(k as i32 - 3) * (2 * k - 1) as f64 * zeta_even(2 * k));
    let msum = conductor_sum(fac.d0, fac.f, k)
        .to_f64()
        .expect("conductor sum converts to f64");
    Ok(front * l_series(fac.d0, k, n_terms) * msum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn zeta_values() {
        let pi = std::f64::consts::PI;
        assert_abs_diff_eq!(zeta_even(2), pi * pi / 6.0, epsilon = 1e-14);
        assert_abs_diff_eq!(zeta_even(4), pi.powi(4) / 90.0, epsilon = 1e-13);
        assert_abs_diff_eq!(zeta_even(8), pi.powi(8) / 9450.0, epsilon = 1e-10);
    }

    #[test]
    fn worked_value() {
        let v = ck_numeric(2, 5, 100_000).unwrap();
        assert!((v - 8.0).abs() / 8.0 < 1e-8, "c_2(5) = {v}");
    }

    #[test]
    fn derived_weight_four_value() {
        let v = ck_numeric(4, 5, 100_000).unwrap();
        assert!((v - 20.0).abs() / 20.0 < 1e-8, "c_4(5) = {v}");
    }

    #[test]
    fn trivial_conductor_has_unit_divisor_sum() {
        assert_eq!(conductor_sum(13, 1, 2).to_f64().unwrap(), 1.0);
    }
}
