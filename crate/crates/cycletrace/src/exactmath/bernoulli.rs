//! Bernoulli numbers and polynomials, exact.
//!
//! `B_n` is defined by the recurrence `sum_{j=0}^{n} C(n+1,j) B_j = 0` for
//! `n >= 1` with `B_0 = 1`, which yields `B_1 = -1/2`. Degrees needed by the
//! trace formulas are at most `2k`, so the quadratic-cost recurrence with a
//! shared memo table is plenty.

use super::Rational;
use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;
use std::sync::Mutex;

/// Memo table of `B_0 .. B_n`; index `n` holds `B_n`.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn new() -> Self {
        BernoulliTable {
            values: vec![Rational::from_integer(BigInt::from(1))],
        }
    }

    /// `B_n`, extending the table as needed.
    pub fn get(&mut self, n: usize) -> Rational {
        self.extend_to(n);
        self.values[n].clone()
    }

    fn extend_to(&mut self, n: usize) {
        while self.values.len() <= n {
            let m = self.values.len();
            // C(m+1,m) B_m = -sum_{j<m} C(m+1,j) B_j
            let mut acc = Rational::zero();
            for (j, bj) in self.values.iter().enumerate() {
                let coeff = binomial(BigInt::from(m + 1), BigInt::from(j));
                acc += Rational::from_integer(coeff) * bj;
            }
            let bm = -acc / Rational::from_integer(BigInt::from(m + 1));
            self.values.push(bm);
        }
    }
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self::new()
    }
}

static CACHE: Mutex<Option<BernoulliTable>> = Mutex::new(None);

/// `B_n` with the `B_1 = -1/2` convention. Concurrent fills of the shared
/// table are idempotent: the lock is held across the extension.
pub fn bernoulli_number(n: usize) -> Rational {
    let mut guard = CACHE.lock().expect("bernoulli cache poisoned");
    guard.get_or_insert_with(BernoulliTable::new).get(n)
}

/// Bernoulli polynomial `B_k(x) = sum_{j=0}^{k} C(k,j) B_j x^(k-j)`, exact.
pub fn bernoulli_polynomial(k: usize, x: &Rational) -> Rational {
    // Horner in x over descending j keeps the intermediate degree small:
    // B_k(x) = (((B_k_coeff0 * x + ...)) ...). Evaluate straightforwardly;
    // k stays tiny in every caller.
    let mut sum = Rational::zero();
    let mut xpow = Rational::from_integer(BigInt::from(1));
    for j in (0..=k).rev() {
        // term for B_j carries x^(k-j); iterate j = k down to 0 so the
        // power of x grows by one each step.
        let coeff = binomial(BigInt::from(k), BigInt::from(j));
        sum += Rational::from_integer(coeff) * bernoulli_number(j) * &xpow;
        xpow *= x;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rational, rational_int};

    #[test]
    fn base_values() {
        assert_eq!(bernoulli_number(0), rational_int(1));
        assert_eq!(bernoulli_number(1), rational(-1, 2).unwrap());
        // B_4 = -1/30: solving the recurrence by hand for n <= 4 gives
        // B_2 = 1/6, B_3 = 0, then 5 B_4 + 10/6 - 10/2 + 5/2 + 1 = 0.
        assert_eq!(bernoulli_number(4), rational(-1, 30).unwrap());
    }

    #[test]
    fn odd_indices_vanish() {
        for n in (3..=29).step_by(2) {
            assert_eq!(bernoulli_number(n), rational_int(0), "B_{n} != 0");
        }
    }

    #[test]
    fn defining_recurrence_holds_to_30() {
        for n in 1..=30usize {
            let mut acc = Rational::zero();
            for j in 0..=n {
                let c = binomial(BigInt::from(n + 1), BigInt::from(j));
                acc += Rational::from_integer(c) * bernoulli_number(j);
            }
            assert_eq!(acc, Rational::zero(), "recurrence fails at n = {n}");
        }
    }

    #[test]
    fn polynomial_values() {
        // B_1(x) = x - 1/2
        assert_eq!(
            bernoulli_polynomial(1, &rational_int(0)),
            rational(-1, 2).unwrap()
        );
        // B_2(x) = x^2 - x + 1/6 at x = 1/2
        assert_eq!(
            bernoulli_polynomial(2, &rational(1, 2).unwrap()),
            rational(-1, 12).unwrap()
        );
    }

    #[test]
    fn polynomial_at_zero_is_bernoulli_number() {
        for k in (0..=12usize).filter(|&k| k != 1) {
            assert_eq!(bernoulli_polynomial(k, &rational_int(0)), bernoulli_number(k));
        }
    }
}
