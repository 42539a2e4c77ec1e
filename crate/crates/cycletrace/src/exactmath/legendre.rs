//! Exact coefficients of Legendre polynomials.

use super::Rational;
use num_bigint::BigInt;
use num_traits::Zero;

/// Coefficients of `P_n`; index `j` holds the coefficient of `x^j`.
/// `P_n` has the parity of `n`, so every other entry is zero, and the
/// coefficients sum to `P_n(1) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegendreCoeffs {
    pub degree: usize,
    pub coeffs: Vec<Rational>,
}

impl LegendreCoeffs {
    /// Evaluate `P_n(x)` exactly.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// `P_n` via the three-term recurrence
/// `(n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}` seeded with `P_0 = 1`,
/// `P_1 = x`.
pub fn legendre_coeffs(n: usize) -> LegendreCoeffs {
    let one = Rational::from_integer(BigInt::from(1));
    let mut prev = vec![one.clone()]; // P_0
    if n == 0 {
        return LegendreCoeffs { degree: 0, coeffs: prev };
    }
    let mut curr = vec![Rational::zero(), one]; // P_1 = x
    for m in 1..n {
        // next = ((2m+1) x curr - m prev) / (m+1)
        let mut next = vec![Rational::zero(); m + 2];
        let lead = Rational::new(BigInt::from(2 * m + 1), BigInt::from(m + 1));
        for (j, c) in curr.iter().enumerate() {
            next[j + 1] += &lead * c;
        }
        let drag = Rational::new(BigInt::from(m), BigInt::from(m + 1));
        for (j, c) in prev.iter().enumerate() {
            next[j] -= &drag * c;
        }
        prev = std::mem::replace(&mut curr, next);
    }
    LegendreCoeffs { degree: n, coeffs: curr }
}
