//! The exact Legendre polynomial term of the trace formula.

use crate::exactmath::{legendre_coeffs, Rational};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

/// Exact rational value of
/// `sqrt(|d|) * 4 (i sqrt(D))^(k-1) * P_{k-1}(i q / (sqrt(|d|) sqrt(D)))`
/// for even `k`, where `q` is the integer pairing numerator.
///
/// `P_{k-1}` is odd, so only odd powers `x^(2j+1)` occur and the term
/// collapses to the manifestly rational sum
/// `4 * sum_j p_{2j+1} (-1)^(k/2+j) D^((k-2-2j)/2) q^(2j+1) |d|^(-j)`:
/// every exponent of `D` and `|d|` is a nonnegative integer by parity.
pub fn legendre_term(k: u32, d: i64, q_num: &BigInt, cm_disc: i64) -> Result<Rational> {
    if k < 2 || k % 2 != 0 {
        return Err(Error::OddWeight(k));
    }
    let poly = legendre_coeffs((k - 1) as usize);
    let d_abs = BigInt::from(-cm_disc);
    let big_d = BigInt::from(d);
    let mut acc = Rational::zero();
    for j in 0..=(k - 2) / 2 {
        let p = &poly.coeffs[(2 * j + 1) as usize];
        if p.is_zero() {
            continue;
        }
        let sign = if (k / 2 + j) % 2 == 0 { 1 } else { -1 };
        let d_pow = big_d.pow((k - 2 - 2 * j) / 2);
        let q_pow = q_num.pow(2 * j + 1);
        let term = Rational::new(BigInt::from(sign) * d_pow * q_pow, d_abs.pow(j));
        acc += p * term;
    }
    Ok(acc * Rational::from_integer(BigInt::from(4)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rational, rational_int};

    #[test]
    fn weight_two_term() {
        // P_1(x) = x: the sqrt(3) factors cancel, leaving -4 q
        assert_eq!(
            legendre_term(2, 5, &BigInt::from(1), -3).unwrap(),
            rational_int(-4)
        );
    }

    #[test]
    fn vanishes_at_zero_pairing() {
        for k in [2u32, 4, 6, 8] {
            assert_eq!(
                legendre_term(k, 5, &BigInt::from(0), -3).unwrap(),
                rational_int(0)
            );
        }
    }

    #[test]
    fn weight_four_term() {
        // hand expansion of -2 (5 Q^3 + 3 D Q) sqrt(3) at Q = 1/sqrt(3),
        // D = 5: -2 (5/3 + 15) = -100/3
        assert_eq!(
            legendre_term(4, 5, &BigInt::from(1), -3).unwrap(),
            rational(-100, 3).unwrap()
        );
    }

    #[test]
    fn odd_weight_rejected() {
        assert!(matches!(
            legendre_term(3, 5, &BigInt::from(1), -3),
            Err(Error::OddWeight(3))
        ));
    }
}
