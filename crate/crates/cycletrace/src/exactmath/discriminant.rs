//! Discriminant shape checks and the factorization `D = D0 * f^2` into a
//! fundamental discriminant and conductor.

use super::numtheory::factorize;
use crate::{Error, Result};

/// `D = D0 * f^2` with `D0` fundamental.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscriminantFactorization {
    pub d: i64,
    pub d0: i64,
    pub f: i64,
}

/// Is `d` congruent to 0 or 1 mod 4?
pub fn is_discriminant(d: i64) -> bool {
    matches!(d.rem_euclid(4), 0 | 1)
}

/// Is `n` a perfect square (including 0)?
pub fn is_square(n: i64) -> bool {
    if n < 0 {
        return false;
    }
    // widen before squaring: the float seed can be off by one at the
    // top of the i64 range
    let s = (n as f64).sqrt() as i128;
    (s - 1..=s + 1).any(|r| r >= 0 && r * r == n as i128)
}

/// Fundamental means `d0 = 1 mod 4` squarefree, or `d0 = 4m` with
/// `m = 2, 3 mod 4` squarefree.
pub fn is_fundamental_discriminant(d0: i64) -> bool {
    if d0 == 0 {
        return false;
    }
    let squarefree = |n: i64| factorize(n.abs()).into_iter().all(|(_, e)| e == 1);
    if d0.rem_euclid(4) == 1 {
        return squarefree(d0);
    }
    if d0 % 4 == 0 {
        let m = d0 / 4;
        return matches!(m.rem_euclid(4), 2 | 3) && squarefree(m);
    }
    false
}

/// Unique `(D0, f)` with `D = D0 f^2`, `D0` fundamental, for positive
/// `D = 0, 1 mod 4`.
pub fn factor_discriminant(d: i64) -> Result<DiscriminantFactorization> {
    if d <= 0 || !is_discriminant(d) {
        return Err(Error::NotADiscriminant(d));
    }
    // Split off the square part: d = core * s^2 with core squarefree.
    let mut core = 1i64;
    let mut s = 1i64;
    for (p, e) in factorize(d) {
        if e % 2 == 1 {
            core *= p;
        }
        s *= p.pow(e / 2);
    }
    if core.rem_euclid(4) == 1 {
        Ok(DiscriminantFactorization { d, d0: core, f: s })
    } else {
        // core = 2, 3 mod 4: the fundamental part picks up the factor 4,
        // and s must be even since d = 0, 1 mod 4.
        debug_assert_eq!(s % 2, 0);
        Ok(DiscriminantFactorization {
            d,
            d0: 4 * core,
            f: s / 2,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f5 = factor_discriminant(5).unwrap();
        assert_eq!((f5.d0, f5.f), (5, 1));
        let f20 = factor_discriminant(20).unwrap();
        assert_eq!((f20.d0, f20.f), (5, 2));
        let f32 = factor_discriminant(32).unwrap();
        assert_eq!((f32.d0, f32.f), (8, 2));
    }

    #[test]
    fn rejects_non_discriminants() {
        for d in [2i64, 3, 6, 7, -4, 0] {
            assert_eq!(factor_discriminant(d), Err(Error::NotADiscriminant(d)));
        }
    }

    #[test]
    fn square_detection() {
        let squares: Vec<i64> = (0..=1000).map(|n| n * n).collect();
        for n in 0..=1_000_000i64 {
            assert_eq!(is_square(n), squares.binary_search(&n).is_ok(), "n = {n}");
        }
        assert!(!is_square(-4));
    }

    #[test]
    fn factorization_exhaustive_to_a_million() {
        for d in (1..=1_000_000i64).filter(|d| matches!(d % 4, 0 | 1)) {
            let f = factor_discriminant(d).unwrap();
            assert_eq!(f.d0 * f.f * f.f, d, "D = {d}");
            assert!(is_fundamental_discriminant(f.d0), "D = {d} gave D0 = {}", f.d0);
        }
    }
}
