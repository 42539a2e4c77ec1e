//! Kronecker symbol, Moebius function, divisor sums.
//!
//! Arguments live comfortably in `i64`: the symbols are only ever taken at
//! fundamental discriminants and divisors of conductors.

use super::Rational;
use num_bigint::BigInt;

/// Kronecker symbol `(d/m)` for `m >= 1`, the multiplicative extension of
/// the Jacobi symbol with `(d/2) = 0, +1, -1` for `d` even, `d = ±1 mod 8`,
/// `d = ±3 mod 8` respectively.
///
/// Panics if `m < 1`; nothing in the trace formulas needs `m <= 0`.
pub fn kronecker_symbol(d: i64, m: i64) -> i32 {
    assert!(m >= 1, "kronecker_symbol requires m >= 1, got {m}");
    let mut n = m;
    let mut sign = 1i32;
    // strip the even part of m
    if n % 2 == 0 {
        if d % 2 == 0 {
            return 0;
        }
        let two = match d.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => unreachable!("d odd"),
        };
        while n % 2 == 0 {
            n /= 2;
            sign *= two;
        }
    }
    // Jacobi symbol (a/n) for odd n >= 1
    let mut a = d.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n.rem_euclid(8), 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a = a.rem_euclid(n);
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Prime factorization by trial division, `(p, exponent)` pairs in
/// ascending `p`.
pub fn factorize(n: i64) -> Vec<(i64, u32)> {
    assert!(n >= 1, "factorize requires n >= 1, got {n}");
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2i64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Moebius function: 0 on non-squarefree `n`, else `(-1)^(#prime factors)`.
pub fn moebius(n: i64) -> i32 {
    assert!(n >= 1, "moebius requires n >= 1, got {n}");
    let mut m = 1i32;
    for (_, e) in factorize(n) {
        if e > 1 {
            return 0;
        }
        m = -m;
    }
    m
}

/// All positive divisors of `n`, sorted ascending.
pub fn divisors(n: i64) -> Vec<i64> {
    assert!(n >= 1, "divisors requires n >= 1, got {n}");
    let mut out = vec![1i64];
    for (p, e) in factorize(n) {
        let base = out.clone();
        let mut pk = 1i64;
        for _ in 0..e {
            pk *= p;
            out.extend(base.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// `sigma_{1-2k}(n) = sum_{d|n} d^(1-2k)` as an exact rational, computed as
/// `sigma_{2k-1}(n) / n^(2k-1)`.
pub fn divisor_sum_neg(n: i64, k: u32) -> Rational {
    assert!(n >= 1 && k >= 1, "divisor_sum_neg requires n, k >= 1");
    let e = 2 * k - 1;
    let mut numer = BigInt::from(0);
    for d in divisors(n) {
        numer += BigInt::from(d).pow(e);
    }
    Rational::new(numer, BigInt::from(n).pow(e))
}
