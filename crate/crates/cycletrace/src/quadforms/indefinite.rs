//! Indefinite forms: Gauss reduction cycles, Pell solutions, automorphs,
//! and SL2(Z) class representatives (imprimitive classes included).
//!
//! A form `[a, b, c]` of non-square discriminant `D > 0` is reduced when
//! `0 < b < sqrt(D)` and `sqrt(D) - b < 2|a| < sqrt(D) + b`. The right
//! neighbor (rho) step walks the finite cycle of reduced forms in a class;
//! one full cycle is an SL2(Z) word whose matrix generates the proper
//! automorphism group, which is how the fundamental Pell solution is read
//! off. The partial quotients of the walk are exactly those of the
//! continued fraction of the larger root `(-b + sqrt(D))/(2a)`.
//!
//! All comparisons against `sqrt(D)` are settled by integer square
//! comparisons; nothing here touches floating point.

use super::form::{BinaryQuadraticForm, Matrix2};
use crate::exactmath::{is_discriminant, is_square};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

/// Check `D > 0`, `D = 0, 1 mod 4`, non-square.
pub(crate) fn validate_positive_nonsquare(d: i64) -> Result<()> {
    if d > 0 && is_square(d) {
        return Err(Error::SquareDiscriminant(d));
    }
    if d <= 0 || !is_discriminant(d) {
        return Err(Error::NotADiscriminant(d));
    }
    Ok(())
}

/// Minimal positive solution of `t^2 - D u^2 = 4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    pub t: BigInt,
    pub u: BigInt,
    pub d: i64,
}

/// One representative per SL2(Z) class of forms of discriminant `d`,
/// imprimitive classes included, sorted by content then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndefiniteClassSet {
    pub d: i64,
    pub reps: Vec<BinaryQuadraticForm>,
}

/// `r > sqrt(n)` for integer `r` and positive non-square `n`.
fn exceeds_sqrt(r: &BigInt, n: &BigInt) -> bool {
    r.is_positive() && r * r > *n
}

pub fn is_reduced_indefinite(q: &BinaryQuadraticForm) -> bool {
    let disc = q.discriminant();
    if !disc.is_positive() || q.a.is_zero() || q.c.is_zero() {
        return false;
    }
    if !q.b.is_positive() || &q.b * &q.b >= disc {
        return false;
    }
    let two_a = BigInt::from(2) * q.a.abs();
    // sqrt(D) - b < 2|a| < sqrt(D) + b
    exceeds_sqrt(&(&two_a + &q.b), &disc) && !exceeds_sqrt(&(&two_a - &q.b), &disc)
}

/// One rho step on a reduced form: `[a, b, c] -> [c, r, (r^2 - D)/(4c)]`
/// with `r = -b mod 2|c|` chosen in the window `(sqrt(D) - 2|c|, sqrt(D))`.
/// Returns the neighbor and the SL2(Z) step matrix `[[0, -1], [1, m]]`
/// with `m = (b + r)/(2c)`.
fn rho_reduced(q: &BinaryQuadraticForm) -> (BinaryQuadraticForm, Matrix2) {
    debug_assert!(is_reduced_indefinite(q));
    let disc = q.discriminant();
    let s = disc.sqrt(); // floor(sqrt(D)), strictly below sqrt(D)
    let two_c_abs = BigInt::from(2) * q.c.abs();
    // r = s - ((s - (-b)) mod 2|c|) is the unique residue of -b in the
    // half-open integer window [s + 1 - 2|c|, s].
    let r = &s - (&s + &q.b).mod_floor(&two_c_abs);
    let m = (&q.b + &r) / (BigInt::from(2) * &q.c);
    let c2 = (&r * &r - &disc) / (BigInt::from(4) * &q.c);
    let step = Matrix2::new(BigInt::zero(), -BigInt::one(), BigInt::one(), m);
    (BinaryQuadraticForm::new(q.c.clone(), r, c2), step)
}

/// Reduce an arbitrary indefinite form of non-square discriminant,
/// accumulating the transformation (`q.apply(&m)` equals the result).
pub(crate) fn reduce_indefinite(q: &BinaryQuadraticForm) -> (BinaryQuadraticForm, Matrix2) {
    let disc = q.discriminant();
    debug_assert!(disc.is_positive() && !is_square_big(&disc));
    let mut f = q.clone();
    let mut m = Matrix2::identity();
    while !is_reduced_indefinite(&f) {
        // Non-cycle step: bring r into (-|c|, |c|] when |c| > sqrt(D),
        // into the reduced window otherwise.
        let s = disc.sqrt();
        let c_abs = f.c.abs();
        let two_c_abs = BigInt::from(2) * &c_abs;
        let r = if exceeds_sqrt(&c_abs, &disc) {
            let mut r = (-&f.b).mod_floor(&two_c_abs);
            if r > c_abs {
                r -= &two_c_abs;
            }
            r
        } else {
            &s - (&s + &f.b).mod_floor(&two_c_abs)
        };
        let mstep = (&f.b + &r) / (BigInt::from(2) * &f.c);
        let c2 = (&r * &r - &disc) / (BigInt::from(4) * &f.c);
        let step = Matrix2::new(BigInt::zero(), -BigInt::one(), BigInt::one(), mstep);
        f = BinaryQuadraticForm::new(f.c.clone(), r, c2);
        m = m.mul(&step);
    }
    (f, m)
}

fn is_square_big(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let s = n.sqrt();
    &s * &s == *n
}

/// The full rho cycle through a reduced form, starting at `q`.
fn cycle_of(q: &BinaryQuadraticForm) -> Vec<BinaryQuadraticForm> {
    let mut cycle = vec![q.clone()];
    let (mut f, _) = rho_reduced(q);
    while f != *q {
        cycle.push(f.clone());
        f = rho_reduced(&f).0;
    }
    cycle
}

/// Fundamental solution of `t^2 - D u^2 = 4` via the reduction cycle of
/// the principal form of discriminant `D` (the continued fraction of
/// `sqrt(D)`, resp. `(1 + sqrt(D))/2` for odd `D`, in form language).
pub fn pell_fundamental(d: i64) -> Result<PellSolution> {
    validate_positive_nonsquare(d)?;
    let disc = BigInt::from(d);
    let s = disc.sqrt();
    // largest b0 <= floor(sqrt(D)) with b0 = D mod 2; [1, b0, .] is reduced
    let parity = BigInt::from(d.rem_euclid(2));
    let b0 = &s - (&s - &parity).mod_floor(&BigInt::from(2));
    let c0 = (&b0 * &b0 - &disc) / BigInt::from(4);
    let principal = BinaryQuadraticForm::new(BigInt::one(), b0, c0);
    debug_assert!(is_reduced_indefinite(&principal));

    let mut m = Matrix2::identity();
    let mut f = principal.clone();
    loop {
        let (next, step) = rho_reduced(&f);
        m = m.mul(&step);
        f = next;
        if f == principal {
            break;
        }
    }
    if m.trace().is_negative() {
        m = m.neg();
    }
    // m = [[(t - b u)/2, -c u], [a u, (t + b u)/2]] for the fixed form,
    // so t is the trace and u = m.r / a with a = 1 here.
    let t = m.trace();
    let u = m.r.clone();
    debug_assert!(&t * &t - &disc * &u * &u == BigInt::from(4));
    debug_assert!(u.is_positive());
    Ok(PellSolution { t, u, d })
}

/// The fundamental automorph of `q`: the generator
/// `[[(t - bu)/2, -cu], [au, (t + bu)/2]]` of the proper automorphism
/// group, with `(t, u)` the Pell solution of the primitive part's
/// discriminant (imprimitive forms share the automorph of their primitive
/// part).
pub fn automorph(q: &BinaryQuadraticForm) -> Result<Matrix2> {
    let disc = q.discriminant();
    let disc_i64: i64 = disc
        .clone()
        .try_into()
        .map_err(|_| Error::InvalidInput("discriminant exceeds i64 range".into()))?;
    validate_positive_nonsquare(disc_i64)?;
    let (_, prim) = q.primitive_part()?;
    let prim_disc: i64 = prim.disc_i64()?;
    let pell = pell_fundamental(prim_disc)?;
    let (t, u) = (pell.t, pell.u);
    let half = |n: BigInt| {
        debug_assert!(n.is_even());
        n / BigInt::from(2)
    };
    let m = Matrix2::new(
        half(&t - &prim.b * &u),
        -&prim.c * &u,
        &prim.a * &u,
        half(&t + &prim.b * &u),
    );
    debug_assert!(m.is_sl2());
    debug_assert_eq!(q.apply(&m), *q);
    Ok(m)
}

/// All reduced primitive forms of non-square discriminant `d > 0`:
/// for each `0 < b < sqrt(d)` of the right parity split
/// `(d - b^2)/4 = |a| * |c|` over divisor pairs, both sign patterns.
fn reduced_primitive_forms(d: i64) -> Vec<BinaryQuadraticForm> {
    let disc = BigInt::from(d);
    let s = d.sqrt(); // i64 floor sqrt
    let mut out = Vec::new();
    let mut push_if_reduced = |a_abs: i64, b: i64, c_abs: i64| {
        let two_a = BigInt::from(2 * a_abs);
        let bb = BigInt::from(b);
        if !(exceeds_sqrt(&(&two_a + &bb), &disc) && !exceeds_sqrt(&(&two_a - &bb), &disc)) {
            return;
        }
        for (a, c) in [(a_abs, -c_abs), (-a_abs, c_abs)] {
            let f = BinaryQuadraticForm::from_i64(a, b, c);
            if f.content().is_one() {
                debug_assert!(is_reduced_indefinite(&f));
                out.push(f);
            }
        }
    };
    let mut b = if d % 2 == 0 { 2 } else { 1 };
    while b <= s {
        // split |a| |c| = (d - b^2)/4 over divisor pairs
        let n = (d - b * b) / 4;
        let mut a_abs = 1;
        while a_abs * a_abs <= n {
            if n % a_abs == 0 {
                push_if_reduced(a_abs, b, n / a_abs);
                if a_abs * a_abs < n {
                    push_if_reduced(n / a_abs, b, a_abs);
                }
            }
            a_abs += 1;
        }
        b += 2;
    }
    out
}

/// One representative per SL2(Z) class of `Q_d` (all integral forms of
/// discriminant `d`, imprimitive included): for each `g` with `g^2 | d`
/// and `d/g^2 = 0, 1 mod 4`, partition the primitive reduced forms of
/// discriminant `d/g^2` into rho cycles, take the lexicographically
/// smallest form of each cycle, and scale by `g`.
pub fn indefinite_class_reps(d: i64) -> Result<IndefiniteClassSet> {
    validate_positive_nonsquare(d)?;
    let mut reps = Vec::new();
    let layers: Vec<i64> = (1..)
        .take_while(|g: &i64| g.checked_mul(*g).is_some_and(|s| s <= d))
        .filter(|g| d % (g * g) == 0)
        .collect();
    for g in layers {
        let d_prim = d / (g * g);
        if !is_discriminant(d_prim) {
            continue;
        }
        let mut pool = reduced_primitive_forms(d_prim);
        pool.sort();
        let mut layer_reps = Vec::new();
        while let Some(seed) = pool.first().cloned() {
            let cycle = cycle_of(&seed);
            let rep = cycle.iter().min().expect("cycle is nonempty").clone();
            pool.retain(|f| !cycle.contains(f));
            layer_reps.push(rep.scale(&BigInt::from(g)));
        }
        layer_reps.sort();
        reps.extend(layer_reps);
    }
    Ok(IndefiniteClassSet { d, reps })
}

/// Proper equivalence test through reduction-cycle membership.
pub fn is_equivalent_indefinite(
    q1: &BinaryQuadraticForm,
    q2: &BinaryQuadraticForm,
) -> Result<bool> {
    if q1.discriminant() != q2.discriminant() {
        return Err(Error::DiscriminantMismatch(q1.to_string(), q2.to_string()));
    }
    let disc_i64: i64 = q1
        .discriminant()
        .try_into()
        .map_err(|_| Error::InvalidInput("discriminant exceeds i64 range".into()))?;
    validate_positive_nonsquare(disc_i64)?;
    let (g1, p1) = q1.primitive_part()?;
    let (g2, p2) = q2.primitive_part()?;
    if g1 != g2 {
        return Ok(false);
    }
    let (r1, _) = reduce_indefinite(&p1);
    let (r2, _) = reduce_indefinite(&p2);
    Ok(cycle_of(&r1).contains(&r2))
}
