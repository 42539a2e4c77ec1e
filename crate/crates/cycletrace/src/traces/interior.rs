//! Finite enumeration of the forms contributing to a trace.
//!
//! A form `Q = [a, b, c]` of discriminant `D > 0` contributes iff `a < 0`
//! and the CM point `z_A` lies strictly inside the bounded component cut
//! out by the geodesic of `Q`, i.e. iff `q_num(Q, A) > 0`. Candidates are
//! generated from the box
//!
//! ```text
//! 1 <= |a| <= sqrt(D)/(2 y_A),    |b| <= 2|a| |x_A| + sqrt(D),
//! c = (D - b^2) / (4|a|) integral,
//! ```
//!
//! and the `q_num` sign decides membership (the displayed bounds are
//! necessary for `q_num >= 0`, so widening the `b`-window symmetrically
//! loses nothing). Every comparison against `sqrt(D)` is an integer
//! square comparison; the candidate generation is exact.
//!
//! A candidate with `q_num = 0` means the CM point lies on that geodesic:
//! the trace formula's hypothesis fails, and the enumeration aborts with
//! a hard [`Error::GeodesicCollision`] rather than skipping the form.

use crate::quadforms::{self, inner_product_qnum, BinaryQuadraticForm};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Interior forms paired with their integer pairing numerators.
pub type InteriorForms = Vec<(BinaryQuadraticForm, BigInt)>;

/// Interior forms with their pairing numerators, sorted by `(a, b, c)`.
pub fn enumerate_interior_forms(
    d: i64,
    class_form: &BinaryQuadraticForm,
) -> Result<InteriorForms> {
    Ok(interior_with_candidates(d, class_form)?.0)
}

/// Interior forms together with the full screened candidate list (every
/// form of discriminant `d` that passed the box bounds, whatever the sign
/// of its pairing).
pub fn interior_with_candidates(
    d: i64,
    class_form: &BinaryQuadraticForm,
) -> Result<(InteriorForms, Vec<BinaryQuadraticForm>)> {
    quadforms::validate_positive_nonsquare(d)?;
    if !class_form.is_positive_definite() {
        return Err(Error::NotPositiveDefinite(class_form.to_string()));
    }
    let cm_disc = class_form.disc_i64()?;
    let disc = BigInt::from(d);
    let s = disc.sqrt();
    let (a_cl, b_cl) = (class_form.a.clone(), class_form.b.clone());
    let d_abs = BigInt::from(-cm_disc);

    // |a| <= sqrt(D)/(2 y_A) = a_A sqrt(D / |d|):
    // largest aa with aa^2 |d| <= a_A^2 D.
    let a_max: BigInt = ((&a_cl * &a_cl * &disc) / &d_abs).sqrt();

    let mut interior = Vec::new();
    let mut candidates = Vec::new();

    let mut aa = BigInt::one();
    while aa <= a_max {
        let four_aa = BigInt::from(4) * &aa;
        // symmetric b-window: |b| a_A <= aa |b_A| + a_A sqrt(D)
        let width = (&aa * b_cl.abs() + &a_cl * (&s + BigInt::one())).div_floor(&a_cl)
            + BigInt::one();
        let mut b = -&width;
        while b <= width {
            // exact window test: (|b| a_A - aa |b_A|) <= 0 or its square < a_A^2 D
            let margin = b.abs() * &a_cl - &aa * b_cl.abs();
            let inside = !margin.is_positive() || &margin * &margin < &a_cl * &a_cl * &disc;
            if inside {
                let num = &disc - &b * &b;
                if num.mod_floor(&four_aa).is_zero() {
                    let c = num / &four_aa;
                    let q = BinaryQuadraticForm::new(-aa.clone(), b.clone(), c);
                    debug_assert_eq!(q.discriminant(), disc);
                    let qn = inner_product_qnum(&q, class_form)?;
                    if qn.is_zero() {
                        return Err(Error::GeodesicCollision {
                            disc: d,
                            cm_disc,
                            form: q.to_string(),
                        });
                    }
                    if qn.is_positive() {
                        interior.push((q.clone(), qn));
                    }
                    candidates.push(q);
                }
            }
            b += BigInt::one();
        }
        aa += BigInt::one();
    }
    interior.sort_by(|(f1, _), (f2, _)| f1.cmp(f2));
    candidates.sort();
    Ok((interior, candidates))
}
