//! Assembly of exact traces and rational linear combinations.

use super::ck::ck;
use super::interior::{enumerate_interior_forms, InteriorForms};
use super::term::legendre_term;
use crate::exactmath::{is_square, Rational};
use crate::quadforms::{stabilizer_order, BinaryQuadraticForm};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use std::collections::BTreeMap;

/// A single-trace request: even weight parameter `k` (modular weight
/// `2k`), positive-definite class representative, positive non-square
/// discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRequest {
    pub k: u32,
    pub class_form: BinaryQuadraticForm,
    pub disc: i64,
}

/// An exact trace with everything needed to reconstruct it: the constant
/// `c_k(D)`, the interior forms with their pairing numerators, and the
/// stabilizer order of the CM point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceResult {
    pub request: TraceRequest,
    pub value: Rational,
    pub ck: Rational,
    pub interior_forms: InteriorForms,
    pub stabilizer: u32,
}

/// Finite map `D -> a_F(-D)`; entries at square `D` are rejected, matching
/// the vanishing hypothesis on the coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoefficientVector {
    entries: BTreeMap<i64, Rational>,
}

impl CoefficientVector {
    pub fn new() -> Self {
        Self::default()
    }

    /// Insert `D -> value`. Square `D` is a typed error; a zero value
    /// removes the entry.
    pub fn insert(&mut self, d: i64, value: Rational) -> Result<()> {
        if d > 0 && is_square(d) {
            return Err(Error::SquareEntry(d));
        }
        crate::quadforms::validate_positive_nonsquare(d)?;
        if value.is_zero() {
            self.entries.remove(&d);
        } else {
            self.entries.insert(d, value);
        }
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.entries.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }
}

/// Assemble `(c_k(D) (2 a_A)^(k-1) |d|^(1-k/2) + sum_Q term(Q)) / |stab|`
/// from precomputed parts.
fn assemble(
    k: u32,
    class_form: &BinaryQuadraticForm,
    d: i64,
    ck_value: &Rational,
    interior: &[(BinaryQuadraticForm, BigInt)],
    stab: u32,
) -> Result<Rational> {
    let cm_disc = class_form.disc_i64()?;
    let two_a = Rational::from_integer(BigInt::from(2) * &class_form.a);
    let d_abs = Rational::from_integer(BigInt::from(-cm_disc));
    // |d|^(1 - k/2) with a possibly negative integer exponent
    let d_pow = d_abs.pow(1 - (k as i32) / 2);
    let mut value = ck_value * two_a.pow((k - 1) as i32) * d_pow;
    for (_, q_num) in interior {
        value += legendre_term(k, d, q_num, cm_disc)?;
    }
    Ok(value / Rational::from_integer(BigInt::from(stab)))
}

/// The per-discriminant right-hand side shared by single traces and
/// linear combinations.
fn trace_rhs(
    k: u32,
    class_form: &BinaryQuadraticForm,
    d: i64,
) -> Result<(Rational, Rational, InteriorForms, u32)> {
    let interior = enumerate_interior_forms(d, class_form)?;
    let cm_disc = class_form.disc_i64()?;
    let stab = stabilizer_order(cm_disc)?;
    let ck_value = ck(k, d)?;
    let value = assemble(k, class_form, d, &ck_value, &interior, stab)?;
    Ok((value, ck_value, interior, stab))
}

impl TraceResult {
    /// Recompute the trace from the stored parts; reproduces `self.value`
    /// exactly.
    pub fn reconstruct(&self) -> Result<Rational> {
        assemble(
            self.request.k,
            &self.request.class_form,
            self.request.disc,
            &self.ck,
            &self.interior_forms,
            self.stabilizer,
        )
    }
}

/// Exact single-discriminant trace. Only `k` in `{2, 4}` is admitted:
/// those are the weights where the relevant space of cusp forms is
/// trivial and the single-`D` trace is well defined on its own; for
/// larger `k` use [`combined_trace`] with an explicit coefficient vector.
pub fn trace_exact(request: &TraceRequest) -> Result<TraceResult> {
    if request.k % 2 != 0 || request.k == 0 {
        return Err(Error::OddWeight(request.k));
    }
    if !matches!(request.k, 2 | 4) {
        return Err(Error::UnsupportedWeight(request.k));
    }
    let (value, ck_value, interior_forms, stabilizer) =
        trace_rhs(request.k, &request.class_form, request.disc)?;
    Ok(TraceResult {
        request: request.clone(),
        value,
        ck: ck_value,
        interior_forms,
        stabilizer,
    })
}

/// Exact value of `sum_D a_F(-D) * tr(D)` for any positive even `k`.
///
/// The right-hand side is computed unconditionally; whether the
/// coefficient vector comes from a genuine weakly holomorphic form is the
/// caller's concern (for `k` outside `{2, 4}` front ends label the output
/// a formal combination).
pub fn combined_trace(
    k: u32,
    class_form: &BinaryQuadraticForm,
    coeffs: &CoefficientVector,
) -> Result<Rational> {
    if k % 2 != 0 || k == 0 {
        return Err(Error::OddWeight(k));
    }
    let mut total = Rational::zero();
    // ascending D; BTreeMap iteration is already sorted
    for (&d, a_f) in coeffs.iter() {
        let (value, _, _, _) = trace_rhs(k, class_form, d)?;
        total += a_f * value;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rational, rational_int};

    fn f(a: i64, b: i64, c: i64) -> BinaryQuadraticForm {
        BinaryQuadraticForm::from_i64(a, b, c)
    }

    fn req(k: u32, class: BinaryQuadraticForm, d: i64) -> TraceRequest {
        TraceRequest {
            k,
            class_form: class,
            disc: d,
        }
    }

    #[test]
    fn worked_trace_value() {
        let r = trace_exact(&req(2, f(1, 1, 1), 5)).unwrap();
        assert_eq!(r.value, rational_int(4));
        assert_eq!(r.ck, rational_int(8));
        assert_eq!(r.stabilizer, 3);
        assert_eq!(r.interior_forms, vec![(f(-1, -1, 1), BigInt::from(1))]);
        assert_eq!(r.reconstruct().unwrap(), r.value);
    }

    #[test]
    fn table_spot_checks() {
        assert_eq!(
            trace_exact(&req(2, f(1, 1, 1), 33)).unwrap().value,
            rational_int(64)
        );
        assert_eq!(
            trace_exact(&req(4, f(1, 1, 1), 41)).unwrap().value,
            rational(2612, 3).unwrap()
        );
    }

    #[test]
    fn second_class_values() {
        // frozen after quadrature corroboration (rel 9e-6 and 4e-8)
        assert_eq!(
            trace_exact(&req(2, f(1, 0, 1), 21)).unwrap().value,
            rational_int(32)
        );
        assert_eq!(
            trace_exact(&req(4, f(1, 0, 1), 21)).unwrap().value,
            rational_int(128)
        );
    }

    #[test]
    fn weight_gate() {
        assert!(matches!(
            trace_exact(&req(6, f(1, 1, 1), 5)),
            Err(Error::UnsupportedWeight(6))
        ));
        assert!(matches!(
            trace_exact(&req(3, f(1, 1, 1), 5)),
            Err(Error::OddWeight(3))
        ));
    }

    #[test]
    fn trace_is_class_invariant() {
        // [1,3,3] = [1,1,1] shifted by T: same class, same trace even
        // though the interior enumeration differs form by form.
        let r1 = trace_exact(&req(2, f(1, 1, 1), 5)).unwrap();
        let r2 = trace_exact(&req(2, f(1, 3, 3), 5)).unwrap();
        assert_eq!(r1.value, r2.value);
    }

    #[test]
    fn combined_reduces_to_single() {
        let mut c = CoefficientVector::new();
        c.insert(5, rational_int(1)).unwrap();
        assert_eq!(
            combined_trace(2, &f(1, 1, 1), &c).unwrap(),
            rational_int(4)
        );
    }

    #[test]
    fn combined_empty_is_zero() {
        let c = CoefficientVector::new();
        assert_eq!(
            combined_trace(2, &f(1, 1, 1), &c).unwrap(),
            rational_int(0)
        );
    }

    #[test]
    fn combined_linearity_spot_check() {
        let mut c = CoefficientVector::new();
        c.insert(5, rational_int(3)).unwrap();
        c.insert(8, rational_int(-1)).unwrap();
        assert_eq!(
            combined_trace(2, &f(1, 1, 1), &c).unwrap(),
            rational_int(4)
        );
    }

    #[test]
    fn coefficient_vector_rejects_squares() {
        let mut c = CoefficientVector::new();
        assert_eq!(c.insert(9, rational_int(1)), Err(Error::SquareEntry(9)));
        assert!(c.insert(7, rational_int(1)).is_err());
    }
}
