//! Gauss reduction of positive-definite forms.

use super::form::BinaryQuadraticForm;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

fn require_posdef(q: &BinaryQuadraticForm) -> Result<()> {
    if q.is_positive_definite() {
        Ok(())
    } else {
        Err(Error::NotPositiveDefinite(q.to_string()))
    }
}

/// Is `q` reduced: `|b| <= a <= c`, with `b >= 0` whenever `|b| = a` or
/// `a = c`?
pub fn is_reduced_posdef(q: &BinaryQuadraticForm) -> bool {
    if !q.is_positive_definite() {
        return false;
    }
    let babs = q.b.abs();
    if babs > q.a || q.a > q.c {
        return false;
    }
    if (babs == q.a || q.a == q.c) && q.b.is_negative() {
        return false;
    }
    true
}

/// The unique reduced form equivalent to `q`.
pub fn reduce_posdef(q: &BinaryQuadraticForm) -> Result<BinaryQuadraticForm> {
    require_posdef(q)?;
    let disc = q.discriminant();
    let (mut a, mut b) = (q.a.clone(), q.b.clone());
    let mut c;
    loop {
        // translate b into (-a, a]
        let two_a = BigInt::from(2) * &a;
        let mut r = b.mod_floor(&two_a);
        if r > a {
            r -= &two_a;
        }
        b = r;
        c = (&b * &b - &disc) / (BigInt::from(4) * &a);
        if a > c {
            // swap via S: [a,b,c] -> [c,-b,a]
            std::mem::swap(&mut a, &mut c);
            b = -b;
        } else {
            break;
        }
    }
    if (b.abs() == a || a == c) && b.is_negative() {
        b = -b;
    }
    Ok(BinaryQuadraticForm::new(a, b, c))
}

/// Same class test for positive-definite forms of equal discriminant.
pub fn is_equivalent_posdef(
    q1: &BinaryQuadraticForm,
    q2: &BinaryQuadraticForm,
) -> Result<bool> {
    require_posdef(q1)?;
    require_posdef(q2)?;
    if q1.discriminant() != q2.discriminant() {
        return Err(Error::DiscriminantMismatch(q1.to_string(), q2.to_string()));
    }
    Ok(reduce_posdef(q1)? == reduce_posdef(q2)?)
}
