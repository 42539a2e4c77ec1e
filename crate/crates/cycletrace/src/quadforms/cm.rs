//! CM points of positive-definite forms and the pairing `Q_{z_A}`.

use super::form::BinaryQuadraticForm;
use crate::exactmath::{is_discriminant, Rational};
use crate::{Error, Result};
use num_bigint::BigInt;

/// The root `z_A = x_A + i y_A` of `A(z, 1) = 0` in the upper half-plane,
/// kept in exact coordinates: `x_A = -b/(2a)` is rational and
/// `y_A = y_coeff * sqrt(|d|)` with `y_coeff = 1/(2a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMPoint {
    pub x: Rational,
    pub y_coeff: Rational,
    pub d: i64,
    pub form: BinaryQuadraticForm,
}

/// CM point of a positive-definite form.
pub fn cm_point(a: &BinaryQuadraticForm) -> Result<CMPoint> {
    if !a.is_positive_definite() {
        return Err(Error::NotPositiveDefinite(a.to_string()));
    }
    let d = a.disc_i64()?;
    let two_a = BigInt::from(2) * &a.a;
    Ok(CMPoint {
        x: Rational::new(-&a.b, two_a.clone()),
        y_coeff: Rational::new(BigInt::from(1), two_a),
        d,
        form: a.clone(),
    })
}

/// Order of the stabilizer of the CM point in PSL2(Z): 3 at the hexagonal
/// point (`d = -3`), 2 at `i` (`d = -4`), 1 otherwise.
pub fn stabilizer_order(d: i64) -> Result<u32> {
    if d >= 0 || !is_discriminant(d) {
        return Err(Error::NotADiscriminant(d));
    }
    Ok(match d {
        -3 => 3,
        -4 => 2,
        _ => 1,
    })
}

/// Integer numerator of the pairing `Q_{z_A} = (a|z|^2 + b x + c)/y`
/// evaluated at the CM point of `A`: with `x_A = -b_A/(2a_A)`,
/// `|z_A|^2 = c_A/a_A` and `y_A = sqrt(|d|)/(2a_A)` one gets
/// `Q_{z_A} = q_num / sqrt(|d|)` where
/// `q_num = 2 a c_A - b b_A + 2 c a_A`.
///
/// The sign of `q_num` locates `z_A` relative to the geodesic of `Q`; it
/// vanishes exactly when `z_A` lies on it. The zero form pairs to 0.
pub fn inner_product_qnum(q: &BinaryQuadraticForm, a: &BinaryQuadraticForm) -> Result<BigInt> {
    if !a.is_positive_definite() {
        return Err(Error::NotPositiveDefinite(a.to_string()));
    }
    Ok(BigInt::from(2) * &q.a * &a.c - &q.b * &a.b + BigInt::from(2) * &q.c * &a.a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational;
    use num_traits::Zero;

    fn f(a: i64, b: i64, c: i64) -> BinaryQuadraticForm {
        BinaryQuadraticForm::from_i64(a, b, c)
    }

    #[test]
    fn cm_point_examples() {
        let p = cm_point(&f(1, 1, 1)).unwrap();
        assert_eq!(p.x, rational(-1, 2).unwrap());
        assert_eq!(p.y_coeff, rational(1, 2).unwrap());
        assert_eq!(p.d, -3);

        let i = cm_point(&f(1, 0, 1)).unwrap();
        assert_eq!(i.x, rational(0, 1).unwrap());
        assert_eq!(i.y_coeff, rational(1, 2).unwrap());
        assert_eq!(i.d, -4);

        let p = cm_point(&f(2, 2, 3)).unwrap();
        assert_eq!(p.x, rational(-1, 2).unwrap());
        assert_eq!(p.y_coeff, rational(1, 4).unwrap());
        assert_eq!(p.d, -20);
    }

    #[test]
    fn form_vanishes_at_its_cm_point() {
        // A(z,1) = 0 exactly: real part a(x^2 - y_c^2 |d|) + b x + c,
        // imaginary part (2 a x + b) y.
        for form in [f(1, 1, 1), f(2, 2, 3), f(3, 1, 5), f(1, 0, 11)] {
            let p = cm_point(&form).unwrap();
            let a = Rational::from_integer(form.a.clone());
            let b = Rational::from_integer(form.b.clone());
            let c = Rational::from_integer(form.c.clone());
            let dabs = Rational::from_integer(BigInt::from(-p.d));
            let re = &a * (&p.x * &p.x - &p.y_coeff * &p.y_coeff * dabs) + &b * &p.x + c;
            let im = (Rational::from_integer(BigInt::from(2)) * &a * &p.x + &b) * &p.y_coeff;
            assert!(re.is_zero() && im.is_zero(), "A = {form}");
        }
    }

    #[test]
    fn stabilizer_orders() {
        assert_eq!(stabilizer_order(-3).unwrap(), 3);
        assert_eq!(stabilizer_order(-4).unwrap(), 2);
        assert_eq!(stabilizer_order(-20).unwrap(), 1);
        assert!(stabilizer_order(5).is_err());
        assert!(stabilizer_order(-5).is_err());
    }

    #[test]
    fn qnum_examples() {
        let a = f(1, 1, 1);
        assert_eq!(inner_product_qnum(&f(-1, -1, 1), &a).unwrap(), BigInt::from(1));
        assert_eq!(inner_product_qnum(&a, &a).unwrap(), BigInt::from(3));
        assert_eq!(inner_product_qnum(&f(0, 0, 0), &a).unwrap(), BigInt::zero());
    }
}
