//! The form type and the unimodular substitution action.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Integral binary quadratic form `[a, b, c] = a x^2 + b x y + c y^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryQuadraticForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl BinaryQuadraticForm {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Self {
        BinaryQuadraticForm { a, b, c }
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Self {
        Self::new(BigInt::from(a), BigInt::from(b), BigInt::from(c))
    }

    /// `b^2 - 4ac`.
    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    /// Discriminant as `i64`.
    pub fn disc_i64(&self) -> Result<i64> {
        self.discriminant()
            .try_into()
            .map_err(|_| Error::InvalidInput("discriminant exceeds i64 range".into()))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// `gcd(a, b, c)`, zero for the zero form.
    pub fn content(&self) -> BigInt {
        self.a.gcd(&self.b).gcd(&self.c)
    }

    /// `(g, Q/g)` with `g` the content. The zero form has no primitive part.
    pub fn primitive_part(&self) -> Result<(BigInt, BinaryQuadraticForm)> {
        let g = self.content();
        if g.is_zero() {
            return Err(Error::InvalidInput("zero form has no primitive part".into()));
        }
        Ok((
            g.clone(),
            BinaryQuadraticForm::new(&self.a / &g, &self.b / &g, &self.c / &g),
        ))
    }

    /// Value `Q(x, y)`.
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }

    /// Right substitution action: `(Q . M)(x, y) = Q(px + qy, rx + sy)`.
    /// Unimodular `M` preserves the discriminant.
    pub fn apply(&self, m: &Matrix2) -> BinaryQuadraticForm {
        let a2 = self.eval(&m.p, &m.r);
        let c2 = self.eval(&m.q, &m.s);
        let b2 = BigInt::from(2) * &self.a * &m.p * &m.q
            + &self.b * (&m.p * &m.s + &m.q * &m.r)
            + BigInt::from(2) * &self.c * &m.r * &m.s;
        BinaryQuadraticForm::new(a2, b2, c2)
    }

    /// `g * Q` coefficient-wise.
    pub fn scale(&self, g: &BigInt) -> BinaryQuadraticForm {
        BinaryQuadraticForm::new(&self.a * g, &self.b * g, &self.c * g)
    }

    pub fn neg(&self) -> BinaryQuadraticForm {
        BinaryQuadraticForm::new(-&self.a, -&self.b, -&self.c)
    }

    pub fn is_positive_definite(&self) -> bool {
        self.a.is_positive() && self.discriminant().is_negative()
    }
}

impl fmt::Display for BinaryQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.a, self.b, self.c)
    }
}

/// 2x2 integer matrix `[[p, q], [r, s]]` acting on forms by substitution
/// and on the upper half-plane by Moebius transformation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix2 {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
    pub s: BigInt,
}

impl Matrix2 {
    pub fn new(p: BigInt, q: BigInt, r: BigInt, s: BigInt) -> Self {
        Matrix2 { p, q, r, s }
    }

    pub fn from_i64(p: i64, q: i64, r: i64, s: i64) -> Self {
        Self::new(BigInt::from(p), BigInt::from(q), BigInt::from(r), BigInt::from(s))
    }

    pub fn identity() -> Self {
        Self::from_i64(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.p * &self.s - &self.q * &self.r
    }

    pub fn is_sl2(&self) -> bool {
        self.det().is_one()
    }

    pub fn mul(&self, other: &Matrix2) -> Matrix2 {
        Matrix2::new(
            &self.p * &other.p + &self.q * &other.r,
            &self.p * &other.q + &self.q * &other.s,
            &self.r * &other.p + &self.s * &other.r,
            &self.r * &other.q + &self.s * &other.s,
        )
    }

    pub fn neg(&self) -> Matrix2 {
        Matrix2::new(-&self.p, -&self.q, -&self.r, -&self.s)
    }

    pub fn trace(&self) -> BigInt {
        &self.p + &self.s
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.p, self.q, self.r, self.s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_composes() {
        let q = BinaryQuadraticForm::from_i64(1, 1, -1);
        let m1 = Matrix2::from_i64(0, -1, 1, -1);
        let m2 = Matrix2::from_i64(1, 2, 0, 1);
        let lhs = q.apply(&m1).apply(&m2);
        let rhs = q.apply(&m1.mul(&m2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_preserves_discriminant() {
        let q = BinaryQuadraticForm::from_i64(2, -3, 5);
        let m = Matrix2::from_i64(3, 2, 1, 1);
        assert_eq!(q.apply(&m).discriminant(), q.discriminant());
    }
}
