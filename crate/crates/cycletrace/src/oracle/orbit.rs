//! Truncated orbit sums for `f_{k,A}`.

use crate::quadforms::{reduce_posdef, BinaryQuadraticForm};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

/// Distance below which an orbit term counts as a pole hit.
const POLE_EPS: f64 = 1e-10;

/// All positive-definite forms in the class of `class_form` with
/// `max(|a|, |b|, |c|) <= bound`, sorted. Membership is decided by
/// reduction.
pub fn class_forms(class_form: &BinaryQuadraticForm, bound: i64) -> Result<Vec<BinaryQuadraticForm>> {
    let reduced = reduce_posdef(class_form)?;
    let disc = class_form.discriminant();
    let d_abs: i64 = (-&disc)
        .to_i64()
        .ok_or_else(|| Error::InvalidInput("discriminant exceeds i64 range".into()))?;
    let mut out = Vec::new();
    for a in 1..=bound {
        // c = (b^2 + |d|) / (4a) >= 1 automatically
        for b in -bound..=bound {
            let num = b * b + d_abs;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c > bound {
                continue;
            }
            let q = BinaryQuadraticForm::from_i64(a, b, c);
            debug_assert_eq!(q.discriminant(), disc);
            if reduce_posdef(&q)? == reduced {
                out.push(q);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Orbit evaluator with coefficients lowered to doubles once.
#[derive(Debug, Clone)]
pub(crate) struct OrbitEvaluator {
    k: u32,
    prefactor: f64,
    forms: Vec<(f64, f64, f64)>,
}

impl OrbitEvaluator {
    pub fn new(k: u32, class_form: &BinaryQuadraticForm, bound: i64) -> Result<Self> {
        let d_abs = -class_form
            .disc_i64()
            .map_err(|_| Error::InvalidInput("discriminant exceeds i64 range".into()))?;
        let forms = class_forms(class_form, bound)?
            .into_iter()
            .map(|f| {
                (
                    big_to_f64(&f.a),
                    big_to_f64(&f.b),
                    big_to_f64(&f.c),
                )
            })
            .collect();
        let prefactor = (d_abs as f64).powf((k as f64 + 1.0) / 2.0) / std::f64::consts::PI;
        Ok(OrbitEvaluator {
            k,
            prefactor,
            forms,
        })
    }

    /// Raw truncated sum `prefactor * sum Q(z,1)^{-k}` at `z`.
    pub fn eval_raw(&self, z: Complex64) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for &(a, b, c) in &self.forms {
            let qz = (a * z + b) * z + c;
            if qz.norm() < POLE_EPS {
                return Err(Error::PoleProximity(qz.norm()));
            }
            acc += qz.powi(-(self.k as i32));
        }
        Ok(acc * self.prefactor)
    }

    /// Evaluation after folding `z` into the fundamental domain: the class
    /// sum is weight-`2k` invariant, so `f(z) = j^{-2k} f(Mz)` with
    /// `j = r z + s` for the folding matrix. Keeps the truncated tail
    /// uniformly small along low geodesic arcs.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let (zred, j) = fold_to_fundamental_domain(z);
        Ok(self.eval_raw(zred)? * j.powi(-2 * self.k as i32))
    }
}

fn big_to_f64(n: &BigInt) -> f64 {
    n.to_f64().expect("form coefficient converts to f64")
}

/// Standard fundamental-domain reduction; returns the reduced point and
/// the cocycle `j = r z + s` of the matrix moving `z` there.
pub(crate) fn fold_to_fundamental_domain(z: Complex64) -> (Complex64, Complex64) {
    let (mut p, mut q, mut r, mut s) = (1f64, 0f64, 0f64, 1f64);
    let mut w = z;
    for _ in 0..256 {
        let n = w.re.round();
        if n != 0.0 {
            // w -> w - n
            w -= n;
            p -= n * r;
            q -= n * s;
        }
        if w.norm_sqr() < 1.0 - 1e-15 {
            // w -> -1/w
            w = -1.0 / w;
            let (np, nq) = (-r, -s);
            r = p;
            s = q;
            p = np;
            q = nq;
        } else {
            break;
        }
    }
    // j(M, z) for M = [[p, q], [r, s]] with M z = w
    (w, r * z + s)
}

/// Truncated evaluation of
/// `f_{k,A}(z) = |d|^((k+1)/2)/pi * sum_{Q in A} Q(z,1)^(-k)` over the
/// forms of the class with coefficients bounded by `bound`, in a
/// deterministic (sorted) summation order.
pub fn eval_f_ka(
    k: u32,
    class_form: &BinaryQuadraticForm,
    z: Complex64,
    bound: i64,
) -> Result<Complex64> {
    if k < 2 || k % 2 != 0 {
        return Err(Error::OddWeight(k));
    }
    OrbitEvaluator::new(k, class_form, bound)?.eval_raw(z)
}
