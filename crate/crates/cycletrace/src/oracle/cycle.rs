//! Numeric cycle integrals over closed geodesics and numeric traces.
//!
//! The geodesic of `Q = [a, b, c]` (disc `D > 0` non-square) has real
//! endpoints `w± = (-b ± sqrt(D))/(2a)`. The Moebius map built from the
//! ordered pair `(w_hi, w_lo)` carries the positive imaginary axis onto
//! the geodesic, and the fundamental automorph acts there as
//! `t -> eps^2 t` with `eps = (t_pell + u_pell sqrt(D'))/2` the larger
//! eigenvalue (D' the primitive part's discriminant). One closed cycle is
//! therefore the arc `t in [1/eps, eps]` -- chosen symmetric about the
//! apex so the arc stays as high in the upper half-plane as possible.
//!
//! Orientation follows the counterclockwise-for-`a > 0` convention: in
//! the axis model the upward direction runs left endpoint to right
//! endpoint (clockwise), so representatives with `a > 0` integrate
//! downward and representatives with `a < 0` upward. Only the endpoint
//! order is swapped; no signs are patched afterwards.

use super::orbit::OrbitEvaluator;
use super::quad::composite;
use crate::quadforms::{automorph, indefinite_class_reps, BinaryQuadraticForm};
use crate::traces::enumerate_interior_forms;
use crate::{Error, Result};
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive};

/// Knobs for the numeric side: target relative error of the panel
/// doubling, panel cap, initial and maximal orbit truncation bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub max_panels: usize,
    pub orbit_bound: i64,
    pub max_orbit_bound: i64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 2e-5,
            max_panels: 1024,
            orbit_bound: 128,
            max_orbit_bound: 8192,
        }
    }
}

impl QuadratureConfig {
    fn validate(&self) -> Result<()> {
        if self.rel_tol <= 0.0
            || self.max_panels == 0
            || self.orbit_bound <= 0
            || self.max_orbit_bound < self.orbit_bound
        {
            return Err(Error::InvalidInput(
                "quadrature config requires rel_tol > 0 and positive bounds with max >= initial"
                    .into(),
            ));
        }
        Ok(())
    }
}

/// One class's contribution: the representative, the complex integral,
/// and the aggregated panel + truncation error estimate.
#[derive(Debug, Clone)]
pub struct ClassIntegral {
    pub form: BinaryQuadraticForm,
    pub value: Complex64,
    pub est_error: f64,
}

/// A numeric trace: real part of the class sum, per-class integrals, and
/// the aggregated error estimate.
#[derive(Debug, Clone)]
pub struct NumericTrace {
    pub k: u32,
    pub class_form: BinaryQuadraticForm,
    pub disc: i64,
    pub value: f64,
    pub per_class: Vec<ClassIntegral>,
    pub est_error: f64,
}

/// Integrate `f_{k,A}(z) Q(z,1)^(k-1) dz` over one fundamental segment of
/// the closed geodesic of `Q`, with panel doubling until the quadrature
/// is stable and orbit-bound doubling until the truncation is stable.
pub fn cycle_integral_numeric(
    k: u32,
    class_form: &BinaryQuadraticForm,
    q: &BinaryQuadraticForm,
    cfg: &QuadratureConfig,
) -> Result<ClassIntegral> {
    cycle_integral_with_base(k, class_form, q, cfg, 1.0)
}

/// Same integral over the shifted fundamental segment
/// `t in [base/eps, base*eps]`; by periodicity under the automorph the
/// value is independent of `base`. Exposed for the periodicity checks.
pub fn cycle_integral_with_base(
    k: u32,
    class_form: &BinaryQuadraticForm,
    q: &BinaryQuadraticForm,
    cfg: &QuadratureConfig,
    base: f64,
) -> Result<ClassIntegral> {
    cfg.validate()?;
    if base <= 0.0 {
        return Err(Error::InvalidInput("base point must be positive".into()));
    }
    if k < 2 || k % 2 != 0 {
        return Err(Error::OddWeight(k));
    }
    let disc_i64 = q.disc_i64()?;
    // poles on any geodesic of this discriminant are rejected up front
    enumerate_interior_forms(disc_i64, class_form)?;
    let geometry = CycleGeometry::new(q)?;

    let mut prev: Option<(Complex64, f64)> = None;
    let mut bound = cfg.orbit_bound;
    loop {
        let (value, panel_err) = integrate_at_bound(k, class_form, &geometry, cfg, base, bound)?;
        if let Some((prev_value, _)) = prev {
            let delta = (value - prev_value).norm();
            if delta <= cfg.rel_tol * value.norm().max(1e-12) {
                return Ok(ClassIntegral {
                    form: q.clone(),
                    value,
                    est_error: panel_err + delta,
                });
            }
        }
        prev = Some((value, panel_err));
        if bound >= cfg.max_orbit_bound {
            return Err(Error::NoConvergence(format!(
                "orbit bound {bound} reached without stabilizing the cycle integral for Q = {q}"
            )));
        }
        bound = (bound * 2).min(cfg.max_orbit_bound);
    }
}

/// Endpoint data of one closed geodesic.
struct CycleGeometry {
    w_hi: f64,
    w_lo: f64,
    qa: f64,
    qb: f64,
    qc: f64,
    orientation: f64,
    half_period: f64,
}

impl CycleGeometry {
    fn new(q: &BinaryQuadraticForm) -> Result<Self> {
        let aut = automorph(q)?;
        let tr = aut
            .trace()
            .abs()
            .to_f64()
            .ok_or_else(|| Error::NoConvergence("automorph trace overflows f64".into()))?;
        let eps = 0.5 * (tr + (tr * tr - 4.0).sqrt());
        let disc = q.disc_i64()? as f64;
        let a = q.a.to_f64().expect("coefficient fits f64");
        let b = q.b.to_f64().expect("coefficient fits f64");
        let w_plus = (-b + disc.sqrt()) / (2.0 * a);
        let w_minus = (-b - disc.sqrt()) / (2.0 * a);
        let (w_hi, w_lo) = if w_plus > w_minus {
            (w_plus, w_minus)
        } else {
            (w_minus, w_plus)
        };
        Ok(CycleGeometry {
            w_hi,
            w_lo,
            qa: a,
            qb: b,
            qc: q.c.to_f64().expect("coefficient fits f64"),
            // upward in the model runs w_lo -> w_hi, i.e. clockwise on the
            // semicircle; counterclockwise-for-a>0 therefore integrates
            // downward.
            orientation: if a > 0.0 { -1.0 } else { 1.0 },
            half_period: eps.ln(),
        })
    }
}

/// One panel-doubling quadrature pass at a fixed orbit truncation bound.
fn integrate_at_bound(
    k: u32,
    class_form: &BinaryQuadraticForm,
    g: &CycleGeometry,
    cfg: &QuadratureConfig,
    base: f64,
    bound: i64,
) -> Result<(Complex64, f64)> {
    let evaluator = OrbitEvaluator::new(k, class_form, bound)?;
    let integrand = |s: f64| -> Result<Complex64> {
        let t = s.exp();
        let it = Complex64::new(0.0, t);
        let denom = it + 1.0;
        let z = (g.w_hi * it + g.w_lo) / denom;
        // dz = (w_hi - w_lo) i / (it + 1)^2 dt, dt = t ds
        let dz_ds = Complex64::new(0.0, (g.w_hi - g.w_lo) * t) / (denom * denom);
        let qz = (g.qa * z + g.qb) * z + g.qc;
        Ok(evaluator.eval(z)? * qz.powi(k as i32 - 1) * dz_ds)
    };
    let mid = base.ln();
    let (value, panel_err) =
        panel_doubling(&integrand, mid - g.half_period, mid + g.half_period, cfg)?;
    Ok((value * g.orientation, panel_err))
}

/// Single quadrature pass at one fixed orbit bound, without the
/// stabilization loop; used by convergence studies.
#[doc(hidden)]
pub fn cycle_integral_fixed_bound(
    k: u32,
    class_form: &BinaryQuadraticForm,
    q: &BinaryQuadraticForm,
    cfg: &QuadratureConfig,
    bound: i64,
) -> Result<ClassIntegral> {
    cfg.validate()?;
    if k < 2 || k % 2 != 0 {
        return Err(Error::OddWeight(k));
    }
    enumerate_interior_forms(q.disc_i64()?, class_form)?;
    let geometry = CycleGeometry::new(q)?;
    let (value, panel_err) = integrate_at_bound(k, class_form, &geometry, cfg, 1.0, bound)?;
    Ok(ClassIntegral {
        form: q.clone(),
        value,
        est_error: panel_err,
    })
}

/// Double the panel count until two successive composites agree.
fn panel_doubling<F: Fn(f64) -> Result<Complex64>>(
    f: &F,
    lo: f64,
    hi: f64,
    cfg: &QuadratureConfig,
) -> Result<(Complex64, f64)> {
    // The closure can fail (pole proximity); route errors through a cell.
    let failure: std::cell::RefCell<Option<Error>> = std::cell::RefCell::new(None);
    let wrap = |x: f64| -> Complex64 {
        match f(x) {
            Ok(v) => v,
            Err(e) => {
                *failure.borrow_mut() = Some(e);
                Complex64::new(0.0, 0.0)
            }
        }
    };
    let mut panels = 4usize;
    let mut prev = composite(lo, hi, panels, &wrap);
    let mut prev_delta = f64::INFINITY;
    loop {
        if let Some(e) = failure.borrow_mut().take() {
            return Err(e);
        }
        panels *= 2;
        if panels > cfg.max_panels {
            return Err(Error::NoConvergence(format!(
                "panel count exceeded {} without quadrature stabilizing",
                cfg.max_panels
            )));
        }
        let curr = composite(lo, hi, panels, &wrap);
        if let Some(e) = failure.borrow_mut().take() {
            return Err(e);
        }
        let delta = (curr - prev).norm();
        if delta <= 0.25 * cfg.rel_tol * curr.norm().max(1e-12) {
            return Ok((curr, delta));
        }
        // The folded truncated sum has jumps of the size of the orbit
        // tail across fold boundaries; once panel refinement stops
        // improving, that noise floor is reached and further panels
        // cannot help. Report the floor as the panel error.
        if panels >= 64 && delta >= 0.5 * prev_delta {
            return Ok((curr, delta));
        }
        prev = curr;
        prev_delta = delta;
    }
}

/// Numeric trace: the sum of cycle integrals over one representative per
/// class of discriminant `disc`, in the deterministic class order.
pub fn trace_numeric(
    k: u32,
    class_form: &BinaryQuadraticForm,
    disc: i64,
    cfg: &QuadratureConfig,
) -> Result<NumericTrace> {
    if !matches!(k, 2 | 4) {
        return Err(Error::UnsupportedWeight(k));
    }
    let classes = indefinite_class_reps(disc)?;
    let mut per_class = Vec::with_capacity(classes.reps.len());
    let mut value = 0.0;
    let mut est_error = 0.0;
    for rep in &classes.reps {
        let integral = cycle_integral_numeric(k, class_form, rep, cfg)?;
        value += integral.value.re;
        est_error += integral.est_error;
        per_class.push(integral);
    }
    Ok(NumericTrace {
        k,
        class_form: class_form.clone(),
        disc,
        value,
        per_class,
        est_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadforms::Matrix2;

    fn f(a: i64, b: i64, c: i64) -> BinaryQuadraticForm {
        BinaryQuadraticForm::from_i64(a, b, c)
    }

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn base_point_independence() {
        let a = f(1, 1, 1);
        let q = f(1, 1, -1);
        let reference = cycle_integral_with_base(2, &a, &q, &cfg(), 1.0).unwrap();
        for base in [2.0, 5.0] {
            let shifted = cycle_integral_with_base(2, &a, &q, &cfg(), base).unwrap();
            let tol = 20.0 * (reference.est_error + shifted.est_error) + 1e-9;
            assert!(
                (reference.value - shifted.value).norm() < tol,
                "base {base}: {} vs {}",
                shifted.value,
                reference.value
            );
        }
    }

    #[test]
    fn class_function_property() {
        // the integral only depends on the SL2(Z) class of Q, including
        // representatives with the opposite sign of a
        let a = f(1, 1, 1);
        let q = f(1, 1, -1);
        let reference = cycle_integral_numeric(2, &a, &q, &cfg()).unwrap();
        for m in [
            Matrix2::from_i64(0, -1, 1, -1),
            Matrix2::from_i64(1, 2, 0, 1),
            Matrix2::from_i64(2, 1, 1, 1),
        ] {
            assert!(m.is_sl2());
            let moved = q.apply(&m);
            let transported = cycle_integral_numeric(2, &a, &moved, &cfg()).unwrap();
            let tol = 20.0 * (reference.est_error + transported.est_error) + 1e-9;
            assert!(
                (reference.value - transported.value).norm() < tol,
                "M = {m}: {} vs {}",
                transported.value,
                reference.value
            );
        }
    }

    #[test]
    fn single_class_gives_the_whole_d5_trace() {
        // disc 5 has a single class, so its one cycle integral is the
        // full trace 4
        let a = f(1, 1, 1);
        let classes = indefinite_class_reps(5).unwrap();
        assert_eq!(classes.reps.len(), 1);
        let ci = cycle_integral_numeric(2, &a, &classes.reps[0], &cfg()).unwrap();
        assert!((ci.value.re - 4.0).abs() < 1e-3, "{}", ci.value);
        assert!(ci.value.im.abs() <= ci.est_error.max(1e-9));
    }

    #[test]
    fn numeric_traces_match_golden_values() {
        let a = f(1, 1, 1);
        for (k, d, expect) in [(2u32, 5i64, 4.0), (2, 8, 8.0), (2, 13, 12.0), (4, 5, 20.0 / 3.0)] {
            let nt = trace_numeric(k, &a, d, &cfg()).unwrap();
            let rel = (nt.value - expect).abs() / expect;
            assert!(rel < 1e-4, "k={k} D={d}: {} (rel {rel:e})", nt.value);
            for ci in &nt.per_class {
                assert!(
                    ci.value.im.abs() <= nt.est_error.max(1e-9),
                    "imaginary part {} above estimate {}",
                    ci.value.im,
                    nt.est_error
                );
            }
        }
    }

    #[test]
    fn numeric_traces_corroborate_other_classes() {
        // stabilizer 2 at z = i: quadrature confirms the exact values 32
        // and 128 to 9e-6 resp. 4e-8
        let a = f(1, 0, 1);
        for (k, expect) in [(2u32, 32.0), (4, 128.0)] {
            let nt = trace_numeric(k, &a, 21, &cfg()).unwrap();
            let rel = (nt.value - expect).abs() / expect;
            assert!(rel < 1e-4, "k={k}: {} (rel {rel:e})", nt.value);
        }
    }

    #[test]
    fn collision_is_rejected_before_integration() {
        let a = f(1, 1, 1);
        assert!(matches!(
            trace_numeric(2, &a, 12, &cfg()),
            Err(Error::GeodesicCollision { disc: 12, .. })
        ));
    }

    #[test]
    fn weight_gate() {
        let a = f(1, 1, 1);
        assert!(matches!(
            trace_numeric(6, &a, 5, &cfg()),
            Err(Error::UnsupportedWeight(6))
        ));
    }
}
