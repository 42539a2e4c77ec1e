//! Floating-point corroboration of the exact engine: truncated orbit sums
//! for `f_{k,A}`, Gauss-Legendre quadrature over closed geodesics, numeric
//! traces, and the `L`-series form of `c_k(D)`.
//!
//! Machine doubles throughout; the exact engine is the ground truth, the
//! oracle only corroborates it. Poles on a geodesic are rejected (no
//! principal values), matching the hypotheses under which the exact
//! formulas hold.

mod compare;
mod cycle;
mod lseries;
mod orbit;
mod quad;

pub use compare::{compare, CompareReport};
pub use cycle::{
    cycle_integral_fixed_bound, cycle_integral_numeric, cycle_integral_with_base, trace_numeric,
    ClassIntegral, NumericTrace, QuadratureConfig,
};
pub use lseries::{ck_numeric, zeta_even};
pub use orbit::{class_forms, eval_f_ka};
pub use quad::GaussLegendre;
