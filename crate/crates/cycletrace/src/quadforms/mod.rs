//! Integral binary quadratic forms: reduction, equivalence, class
//! enumeration (definite and indefinite, imprimitive included), CM points,
//! and Pell automorphs.
//!
//! # Conventions
//!
//! - `[a, b, c]` denotes `a x^2 + b x y + c y^2` with discriminant
//!   `b^2 - 4ac`.
//! - Equivalence is always proper (SL2(Z), right substitution action);
//!   `Q` and `-Q` are distinct classes unless genuinely equivalent.
//! - Positive discriminants must be non-squares: geodesics through cusps
//!   never arise here.

mod cm;
mod form;
mod indefinite;
mod posdef;

pub use cm::{cm_point, inner_product_qnum, stabilizer_order, CMPoint};
pub use form::{BinaryQuadraticForm, Matrix2};
pub use indefinite::{
    automorph, indefinite_class_reps, is_equivalent_indefinite, is_reduced_indefinite,
    pell_fundamental, IndefiniteClassSet, PellSolution,
};
pub(crate) use indefinite::validate_positive_nonsquare;
pub use posdef::{is_equivalent_posdef, is_reduced_posdef, reduce_posdef};
