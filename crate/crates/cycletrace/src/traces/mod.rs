//! The exact rational trace engine.
//!
//! For even `k` and a positive-definite class representative `A` of
//! discriminant `d < 0`, the trace of cycle integrals of `f_{k,A}` over
//! the classes of a positive non-square discriminant `D` equals
//!
//! ```text
//! (1/|stab|) * ( c_k(D) (2 a_A)^(k-1) |d|^(1-k/2)
//!                + sum_Q legendre_term(k, D, q_num(Q), d) )
//! ```
//!
//! where the sum runs over the finitely many forms `Q = [a,b,c]` of
//! discriminant `D` with `a < 0` whose geodesic strictly encloses the CM
//! point (`q_num > 0`), and every power of `sqrt(|d|)` and `sqrt(D)` has
//! been folded away algebraically: the engine never represents an
//! irrational number.

mod ck;
mod engine;
mod interior;
mod term;

pub use ck::{ck, conductor_sum};
pub use engine::{combined_trace, trace_exact, CoefficientVector, TraceRequest, TraceResult};
pub use interior::{enumerate_interior_forms, interior_with_candidates, InteriorForms};
pub use term::legendre_term;
