//! Exact traces corroborated by quadrature: evaluate f_{k,A} by
//! truncated orbit sums, integrate over one fundamental segment of each
//! closed geodesic with composite Gauss-Legendre panels, sum over the
//! classes, and compare against the exact engine.
//!
//! ```bash
//! cargo run --release --example numeric_verification
//! ```

use cycletrace::exactmath::format_rational;
use cycletrace::oracle::{compare, trace_numeric, QuadratureConfig};
use cycletrace::quadforms::BinaryQuadraticForm;
use cycletrace::traces::{trace_exact, TraceRequest};
use std::time::Instant;

fn main() {
    let class = BinaryQuadraticForm::from_i64(1, 1, 1);
    let cfg = QuadratureConfig::default();
    println!(
        "config: rel_tol {:.0e}, orbit bound {}..{}, max panels {}\n",
        cfg.rel_tol, cfg.orbit_bound, cfg.max_orbit_bound, cfg.max_panels
    );

    for (k, disc) in [(2u32, 5i64), (2, 8), (2, 13), (2, 20), (4, 5), (4, 8)] {
        let exact = trace_exact(&TraceRequest {
            k,
            class_form: class.clone(),
            disc,
        })
        .unwrap();
        let start = Instant::now();
        let numeric = trace_numeric(k, &class, disc, &cfg).unwrap();
        let elapsed = start.elapsed();
        let report = compare(&exact.value, numeric.value, 1e-4);
        println!(
            "k = {k}, D = {disc:2}: exact {:>8}  numeric {:>14.8}  rel {:.1e}  {}  ({elapsed:.2?})",
            format_rational(&exact.value),
            numeric.value,
            report.rel_diff,
            if report.pass { "pass" } else { "FAIL" },
        );
        for ci in &numeric.per_class {
            println!(
                "    class {:>12}: integral {:+.8} {:+.1e}i  (est err {:.1e})",
                ci.form.to_string(),
                ci.value.re,
                ci.value.im,
                ci.est_error
            );
        }
    }
}
