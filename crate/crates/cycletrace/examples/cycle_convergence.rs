//! Convergence study for the quadrature oracle: how the cycle integrals
//! settle as the orbit truncation bound doubles, and how the base point
//! of the fundamental segment drops out.
//!
//! ```bash
//! cargo run --release --example cycle_convergence
//! ```

use cycletrace::oracle::{cycle_integral_fixed_bound, cycle_integral_with_base, QuadratureConfig};
use cycletrace::quadforms::{indefinite_class_reps, BinaryQuadraticForm};

fn main() {
    let class = BinaryQuadraticForm::from_i64(1, 1, 1);
    let cfg = QuadratureConfig {
        rel_tol: 1e-9,
        max_panels: 4096,
        orbit_bound: 64,
        max_orbit_bound: 8192,
    };

    println!("orbit-bound doubling for the full D = 5 and D = 13 traces (k = 2):");
    for (disc, expect) in [(5i64, 4.0), (13, 12.0)] {
        println!("  D = {disc} (expect {expect}):");
        let reps = indefinite_class_reps(disc).unwrap().reps;
        for bound in [64i64, 128, 256, 512, 1024] {
            let total: f64 = reps
                .iter()
                .map(|rep| {
                    cycle_integral_fixed_bound(2, &class, rep, &cfg, bound)
                        .unwrap()
                        .value
                        .re
                })
                .sum();
            println!(
                "    bound {bound:5}: {total:+.9}  (rel err {:+.2e})",
                (total - expect) / expect
            );
        }
    }

    println!("\nbase-point independence of one closed cycle (D = 5, k = 2):");
    let q = BinaryQuadraticForm::from_i64(1, 1, -1);
    let cfg = QuadratureConfig::default();
    for base in [1.0f64, 2.0, 5.0] {
        let ci = cycle_integral_with_base(2, &class, &q, &cfg, base).unwrap();
        println!(
            "    base {base}: integral {:+.8} {:+.1e}i (est err {:.1e})",
            ci.value.re, ci.value.im, ci.est_error
        );
    }
}
