//! The rational constant c_k(D) two ways: the finite Bernoulli formula
//! (exact) against the truncated L-series definition (numeric), for all
//! valid non-square discriminants up to 50 at k = 2 and k = 4.
//!
//! ```bash
//! cargo run --release --example rational_constants
//! ```

use cycletrace::exactmath::{factor_discriminant, format_rational, is_discriminant, is_square};
use cycletrace::oracle::{ck_numeric, compare};
use cycletrace::traces::ck;

fn main() {
    let n_terms = 100_000;
    for k in [2u32, 4] {
        println!("k = {k}:");
        println!("  {:>3} {:>4} {:>2} | {:>16} | {:>18} | rel diff", "D", "D0", "f", "exact", "L-series");
        let mut worst: f64 = 0.0;
        for d in (5..=50).filter(|d| is_discriminant(*d) && !is_square(*d)) {
            let fac = factor_discriminant(d).unwrap();
            let exact = ck(k, d).unwrap();
            let numeric = ck_numeric(k, d, n_terms).unwrap();
            let report = compare(&exact, numeric, 1e-8);
            assert!(report.pass, "k = {k}, D = {d}");
            worst = worst.max(report.rel_diff);
            println!(
                "  {:>3} {:>4} {:>2} | {:>16} | {:>18.10} | {:.2e}",
                d,
                fac.d0,
                fac.f,
                format_rational(&exact),
                numeric,
                report.rel_diff
            );
        }
        println!("  worst relative difference: {worst:.2e}\n");
    }
}
