//! SL2(Z) class representatives of indefinite forms, imprimitive layers
//! included, with the fundamental Pell solution and the automorph of
//! each representative.
//!
//! ```bash
//! cargo run --release --example class_inventory
//! ```

use cycletrace::exactmath::{is_discriminant, is_square};
use cycletrace::quadforms::{automorph, indefinite_class_reps, pell_fundamental};

fn main() {
    println!("{:>3} | {:>10} | classes (content * primitive automorph)", "D", "pell (t,u)");
    for d in (5..=52).filter(|d| is_discriminant(*d) && !is_square(*d)) {
        let pell = pell_fundamental(d).unwrap();
        let classes = indefinite_class_reps(d).unwrap();
        let mut parts = Vec::new();
        for rep in &classes.reps {
            let m = automorph(rep).unwrap();
            parts.push(format!("{rep} aut {m}"));
        }
        println!(
            "{:>3} | ({:>3},{:>2})   | h = {}: {}",
            d,
            pell.t,
            pell.u,
            classes.reps.len(),
            parts.join("; ")
        );
    }

    // Pell solutions grow fast; the engine stays exact
    println!();
    for d in [124i64, 136, 149, 157, 181] {
        let p = pell_fundamental(d).unwrap();
        println!("D = {d}: minimal t = {}, u = {}", p.t, p.u);
    }
}
