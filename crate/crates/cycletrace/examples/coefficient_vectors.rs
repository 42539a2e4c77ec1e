//! Rational linear combinations of traces: a coefficient vector
//! D -> a_F(-D) with square entries forbidden, evaluated exactly for any
//! positive even k. A single-entry vector reduces to the plain trace;
//! for k outside {2, 4} the result is a formal combination (no claim
//! that a weakly holomorphic form with that principal part exists).
//!
//! ```bash
//! cargo run --release --example coefficient_vectors
//! ```

use cycletrace::exactmath::{format_rational, parse_rational};
use cycletrace::quadforms::BinaryQuadraticForm;
use cycletrace::traces::{combined_trace, trace_exact, CoefficientVector, TraceRequest};
use cycletrace::Error;

fn main() {
    let class = BinaryQuadraticForm::from_i64(1, 1, 1);

    // single entry == single trace
    let mut single = CoefficientVector::new();
    single.insert(5, parse_rational("1").unwrap()).unwrap();
    let combined = combined_trace(2, &class, &single).unwrap();
    let direct = trace_exact(&TraceRequest {
        k: 2,
        class_form: class.clone(),
        disc: 5,
    })
    .unwrap()
    .value;
    println!("single entry {{5 -> 1}} at k = 2: {}", format_rational(&combined));
    assert_eq!(combined, direct);

    // linearity: 3 * tr(5) - tr(8) = 3 * 4 - 8 = 4
    let mut mixed = CoefficientVector::new();
    mixed.insert(5, parse_rational("3").unwrap()).unwrap();
    mixed.insert(8, parse_rational("-1").unwrap()).unwrap();
    println!(
        "{{5 -> 3, 8 -> -1}} at k = 2: {}",
        format_rational(&combined_trace(2, &class, &mixed).unwrap())
    );

    // higher weight: evaluated formally for any even k
    let mut high = CoefficientVector::new();
    high.insert(5, parse_rational("1").unwrap()).unwrap();
    high.insert(8, parse_rational("-1/2").unwrap()).unwrap();
    for k in [6u32, 8, 10] {
        println!(
            "formal combination {{5 -> 1, 8 -> -1/2}} at k = {k}: {}",
            format_rational(&combined_trace(k, &class, &high).unwrap())
        );
    }

    // square discriminants are rejected at the type level
    let mut bad = CoefficientVector::new();
    match bad.insert(9, parse_rational("1").unwrap()) {
        Err(Error::SquareEntry(9)) => println!("entry at D = 9 rejected: square discriminant"),
        other => panic!("expected SquareEntry, got {other:?}"),
    }
}
