//! Every ingredient of one trace, end to end: the constant c_2(5), the
//! candidate screening, the pairing values, the stabilizer, and the
//! assembled rational trace for the hexagonal class at D = 5.
//!
//! ```bash
//! cargo run --release --example worked_example
//! ```

use cycletrace::exactmath::format_rational;
use cycletrace::quadforms::{cm_point, stabilizer_order, BinaryQuadraticForm};
use cycletrace::traces::{ck, interior_with_candidates, legendre_term, trace_exact, TraceRequest};

fn main() {
    let class = BinaryQuadraticForm::from_i64(1, 1, 1);
    let disc = 5i64;
    let k = 2u32;

    println!("class A = {class}, discriminant d = {}", class.discriminant());
    let z = cm_point(&class).unwrap();
    println!(
        "CM point z_A = {} + {} * sqrt({}) i",
        z.x,
        z.y_coeff,
        -z.d
    );
    println!("stabilizer order |Gamma_zA| = {}", stabilizer_order(z.d).unwrap());

    let c = ck(k, disc).unwrap();
    println!("\nc_{k}({disc}) = {}", format_rational(&c));

    let (interior, candidates) = interior_with_candidates(disc, &class).unwrap();
    println!("\ncandidates screened (forms [a,b,c] of disc {disc} with a < 0 in the box):");
    for q in &candidates {
        println!("  {q}");
    }
    println!("forms with the CM point strictly inside their geodesic (q_num > 0):");
    for (q, q_num) in &interior {
        println!(
            "  {q}: Q_zA = {q_num}/sqrt(3), Legendre term {}",
            format_rational(&legendre_term(k, disc, q_num, z.d).unwrap())
        );
    }

    let result = trace_exact(&TraceRequest {
        k,
        class_form: class,
        disc,
    })
    .unwrap();
    println!(
        "\nassembled: (c_k(D) * (2 a_A)^(k-1) * |d|^(1-k/2) + sum of terms) / stabilizer"
    );
    println!("trace = {}", format_rational(&result.value));
    assert_eq!(format_rational(&result.value), "4/1");
}
