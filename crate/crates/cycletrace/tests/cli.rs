//! End-to-end tests of the `cycletrace` binary: exit codes, JSON
//! round-trips, determinism, and the documented output shapes.

use cycletrace::cli::TraceResultJson;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cycletrace"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn trace_json_round_trips_and_reconstructs() {
    let out = run(&["trace", "--k", "2", "--class", "1,1,1", "--D", "5"]);
    assert!(out.status.success());
    let parsed: TraceResultJson = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(parsed.trace, "4/1");
    assert_eq!(parsed.ck, "8/1");
    assert_eq!(parsed.stabilizer, 3);
    let rebuilt = parsed.into_result().expect("rebuilds");
    assert_eq!(rebuilt.reconstruct().expect("reconstructs"), rebuilt.value);
}

#[test]
fn identical_inputs_give_byte_identical_json() {
    let args = ["table", "--k", "4", "--class", "1,1,1", "--Dmax", "41"];
    let first = stdout(&run(&args));
    let second = stdout(&run(&args));
    assert_eq!(first, second);
    // and a capped thread pool changes nothing
    let capped = bin()
        .args(args)
        .env("CYCLETRACE_THREADS", "2")
        .output()
        .expect("binary runs");
    assert_eq!(first, stdout(&capped));
}

#[test]
fn exit_codes_are_stable() {
    assert_eq!(
        run(&["trace", "--k", "2", "--class", "1,1,1", "--D", "12"])
            .status
            .code(),
        Some(2),
        "geodesic collision"
    );
    assert_eq!(
        run(&["trace", "--k", "2", "--class", "1,1,1", "--D", "9"])
            .status
            .code(),
        Some(3),
        "square discriminant"
    );
    assert_eq!(
        run(&["trace", "--k", "2", "--class", "1,1,1", "--D", "7"])
            .status
            .code(),
        Some(4),
        "not a discriminant"
    );
    assert_eq!(
        run(&["trace", "--k", "3", "--class", "1,1,1", "--D", "5"])
            .status
            .code(),
        Some(4),
        "odd weight"
    );
    assert_eq!(
        run(&["trace", "--k", "2", "--class", "1,1,-1", "--D", "5"])
            .status
            .code(),
        Some(4),
        "indefinite class form"
    );
}

#[test]
fn table_reproduces_golden_rows() {
    let out = run(&[
        "table", "--k", "2", "--class", "1,1,1", "--Dmax", "41", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let cell = |d: i64| {
        text.lines()
            .find(|l| l.starts_with(&format!("{d},")))
            .unwrap_or_else(|| panic!("row {d}"))
            .split(',')
            .nth(2)
            .unwrap()
            .to_string()
    };
    for (d, trace) in [(5, "4/1"), (20, "24/1"), (33, "64/1"), (41, "76/1")] {
        assert_eq!(cell(d), trace, "D = {d}");
    }
    assert!(text.contains("12,skipped"));
    assert!(text.contains("16,skipped"));
}

#[test]
fn class_input_is_reduced_and_echoed() {
    // [2,2,1] reduces to [1,0,1]; the echoed class is the reduced one
    let out = run(&["trace", "--k", "2", "--class", "2,2,1", "--D", "21"]);
    assert!(out.status.success());
    let parsed: TraceResultJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed.class, [1, 0, 1]);
    assert_eq!(parsed.d, -4);
}

#[test]
fn ck_numeric_cross_check() {
    let out = run(&["ck", "--k", "2", "--D", "5", "--numeric"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ck"], "8/1");
    assert!(v["rel_diff"].as_f64().unwrap() < 1e-8);
}

#[test]
fn classes_shows_single_class_and_pell() {
    let out = run(&["classes", "--D", "5"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["class_count"], 1);
    assert_eq!(v["pell"]["t"], "3");
    assert_eq!(v["pell"]["u"], "1");
}

#[test]
fn combined_trace_flags_formal_weights() {
    let out = run(&[
        "trace", "--k", "6", "--class", "1,1,1", "--coeff", "5=1", "--coeff", "8=-1/2",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["formal"], true);
    // square coefficient entries are rejected while parsing
    let bad = run(&["trace", "--k", "2", "--class", "1,1,1", "--coeff", "9=1"]);
    assert!(!bad.status.success());
}

#[test]
fn verify_single_discriminant_passes() {
    let out = run(&["verify", "--k", "2", "--class", "1,1,1", "--D", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // single-D reports are flat: {"D", "exact", "numeric", "rel_diff",
    // "pass", ..., "config"}
    assert_eq!(v["status"], "pass");
    assert_eq!(v["pass"], true);
    assert_eq!(v["exact"], "4/1");
    assert!(v["config"]["orbit_bound"].is_number());
    // a range produces a rows array
    let ranged = run(&["verify", "--k", "2", "--class", "1,1,1", "--Dmax", "8"]);
    assert_eq!(ranged.status.code(), Some(0));
    let vr: serde_json::Value = serde_json::from_str(&stdout(&ranged)).unwrap();
    assert!(vr["rows"].is_array());
    // collision propagates as exit 2
    let collision = run(&["verify", "--k", "2", "--class", "1,1,1", "--D", "12"]);
    assert_eq!(collision.status.code(), Some(2));
}
