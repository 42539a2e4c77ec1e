//! The `cycletrace` command-line front end.
//!
//! Subcommands: `trace`, `table`, `ck`, `verify`, `classes`. Every result
//! is available as JSON, CSV, or markdown; rationals are decimal-free
//! `p/q` strings and forms are `[a, b, c]` arrays. Exit codes are stable:
//! 0 success, 1 failed verification, 2 geodesic collision, 3 square
//! discriminant, 4 invalid input.
//!
//! `CYCLETRACE_THREADS` caps the row-level parallelism of `table` and
//! `verify`; rows are always emitted in ascending `D` regardless of
//! completion order.

mod output;

pub use output::{OutputFormat, TraceResultJson};

use crate::exactmath::{format_rational, is_discriminant, is_square, parse_rational, Rational};
use crate::oracle::{ck_numeric, compare, trace_numeric, QuadratureConfig};
use crate::quadforms::{automorph, indefinite_class_reps, pell_fundamental, reduce_posdef, BinaryQuadraticForm};
use crate::traces::{ck, combined_trace, trace_exact, CoefficientVector, TraceRequest};
use crate::{Error, Result};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use output::{classes_json, csv_escape, scaled_trace, ConfigJson, TableRow, VerifyRow};
use rayon::prelude::*;
use serde::Serialize;
use std::str::FromStr;

/// Exit code for an error, per the documented mapping.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GeodesicCollision { .. } => 2,
        Error::SquareDiscriminant(_) | Error::SquareEntry(_) => 3,
        Error::NoConvergence(_) => 1,
        _ => 4,
    }
}

#[derive(Debug, Parser)]
#[command(name = "cycletrace", version, about = "Exact traces of cycle integrals of meromorphic modular forms", long_about = None)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format for results on stdout.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: OutputFormat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact trace for a single D, or a rational linear combination when
    /// --coeff flags are given.
    Trace(TraceArgs),
    /// Exact trace table over a range of discriminants.
    Table(TableArgs),
    /// The rational constant c_k(D), optionally with its numeric L-series
    /// cross-check.
    Ck(CkArgs),
    /// Compare exact traces against the quadrature oracle.
    Verify(VerifyArgs),
    /// SL2(Z) class representatives, Pell solution and automorphs.
    Classes(ClassesArgs),
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    /// Even weight parameter k (modular weight 2k).
    #[arg(long)]
    pub k: u32,
    /// Positive-definite class as a,b,c (reduced internally).
    #[arg(long = "class", value_parser = parse_form)]
    pub class: FormArg,
    /// Positive non-square discriminant.
    #[arg(long = "D", conflicts_with = "coeff")]
    pub disc: Option<i64>,
    /// Coefficient vector entry D=p/q; repeatable.
    #[arg(long = "coeff", value_parser = parse_coeff)]
    pub coeff: Vec<CoeffArg>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long = "class", value_parser = parse_form)]
    pub class: FormArg,
    /// Smallest discriminant of the range (inclusive).
    #[arg(long = "Dmin", default_value_t = 1)]
    pub dmin: i64,
    /// Largest discriminant of the range (inclusive).
    #[arg(long = "Dmax")]
    pub dmax: i64,
}

#[derive(Debug, Args)]
pub struct CkArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long = "D")]
    pub disc: i64,
    /// Also evaluate the truncated L-series form and report the difference.
    #[arg(long)]
    pub numeric: bool,
    /// Series terms for the numeric evaluation.
    #[arg(long, default_value_t = 100_000)]
    pub n_terms: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long = "class", value_parser = parse_form)]
    pub class: FormArg,
    /// Single discriminant to verify.
    #[arg(long = "D", conflicts_with_all = ["dmin", "dmax"])]
    pub disc: Option<i64>,
    #[arg(long = "Dmin", default_value_t = 1)]
    pub dmin: i64,
    #[arg(long = "Dmax")]
    pub dmax: Option<i64>,
    /// Pass threshold on the relative difference.
    #[arg(long, default_value_t = 1e-4)]
    pub rel_tol: f64,
    /// Initial orbit truncation bound.
    #[arg(long, default_value_t = 128)]
    pub orbit_bound: i64,
    /// Largest orbit truncation bound before giving up.
    #[arg(long, default_value_t = 8192)]
    pub max_orbit_bound: i64,
    /// Largest Gauss-Legendre panel count per cycle.
    #[arg(long, default_value_t = 1024)]
    pub max_panels: usize,
}

#[derive(Debug, Args)]
pub struct ClassesArgs {
    #[arg(long = "D")]
    pub disc: i64,
}

/// A parsed `a,b,c` triple.
#[derive(Debug, Clone)]
pub struct FormArg(pub BinaryQuadraticForm);

fn parse_form(s: &str) -> std::result::Result<FormArg, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected a,b,c, got {s:?}"));
    }
    let mut coeffs = Vec::with_capacity(3);
    for p in &parts {
        coeffs.push(BigInt::from_str(p).map_err(|e| format!("bad coefficient {p:?}: {e}"))?);
    }
    Ok(FormArg(BinaryQuadraticForm::new(
        coeffs[0].clone(),
        coeffs[1].clone(),
        coeffs[2].clone(),
    )))
}

/// A parsed `D=p/q` coefficient flag.
#[derive(Debug, Clone)]
pub struct CoeffArg {
    pub disc: i64,
    pub value: Rational,
}

fn parse_coeff(s: &str) -> std::result::Result<CoeffArg, String> {
    let (d, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected D=p/q, got {s:?}"))?;
    let disc: i64 = d.trim().parse().map_err(|e| format!("bad D {d:?}: {e}"))?;
    if disc > 0 && is_square(disc) {
        return Err(format!("square discriminant D = {disc} is not allowed"));
    }
    let value = parse_rational(v).map_err(|e| e.to_string())?;
    Ok(CoeffArg { disc, value })
}

/// Entry point: run a parsed invocation, print to stdout, return the exit
/// code.
pub fn run(cli: Cli) -> i32 {
    init_thread_pool();
    let format = cli.format;
    let outcome = match cli.command {
        Command::Trace(args) => cmd_trace(args, format),
        Command::Table(args) => cmd_table(args, format),
        Command::Ck(args) => cmd_ck(args, format),
        Command::Verify(args) => cmd_verify(args, format),
        Command::Classes(args) => cmd_classes(args, format),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn init_thread_pool() {
    if let Ok(v) = std::env::var("CYCLETRACE_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                // ignore failure: the global pool may already exist
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn reduced_class(arg: &FormArg) -> Result<BinaryQuadraticForm> {
    reduce_posdef(&arg.0)
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serialization cannot fail")
    );
}

fn cmd_trace(args: TraceArgs, format: OutputFormat) -> Result<i32> {
    let class_form = reduced_class(&args.class)?;
    if let Some(disc) = args.disc {
        let result = trace_exact(&TraceRequest {
            k: args.k,
            class_form,
            disc,
        })?;
        let json = TraceResultJson::from_result(&result)?;
        match format {
            OutputFormat::Json => print_json(&json),
            OutputFormat::Csv => {
                println!("k,d,A,D,trace,ck,stabilizer,interior_forms");
                println!(
                    "{},{},{},{},{},{},{},{}",
                    json.k,
                    json.d,
                    csv_escape(&format!("{:?}", json.class)),
                    json.disc,
                    json.trace,
                    json.ck,
                    json.stabilizer,
                    csv_escape(&serde_json::to_string(&json.interior_forms).unwrap())
                );
            }
            OutputFormat::Markdown => {
                println!("| k | d | A | D | trace | ck | stabilizer |");
                println!("|---|---|---|---|-------|----|------------|");
                println!(
                    "| {} | {} | {:?} | {} | {} | {} | {} |",
                    json.k, json.d, json.class, json.disc, json.trace, json.ck, json.stabilizer
                );
            }
        }
        return Ok(0);
    }
    if args.coeff.is_empty() {
        return Err(Error::InvalidInput(
            "trace needs either --D or at least one --coeff".into(),
        ));
    }
    let mut coeffs = CoefficientVector::new();
    for c in &args.coeff {
        coeffs.insert(c.disc, c.value.clone())?;
    }
    let value = combined_trace(args.k, &class_form, &coeffs)?;
    let formal = !matches!(args.k, 2 | 4);
    #[derive(Serialize)]
    struct CombinedJson {
        k: u32,
        #[serde(rename = "A")]
        class: [i64; 3],
        coeffs: Vec<CoeffJson>,
        value: String,
        /// true when k is outside {2, 4}: the combination is evaluated
        /// formally, with no claim that a weakly holomorphic form with
        /// this principal part exists.
        formal: bool,
    }
    #[derive(Serialize)]
    struct CoeffJson {
        #[serde(rename = "D")]
        disc: i64,
        #[serde(rename = "aF")]
        value: String,
    }
    let json = CombinedJson {
        k: args.k,
        class: output::form_triplet(&class_form)?,
        coeffs: coeffs
            .iter()
            .map(|(d, v)| CoeffJson {
                disc: *d,
                value: format_rational(v),
            })
            .collect(),
        value: format_rational(&value),
        formal,
    };
    match format {
        OutputFormat::Json => print_json(&json),
        OutputFormat::Csv => {
            println!("k,A,value,formal");
            println!(
                "{},{},{},{}",
                json.k,
                csv_escape(&format!("{:?}", json.class)),
                json.value,
                json.formal
            );
        }
        OutputFormat::Markdown => {
            println!("| k | A | value | formal |");
            println!("|---|---|-------|--------|");
            println!(
                "| {} | {:?} | {} | {} |",
                json.k, json.class, json.value, json.formal
            );
        }
    }
    Ok(0)
}

fn table_rows(args: &TableArgs, class_form: &BinaryQuadraticForm) -> Vec<TableRow> {
    let discs: Vec<i64> = (args.dmin.max(1)..=args.dmax)
        .filter(|d| is_discriminant(*d))
        .collect();
    discs
        .into_par_iter()
        .map(|disc| {
            if is_square(disc) {
                return TableRow {
                    disc,
                    status: "skipped",
                    reason: Some("square discriminant".into()),
                    trace: None,
                    scaled: None,
                };
            }
            match trace_exact(&TraceRequest {
                k: args.k,
                class_form: class_form.clone(),
                disc,
            }) {
                Ok(r) => TableRow {
                    disc,
                    status: "ok",
                    reason: None,
                    trace: Some(format_rational(&r.value)),
                    scaled: (args.k == 4).then(|| scaled_trace(&r.value)),
                },
                Err(e @ Error::GeodesicCollision { .. }) => TableRow {
                    disc,
                    status: "skipped",
                    reason: Some(e.to_string()),
                    trace: None,
                    scaled: None,
                },
                Err(e) => TableRow {
                    disc,
                    status: "error",
                    reason: Some(e.to_string()),
                    trace: None,
                    scaled: None,
                },
            }
        })
        .collect()
}

fn cmd_table(args: TableArgs, format: OutputFormat) -> Result<i32> {
    let class_form = reduced_class(&args.class)?;
    // weight gate up front so an empty range still validates input
    if args.k % 2 != 0 || args.k == 0 {
        return Err(Error::OddWeight(args.k));
    }
    if !matches!(args.k, 2 | 4) {
        return Err(Error::UnsupportedWeight(args.k));
    }
    let rows = table_rows(&args, &class_form);
    #[derive(Serialize)]
    struct TableJson {
        k: u32,
        #[serde(rename = "A")]
        class: [i64; 3],
        rows: Vec<TableRow>,
    }
    match format {
        OutputFormat::Json => print_json(&TableJson {
            k: args.k,
            class: output::form_triplet(&class_form)?,
            rows,
        }),
        OutputFormat::Csv => {
            if args.k == 4 {
                println!("D,status,trace,three_trace,reason");
            } else {
                println!("D,status,trace,reason");
            }
            for r in &rows {
                let trace = r.trace.clone().unwrap_or_default();
                let reason = csv_escape(&r.reason.clone().unwrap_or_default());
                if args.k == 4 {
                    let scaled = r.scaled.clone().unwrap_or_default();
                    println!("{},{},{},{},{}", r.disc, r.status, trace, scaled, reason);
                } else {
                    println!("{},{},{},{}", r.disc, r.status, trace, reason);
                }
            }
        }
        OutputFormat::Markdown => {
            if args.k == 4 {
                println!("| D | trace | 3*trace |");
                println!("|---|-------|---------|");
            } else {
                println!("| D | trace |");
                println!("|---|-------|");
            }
            for r in &rows {
                let trace = r
                    .trace
                    .clone()
                    .unwrap_or_else(|| format!("skipped ({})", r.reason.clone().unwrap_or_default()));
                if args.k == 4 {
                    println!(
                        "| {} | {} | {} |",
                        r.disc,
                        trace,
                        r.scaled.clone().unwrap_or_default()
                    );
                } else {
                    println!("| {} | {} |", r.disc, trace);
                }
            }
        }
    }
    Ok(0)
}

fn cmd_ck(args: CkArgs, format: OutputFormat) -> Result<i32> {
    let exact = ck(args.k, args.disc)?;
    #[derive(Serialize)]
    struct CkJson {
        k: u32,
        #[serde(rename = "D")]
        disc: i64,
        ck: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        numeric: Option<f64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        rel_diff: Option<f64>,
    }
    let mut json = CkJson {
        k: args.k,
        disc: args.disc,
        ck: format_rational(&exact),
        numeric: None,
        rel_diff: None,
    };
    if args.numeric {
        let numeric = ck_numeric(args.k, args.disc, args.n_terms)?;
        let report = compare(&exact, numeric, 1e-8);
        json.numeric = Some(numeric);
        json.rel_diff = Some(report.rel_diff);
    }
    match format {
        OutputFormat::Json => print_json(&json),
        OutputFormat::Csv => {
            println!("k,D,ck,numeric,rel_diff");
            println!(
                "{},{},{},{},{}",
                json.k,
                json.disc,
                json.ck,
                json.numeric.map(|v| v.to_string()).unwrap_or_default(),
                json.rel_diff.map(|v| format!("{v:e}")).unwrap_or_default()
            );
        }
        OutputFormat::Markdown => {
            println!("| k | D | ck | numeric |");
            println!("|---|---|----|---------|");
            println!(
                "| {} | {} | {} | {} |",
                json.k,
                json.disc,
                json.ck,
                json.numeric
                    .map(|v| format!("{v:.8}"))
                    .unwrap_or_else(|| "-".into())
            );
        }
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs, format: OutputFormat) -> Result<i32> {
    let class_form = reduced_class(&args.class)?;
    if !matches!(args.k, 2 | 4) {
        return Err(Error::UnsupportedWeight(args.k));
    }
    // quadrature target one order below the comparison threshold, floored
    // at the truncation noise floor of the folded orbit sums
    let cfg = QuadratureConfig {
        rel_tol: (args.rel_tol * 0.2).clamp(2e-5, 1e-3),
        max_panels: args.max_panels,
        orbit_bound: args.orbit_bound,
        max_orbit_bound: args.max_orbit_bound,
    };

    if let Some(disc) = args.disc {
        // single-D mode: hard errors propagate to the exit code
        let exact = trace_exact(&TraceRequest {
            k: args.k,
            class_form: class_form.clone(),
            disc,
        })?;
        let numeric = trace_numeric(args.k, &class_form, disc, &cfg)?;
        let report = compare(&exact.value, numeric.value, args.rel_tol);
        let row = VerifyRow::passed(disc, &exact.value, &numeric, &report);
        emit_verify(&[row], &cfg, args.rel_tol, format)?;
        return Ok(if report.pass { 0 } else { 1 });
    }

    let dmax = args.dmax.ok_or_else(|| {
        Error::InvalidInput("verify needs either --D or --Dmax".into())
    })?;
    let discs: Vec<i64> = (args.dmin.max(1)..=dmax)
        .filter(|d| is_discriminant(*d))
        .collect();
    let rows: Vec<VerifyRow> = discs
        .into_par_iter()
        .map(|disc| {
            if is_square(disc) {
                return VerifyRow::skipped(disc, "square discriminant".into());
            }
            let exact = match trace_exact(&TraceRequest {
                k: args.k,
                class_form: class_form.clone(),
                disc,
            }) {
                Ok(r) => r,
                Err(e @ Error::GeodesicCollision { .. }) => {
                    return VerifyRow::skipped(disc, e.to_string())
                }
                Err(e) => return VerifyRow::errored(disc, e.to_string()),
            };
            match trace_numeric(args.k, &class_form, disc, &cfg) {
                Ok(numeric) => {
                    let report = compare(&exact.value, numeric.value, args.rel_tol);
                    VerifyRow::passed(disc, &exact.value, &numeric, &report)
                }
                // NoConvergence is reported per row without aborting
                Err(e) => VerifyRow::errored(disc, e.to_string()),
            }
        })
        .collect();
    let all_ok = rows
        .iter()
        .all(|r| r.status == "pass" || r.status == "skipped");
    emit_verify(&rows, &cfg, args.rel_tol, format)?;
    Ok(if all_ok { 0 } else { 1 })
}

fn emit_verify(
    rows: &[VerifyRow],
    cfg: &QuadratureConfig,
    rel_tol: f64,
    format: OutputFormat,
) -> Result<()> {
    #[derive(Serialize)]
    struct VerifyJson<'a> {
        rel_tol: f64,
        config: ConfigJson,
        rows: &'a [VerifyRow],
    }
    #[derive(Serialize)]
    struct SingleVerifyJson<'a> {
        #[serde(flatten)]
        row: &'a VerifyRow,
        rel_tol: f64,
        config: ConfigJson,
    }
    match format {
        OutputFormat::Json if rows.len() == 1 => print_json(&SingleVerifyJson {
            row: &rows[0],
            rel_tol,
            config: cfg.into(),
        }),
        OutputFormat::Json => print_json(&VerifyJson {
            rel_tol,
            config: cfg.into(),
            rows,
        }),
        OutputFormat::Csv => {
            println!("D,status,exact,numeric,rel_diff,reason");
            for r in rows {
                println!(
                    "{},{},{},{},{},{}",
                    r.disc,
                    r.status,
                    r.exact.clone().unwrap_or_default(),
                    r.numeric.map(|v| v.to_string()).unwrap_or_default(),
                    r.rel_diff.map(|v| format!("{v:e}")).unwrap_or_default(),
                    csv_escape(&r.reason.clone().unwrap_or_default())
                );
            }
        }
        OutputFormat::Markdown => {
            println!("| D | status | exact | numeric | rel_diff |");
            println!("|---|--------|-------|---------|----------|");
            for r in rows {
                println!(
                    "| {} | {} | {} | {} | {} |",
                    r.disc,
                    r.status,
                    r.exact.clone().unwrap_or_else(|| "-".into()),
                    r.numeric.map(|v| format!("{v:.6}")).unwrap_or_else(|| "-".into()),
                    r.rel_diff
                        .map(|v| format!("{v:.2e}"))
                        .unwrap_or_else(|| "-".into()),
                );
            }
        }
    }
    Ok(())
}

fn cmd_classes(args: ClassesArgs, format: OutputFormat) -> Result<i32> {
    let set = indefinite_class_reps(args.disc)?;
    let pell = pell_fundamental(args.disc)?;
    let automorphs = set
        .reps
        .iter()
        .map(automorph)
        .collect::<Result<Vec<_>>>()?;
    let json = classes_json(&set, &pell, &automorphs)?;
    match format {
        OutputFormat::Json => print_json(&json),
        OutputFormat::Csv => {
            println!("D,form,content,automorph");
            for c in &json.classes {
                println!(
                    "{},{},{},{}",
                    json.disc,
                    csv_escape(&format!("{:?}", c.form)),
                    c.content,
                    csv_escape(&serde_json::to_string(&c.automorph).unwrap())
                );
            }
        }
        OutputFormat::Markdown => {
            println!(
                "Pell solution for D = {}: t = {}, u = {}",
                json.disc, json.pell.t, json.pell.u
            );
            println!();
            println!("| form | content | automorph |");
            println!("|------|---------|-----------|");
            for c in &json.classes {
                println!(
                    "| {:?} | {} | {:?} |",
                    c.form, c.content, c.automorph
                );
            }
        }
    }
    Ok(0)
}
