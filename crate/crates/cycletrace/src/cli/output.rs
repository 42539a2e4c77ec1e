//! Serialization of results: JSON (stable field order), CSV, markdown.

use crate::exactmath::{format_rational, parse_rational, rational_int, Rational};
use crate::oracle::{CompareReport, NumericTrace, QuadratureConfig};
use crate::quadforms::{BinaryQuadraticForm, IndefiniteClassSet, Matrix2, PellSolution};
use crate::traces::{TraceRequest, TraceResult};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

/// Output format selector shared by all subcommands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

pub(crate) fn form_triplet(form: &BinaryQuadraticForm) -> Result<[i64; 3]> {
    let cast = |n: &BigInt| {
        n.to_i64()
            .ok_or_else(|| Error::InvalidInput(format!("coefficient {n} exceeds i64 range")))
    };
    Ok([cast(&form.a)?, cast(&form.b)?, cast(&form.c)?])
}

/// Wire format of a [`TraceResult`]; rationals are decimal-free `p/q`
/// strings and forms are `[a, b, c]` integer arrays.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceResultJson {
    pub k: u32,
    pub d: i64,
    #[serde(rename = "A")]
    pub class: [i64; 3],
    #[serde(rename = "D")]
    pub disc: i64,
    pub trace: String,
    pub ck: String,
    pub stabilizer: u32,
    pub interior_forms: Vec<InteriorFormJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InteriorFormJson {
    pub form: [i64; 3],
    pub q_num: i64,
}

impl TraceResultJson {
    pub fn from_result(r: &TraceResult) -> Result<Self> {
        let interior = r
            .interior_forms
            .iter()
            .map(|(form, q)| {
                Ok(InteriorFormJson {
                    form: form_triplet(form)?,
                    q_num: q
                        .to_i64()
                        .ok_or_else(|| Error::InvalidInput("q_num exceeds i64".into()))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TraceResultJson {
            k: r.request.k,
            d: r.request.class_form.disc_i64()?,
            class: form_triplet(&r.request.class_form)?,
            disc: r.request.disc,
            trace: format_rational(&r.value),
            ck: format_rational(&r.ck),
            stabilizer: r.stabilizer,
            interior_forms: interior,
        })
    }

    /// Rebuild the in-memory result; used by the round-trip checks.
    pub fn into_result(self) -> Result<TraceResult> {
        let class_form =
            BinaryQuadraticForm::from_i64(self.class[0], self.class[1], self.class[2]);
        Ok(TraceResult {
            request: TraceRequest {
                k: self.k,
                class_form,
                disc: self.disc,
            },
            value: parse_rational(&self.trace)?,
            ck: parse_rational(&self.ck)?,
            interior_forms: self
                .interior_forms
                .into_iter()
                .map(|i| {
                    (
                        BinaryQuadraticForm::from_i64(i.form[0], i.form[1], i.form[2]),
                        BigInt::from(i.q_num),
                    )
                })
                .collect(),
            stabilizer: self.stabilizer,
        })
    }
}

/// One row of a `table` run.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    #[serde(rename = "D")]
    pub disc: i64,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<String>,
    /// `3 * trace` for `k = 4`, mirroring the cleared-denominator display.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scaled: Option<String>,
}

/// One row of a `verify` run.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    #[serde(rename = "D")]
    pub disc: i64,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_diff: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub est_error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
}

impl VerifyRow {
    pub fn passed(
        disc: i64,
        exact: &Rational,
        numeric: &NumericTrace,
        report: &CompareReport,
    ) -> Self {
        VerifyRow {
            disc,
            status: if report.pass { "pass" } else { "fail" },
            reason: None,
            exact: Some(format_rational(exact)),
            numeric: Some(numeric.value),
            rel_diff: Some(report.rel_diff),
            est_error: Some(numeric.est_error),
            pass: Some(report.pass),
        }
    }

    pub fn skipped(disc: i64, reason: String) -> Self {
        VerifyRow {
            disc,
            status: "skipped",
            reason: Some(reason),
            exact: None,
            numeric: None,
            rel_diff: None,
            est_error: None,
            pass: None,
        }
    }

    pub fn errored(disc: i64, reason: String) -> Self {
        VerifyRow {
            disc,
            status: "error",
            reason: Some(reason),
            exact: None,
            numeric: None,
            rel_diff: None,
            est_error: None,
            pass: Some(false),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfigJson {
    pub rel_tol: f64,
    pub max_panels: usize,
    pub orbit_bound: i64,
    pub max_orbit_bound: i64,
}

impl From<&QuadratureConfig> for ConfigJson {
    fn from(c: &QuadratureConfig) -> Self {
        ConfigJson {
            rel_tol: c.rel_tol,
            max_panels: c.max_panels,
            orbit_bound: c.orbit_bound,
            max_orbit_bound: c.max_orbit_bound,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassJson {
    pub form: [i64; 3],
    pub content: i64,
    pub automorph: [[String; 2]; 2],
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassesJson {
    #[serde(rename = "D")]
    pub disc: i64,
    pub pell: PellJson,
    pub class_count: usize,
    pub classes: Vec<ClassJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PellJson {
    pub t: String,
    pub u: String,
}

pub(crate) fn classes_json(
    set: &IndefiniteClassSet,
    pell: &PellSolution,
    automorphs: &[Matrix2],
) -> Result<ClassesJson> {
    let classes = set
        .reps
        .iter()
        .zip(automorphs)
        .map(|(form, m)| {
            Ok(ClassJson {
                form: form_triplet(form)?,
                content: form
                    .content()
                    .to_i64()
                    .ok_or_else(|| Error::InvalidInput("content exceeds i64".into()))?,
                automorph: [
                    [m.p.to_string(), m.q.to_string()],
                    [m.r.to_string(), m.s.to_string()],
                ],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassesJson {
        disc: set.d,
        pell: PellJson {
            t: pell.t.to_string(),
            u: pell.u.to_string(),
        },
        class_count: classes.len(),
        classes,
    })
}

/// `3 * trace` rendered for the `k = 4` display column.
pub(crate) fn scaled_trace(value: &Rational) -> String {
    let scaled = value * rational_int(3);
    if scaled.is_integer() {
        scaled.numer().to_string()
    } else {
        format_rational(&scaled)
    }
}

pub(crate) fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
