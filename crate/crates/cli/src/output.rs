//! Report serialization. JSON is the stable interface; text is for people.

use std::fmt::Write as _;

use hurwitz_core::scenarios::Report;
use hurwitz_core::{Status, Verdict};
use serde::{Deserialize, Serialize};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonBounds {
    pub degree: usize,
    pub trunc: usize,
    pub mode: String,
    pub samples: u64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonWitness {
    pub f: String,
    pub g: String,
    pub i: usize,
    pub j: usize,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCheck {
    pub property: String,
    pub status: String,
    pub bounds: JsonBounds,
    pub witness: Option<JsonWitness>,
}

/// A report in the published schema. Field order here is the field order in
/// the output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    pub scenario: Option<String>,
    pub ring: String,
    pub checks: Vec<JsonCheck>,
    pub timing_ms: u64,
    pub version: String,
}

fn json_check(property: &str, v: &Verdict) -> JsonCheck {
    JsonCheck {
        property: property.to_string(),
        status: v.status.as_str().to_string(),
        bounds: JsonBounds {
            degree: v.bounds.degree,
            trunc: v.bounds.trunc,
            mode: v.bounds.mode.as_str().to_string(),
            samples: v.bounds.samples,
            seed: v.bounds.seed,
        },
        witness: v.witness.as_ref().map(|w| {
            let f = w.fields();
            JsonWitness { f: f.f, g: f.g, i: f.i, j: f.j, value: f.value }
        }),
    }
}

impl JsonReport {
    pub fn from_report(report: &Report, timing_ms: u64) -> JsonReport {
        JsonReport {
            scenario: report.scenario.clone(),
            ring: report.ring.clone(),
            checks: report.checks.iter().map(|c| json_check(&c.property, &c.verdict)).collect(),
            timing_ms,
            version: VERSION.to_string(),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn render_text(report: &Report, timing_ms: Option<u64>) -> String {
    let mut out = String::new();
    if let Some(id) = &report.scenario {
        let _ = writeln!(out, "scenario {id} (seed {})", report.seed);
    }
    let _ = writeln!(out, "ring {}", report.ring);
    for line in &report.narrative {
        let _ = writeln!(out, "  {line}");
    }
    let _ = write!(out, "overall: {}", report.overall());
    if let Some(ms) = timing_ms {
        let _ = write!(out, " in {ms} ms");
    }
    out.push('\n');
    out
}

/// 0 holds, 1 fails, 2 unknown.
pub fn exit_code(status: Status) -> u8 {
    match status {
        Status::Holds => 0,
        Status::Fails => 1,
        Status::Unknown => 2,
    }
}
