//! Report envelope and rendering.
//!
//! Every command produces one report. The JSON rendering is the machine
//! contract and validates against report.schema.json shipped next to this
//! crate:
//!
//! ```text
//! {
//!   "command":  <job name>,
//!   "version":  <crate version>,
//!   "status":   "ok" | "check-failed",
//!   "input":    full echo of the parsed job (unused fields are null),
//!   "result":   per-command payload
//! }
//! ```
//!
//! Exact values are strings ("p/q" for rationals, polynomial expressions in
//! the parameter g for symbolic runs); plain counts and indices are JSON
//! integers. Nothing is ever a float. CSV renders only the tabular payload
//! (per-command headers are documented in the README); text renders a short
//! human-readable block with the echo up front.

use serde::Serialize;
use serde_json::Value;

/// Output format selector shared by every subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn as_str(&self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        }
    }
}

/// Whether the mathematical content of the job checked out. A failed check
/// is a well-formed report with exit code 1, not an input error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    CheckFailed,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::CheckFailed => "check-failed",
        }
    }
}

impl Serialize for Status {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Full echo of the parsed job. Fields a command does not take stay null.
#[derive(Clone, Debug, Serialize)]
pub struct InputEcho {
    pub algebra: Option<String>,
    pub lambda: Option<Vec<i64>>,
    pub mu: Option<Vec<i64>>,
    pub order: Option<usize>,
    pub gamma: Option<String>,
    pub format: &'static str,
}

impl InputEcho {
    pub fn empty(format: Format) -> Self {
        InputEcho {
            algebra: None,
            lambda: None,
            mu: None,
            order: None,
            gamma: None,
            format: format.as_str(),
        }
    }
}

/// The envelope serialized as the JSON report.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub version: &'static str,
    pub status: Status,
    pub input: InputEcho,
    pub result: Value,
}

/// What a command runner hands back: pass/fail plus the three renderings
/// of its payload.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub ok: bool,
    pub result: Value,
    pub csv: String,
    pub text: String,
}

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Renders the finished report in the requested format, trailing newline
/// included.
pub fn render(report: &Report, outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => outcome.csv.clone(),
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!("command: {}\n", report.command));
            s.push_str(&format!("version: {}\n", report.version));
            s.push_str(&format!("status: {}\n", report.status.as_str()));
            let e = &report.input;
            if let Some(a) = &e.algebra {
                s.push_str(&format!("algebra: {}\n", a));
            }
            if let Some(l) = &e.lambda {
                s.push_str(&format!("lambda: {}\n", join_i64(l)));
            }
            if let Some(m) = &e.mu {
                s.push_str(&format!("mu: {}\n", join_i64(m)));
            }
            if let Some(n) = e.order {
                s.push_str(&format!("order: {}\n", n));
            }
            if let Some(g) = &e.gamma {
                s.push_str(&format!("gamma: {}\n", g));
            }
            s.push('\n');
            s.push_str(&outcome.text);
            s
        }
    }
}

pub fn join_i64(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
