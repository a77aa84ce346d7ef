//! Run reports and their pretty/JSON/CSV renderings.

use std::fmt::Write as _;

use cunningham::{Factorization, IrreducibilityVerdict, Polynomial};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub i: usize,
    pub poly: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_factors: Option<Vec<String>>,
}

impl Entry {
    pub fn from_verdict(i: usize, f: &Polynomial, verdict: &IrreducibilityVerdict) -> Self {
        Entry {
            i,
            poly: f.to_string(),
            status: verdict.status().to_string(),
            certificate: verdict.certificate().map(|c| c.name().to_string()),
            witness_factors: verdict.witness().map(factor_strings),
        }
    }
}

/// Factors as text, constant part first (omitted when it is 1), repeated
/// factors as `(f)^e`.
pub fn factor_strings(fact: &Factorization) -> Vec<String> {
    let mut out = Vec::new();
    let unit = &fact.content * fact.sign;
    if unit != 1.into() || fact.factors.is_empty() {
        out.push(unit.to_string());
    }
    for (g, e) in &fact.factors {
        out.push(match e {
            1 => g.to_string(),
            _ => format!("({g})^{e}"),
        });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: String,
    pub command: String,
    pub params: Map<String, Value>,
    pub entries: Vec<Entry>,
    /// Departures from the expected reducibility pattern.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub findings: Vec<String>,
    pub elapsed_ms: u64,
}

impl RunReport {
    pub fn new(command: &str, params: Map<String, Value>) -> Self {
        RunReport {
            schema: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            params,
            entries: Vec::new(),
            findings: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Pretty => self.pretty(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
        }
    }

    fn pretty(&self) -> String {
        let mut s = String::new();
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(s, "{} {}", self.command, params.join(" "));
        for e in &self.entries {
            let _ = write!(s, "{:>4}  {:<11}  {}", e.i, e.status, e.poly);
            if let Some(c) = &e.certificate {
                let _ = write!(s, "  [{c}]");
            }
            if let Some(w) = &e.witness_factors {
                let parts: Vec<String> = w
                    .iter()
                    .map(|f| {
                        if f.contains(' ') && !f.starts_with('(') {
                            format!("({f})")
                        } else {
                            f.clone()
                        }
                    })
                    .collect();
                let _ = write!(s, "  = {}", parts.join(" "));
            }
            s.push('\n');
        }
        for f in &self.findings {
            let _ = writeln!(s, "finding: {f}");
        }
        let _ = writeln!(s, "({} ms)", self.elapsed_ms);
        s
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["i", "poly", "status", "certificate", "witness_factors"])
            .expect("in-memory write");
        for e in &self.entries {
            let i = e.i.to_string();
            let witness = e
                .witness_factors
                .as_ref()
                .map(|w| w.join(" * "))
                .unwrap_or_default();
            w.write_record([
                i.as_str(),
                &e.poly,
                &e.status,
                e.certificate.as_deref().unwrap_or(""),
                &witness,
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}
