//! Rendering of result records in the three output formats.

use crate::Format;
use serde_json::{json, Value};
use shades::extremal::{ExtremalResult, SearchStatus, Witness};
use shades::report::{Verdict, VerificationReport};

/// 12 significant digits, scientific.
pub fn sig12(v: f64) -> String {
    format!("{v:.11e}")
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn witness_value(w: Option<&Witness>) -> Value {
    match w {
        Some(w) => Value::String(w.to_text()),
        None => Value::Null,
    }
}

pub struct SearchRendering {
    pub quantity: &'static str,
    pub params: Vec<i64>,
    pub result: ExtremalResult,
    /// Extra quantity-specific fields (e.g. the Sperner ratio).
    pub extra: Vec<(&'static str, Value)>,
    pub timings: bool,
}

impl SearchRendering {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut obj = json!({
                    "quantity": self.quantity,
                    "params": self.params,
                    "value": self.result.value.to_string(),
                    "status": self.result.status.as_str(),
                    "nodes": self.result.nodes,
                    "seconds": if self.timings { json!(self.result.seconds) } else { Value::Null },
                    "witness_a": witness_value(Some(&self.result.witness_a)),
                    "witness_b": witness_value(self.result.witness_b.as_ref()),
                });
                for (k, v) in &self.extra {
                    obj[*k] = v.clone();
                }
                format!("{obj}\n")
            }
            Format::Text => {
                let params = self
                    .params
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", ");
                let mut out = format!(
                    "{}({}) = {} [{}]\n",
                    self.quantity,
                    params,
                    self.result.value,
                    self.result.status.as_str()
                );
                out.push_str(&format!("nodes: {}\n", self.result.nodes));
                if self.timings {
                    out.push_str(&format!("seconds: {:.3}\n", self.result.seconds));
                }
                for (k, v) in &self.extra {
                    out.push_str(&format!("{k}: {v}\n"));
                }
                out.push_str("witness A:\n");
                out.push_str(&indent(&self.result.witness_a.to_text(), 2));
                if let Some(b) = &self.result.witness_b {
                    out.push_str("witness B:\n");
                    out.push_str(&indent(&b.to_text(), 2));
                }
                out
            }
            Format::Csv => {
                let params = self
                    .params
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(";");
                let seconds = if self.timings {
                    format!("{:.6}", self.result.seconds)
                } else {
                    String::new()
                };
                format!(
                    "quantity,params,value,status,nodes,seconds\n{},{},{},{},{},{}\n",
                    self.quantity,
                    csv_field(&params),
                    self.result.value,
                    self.result.status.as_str(),
                    self.result.nodes,
                    seconds
                )
            }
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.result.status {
            SearchStatus::Optimal => 0,
            SearchStatus::LowerBound => 3,
        }
    }
}

fn indent(text: &str, by: usize) -> String {
    let pad = " ".repeat(by);
    text.lines()
        .map(|l| format!("{pad}{l}\n"))
        .collect::<String>()
}

pub struct VerifySummary {
    pub confirmed: u64,
    pub refuted: u64,
    pub budget_exceeded: u64,
}

impl VerifySummary {
    pub fn tally(reports: &[VerificationReport]) -> Self {
        let mut s = Self {
            confirmed: 0,
            refuted: 0,
            budget_exceeded: 0,
        };
        for r in reports {
            match r.verdict {
                Verdict::Confirmed => s.confirmed += 1,
                Verdict::Refuted => s.refuted += 1,
                Verdict::BudgetExceeded => s.budget_exceeded += 1,
            }
        }
        s
    }
}

pub fn render_reports(reports: &[VerificationReport], format: Format, timings: bool) -> String {
    let summary = VerifySummary::tally(reports);
    let mut out = String::new();
    match format {
        Format::Text => {
            for r in reports {
                let params = r
                    .params
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                out.push_str(&format!("{}({}) {}", r.claim, params, r.verdict.as_str()));
                if timings {
                    out.push_str(&format!(" [{:.3}s]", r.elapsed));
                }
                out.push('\n');
                if let Some(w) = &r.witness {
                    out.push_str("  witness:\n");
                    out.push_str(&indent(w, 4));
                }
            }
            out.push_str(&format!(
                "summary: confirmed={} refuted={} budget_exceeded={}\n",
                summary.confirmed, summary.refuted, summary.budget_exceeded
            ));
        }
        Format::Json => {
            for r in reports {
                let obj = json!({
                    "claim": r.claim,
                    "params": r.params,
                    "verdict": r.verdict.as_str(),
                    "witness": r.witness.as_deref().map(Value::from).unwrap_or(Value::Null),
                    "elapsed": if timings { json!(r.elapsed) } else { Value::Null },
                });
                out.push_str(&format!("{obj}\n"));
            }
            let obj = json!({"summary": {
                "confirmed": summary.confirmed,
                "refuted": summary.refuted,
                "budget_exceeded": summary.budget_exceeded,
            }});
            out.push_str(&format!("{obj}\n"));
        }
        Format::Csv => {
            out.push_str("claim,params,verdict,witness\n");
            for r in reports {
                let params = r
                    .params
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(";");
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    r.claim,
                    csv_field(&params),
                    r.verdict.as_str(),
                    csv_field(r.witness.as_deref().unwrap_or("")),
                ));
            }
        }
    }
    out
}

/// A probe table: fixed header, rows of pre-rendered fields, optional
/// trailing comment lines.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub trailers: Vec<String>,
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut out = String::new();
                for row in &self.rows {
                    let obj: Value = self
                        .header
                        .iter()
                        .zip(row)
                        .map(|(k, v)| ((*k).to_string(), Value::String(v.clone())))
                        .collect::<serde_json::Map<String, Value>>()
                        .into();
                    out.push_str(&format!("{obj}\n"));
                }
                for t in &self.trailers {
                    out.push_str(&format!("{}\n", json!({ "comment": t })));
                }
                out
            }
            // The tables are CSV-shaped by definition; text falls through.
            Format::Csv | Format::Text => {
                let mut out = self.header.join(",");
                out.push('\n');
                for row in &self.rows {
                    let fields: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
                    out.push_str(&fields.join(","));
                    out.push('\n');
                }
                for t in &self.trailers {
                    out.push_str(&format!("# {t}\n"));
                }
                out
            }
        }
    }
}
