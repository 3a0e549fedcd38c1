//! Human-readable rendering of campaign reports and verification results.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde_json::Value;

use crate::campaign::Counts;
use crate::verify::CheckRecord;

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("line {line}: {source}")]
    Json { line: usize, source: serde_json::Error },
    #[error("line {line}: record has no \"record\" field")]
    Untagged { line: usize },
    #[error("report has no totals record")]
    NoTotals,
}

#[derive(Debug, Clone, Default)]
pub struct ParsedReport {
    pub header: Option<Value>,
    pub findings: Vec<Value>,
    pub instances: u64,
    pub counts: BTreeMap<String, Counts>,
}

pub fn parse_report(text: &str) -> Result<ParsedReport, ReportError> {
    let mut out = ParsedReport::default();
    let mut saw_totals = false;
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let line_no = i + 1;
        let v: Value =
            serde_json::from_str(line).map_err(|source| ReportError::Json { line: line_no, source })?;
        match v.get("record").and_then(Value::as_str) {
            Some("header") => out.header = Some(v),
            Some("finding") => out.findings.push(v),
            Some("totals") => {
                saw_totals = true;
                out.instances = v["instances"].as_u64().unwrap_or(0);
                out.counts = serde_json::from_value(v["counts"].clone())
                    .map_err(|source| ReportError::Json { line: line_no, source })?;
            }
            Some(_) => {}
            None => return Err(ReportError::Untagged { line: line_no }),
        }
    }
    if !saw_totals {
        return Err(ReportError::NoTotals);
    }
    Ok(out)
}

pub fn render_counts(instances: u64, counts: &BTreeMap<String, Counts>) -> String {
    let mut s = String::new();
    writeln!(s, "instances: {instances}").unwrap();
    writeln!(s, "{:<12} {:>10} {:>10} {:>10} {:>10}", "check", "applicable", "holds", "equality", "violated")
        .unwrap();
    for (check, c) in counts {
        writeln!(
            s,
            "{:<12} {:>10} {:>10} {:>10} {:>10}",
            check, c.applicable, c.holds, c.equality, c.violated
        )
        .unwrap();
    }
    s
}

pub fn render_report(r: &ParsedReport, limit: usize) -> String {
    let mut s = String::new();
    if let Some(h) = &r.header {
        writeln!(s, "seed: {}  params: {}", h["seed"], h["params"]).unwrap();
    }
    s.push_str(&render_counts(r.instances, &r.counts));
    let violations: Vec<&Value> = r.findings.iter().filter(|f| f["status"] == "violated").collect();
    let equalities = r.findings.len() - violations.len();
    writeln!(s, "findings: {} violated, {} equality", violations.len(), equalities).unwrap();
    for f in r.findings.iter().take(limit) {
        writeln!(
            s,
            "  {:<10} {:<10} {:<24} {}",
            f["status"].as_str().unwrap_or("?"),
            f["check"].as_str().unwrap_or("?"),
            f["id"].as_str().unwrap_or("?"),
            f["detail"]
        )
        .unwrap();
    }
    if r.findings.len() > limit {
        writeln!(s, "  ... {} more", r.findings.len() - limit).unwrap();
    }
    s
}

pub fn render_checks(records: &[CheckRecord]) -> String {
    let mut s = String::new();
    for r in records {
        let status = serde_json::to_value(r.status).expect("status serializes");
        writeln!(s, "{:<12} {:<15} {}", r.check, status.as_str().unwrap_or("?"), r.detail).unwrap();
    }
    s
}
