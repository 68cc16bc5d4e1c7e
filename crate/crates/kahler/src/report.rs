//! Text and JSON renderings of a verification report.

use kahler_core::verify::{CheckResult, Erratum, Report, Status};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Serialize)]
struct CheckJson<'a> {
    id: &'a str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    erratum: Option<&'static str>,
    computed: &'a str,
    expected: &'a str,
    note: &'a str,
}

#[derive(Serialize)]
struct ErratumJson {
    id: &'static str,
    summary: &'static str,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    checks: Vec<CheckJson<'a>>,
    total: usize,
    mismatches: usize,
    documented_deviations: Vec<ErratumJson>,
    passed: bool,
}

fn check_json(c: &CheckResult) -> CheckJson<'_> {
    CheckJson {
        id: &c.id,
        status: c.status.label(),
        erratum: c.status.erratum().map(Erratum::id),
        computed: &c.computed,
        expected: &c.expected,
        note: &c.note,
    }
}

pub fn render(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => text(report),
        ReportFormat::Json => json(report),
    }
}

pub fn text(report: &Report) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let status = match c.status.erratum() {
            Some(e) => format!("{} {}", c.status.label(), e),
            None => c.status.label().to_string(),
        };
        out.push_str(&format!("{:<28} {}", c.id, status));
        if !c.note.is_empty() {
            out.push_str(&format!("  {}", c.note));
        }
        out.push('\n');
        if c.status != Status::Match {
            out.push_str(&format!("    computed: {}\n    expected: {}\n", c.computed, c.expected));
        }
    }
    let mismatches = report.mismatches().count();
    let devs: Vec<&str> = report.deviations().into_iter().map(Erratum::id).collect();
    out.push_str(&format!(
        "\n{} checks, {} mismatches, documented deviations: {}\n",
        report.checks.len(),
        mismatches,
        if devs.is_empty() { "none".to_string() } else { devs.join(" ") }
    ));
    out
}

pub fn json(report: &Report) -> String {
    let doc = ReportJson {
        checks: report.checks.iter().map(check_json).collect(),
        total: report.checks.len(),
        mismatches: report.mismatches().count(),
        documented_deviations: report
            .deviations()
            .into_iter()
            .map(|e| ErratumJson { id: e.id(), summary: e.summary() })
            .collect(),
        passed: report.passed(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}
