//! Report documents and their text and structured (JSON) renderings.

use std::fmt::Write as _;

use serde::Serialize;

use whyd_core::suite::InstanceRun;
use whyd_core::CheckReport;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TimedReport {
    #[serde(flatten)]
    pub report: CheckReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TimedRun {
    #[serde(flatten)]
    pub run: InstanceRun,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

/// Everything one invocation checked, in evaluation order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub version: u32,
    pub command: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<TimedReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub instances: Vec<TimedRun>,
}

impl ReportDocument {
    pub fn new(command: impl Into<String>) -> Self {
        ReportDocument { version: REPORT_VERSION, command: command.into(), passed: true, reports: Vec::new(), instances: Vec::new() }
    }

    pub fn add(&mut self, report: CheckReport, millis: Option<u128>) {
        self.passed &= report.passed();
        self.reports.push(TimedReport { report, millis });
    }

    pub fn add_run(&mut self, run: InstanceRun, millis: Option<u128>) {
        self.passed &= run.passed();
        self.instances.push(TimedRun { run, millis });
    }

    /// Keeps at most `cap` witnesses per failing identity.
    pub fn cap_witnesses(&mut self, cap: usize) {
        for r in &mut self.reports {
            r.report.truncate_witnesses(cap);
        }
        for i in &mut self.instances {
            for s in &mut i.run.sections {
                for f in &mut s.failures {
                    f.truncate_witnesses(cap);
                }
            }
        }
    }
}

pub fn emit_report(doc: &ReportDocument, format: Format) -> Vec<u8> {
    match format {
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(doc).expect("reports serialize");
            s.push('\n');
            s.into_bytes()
        }
        Format::Text => text(doc).into_bytes(),
    }
}

fn text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    for r in &doc.reports {
        out.push_str(&r.report.to_string());
        if let Some(ms) = r.millis {
            let _ = writeln!(out, "  ({ms} ms)");
        }
    }
    for i in &doc.instances {
        let run = &i.run;
        let _ = write!(out, "{} over {}, dim {}: {}", run.instance, run.field, run.dim, if run.passed() { "PASS" } else { "FAIL" });
        if let Some(ms) = i.millis {
            let _ = write!(out, " ({ms} ms)");
        }
        let _ = writeln!(out, "\n  corpus: {}", run.corpus.join(", "));
        for s in &run.sections {
            let _ = writeln!(
                out,
                "  {} {:<24} {:>6} checked, {} failed",
                if s.passed() { "ok  " } else { "FAIL" },
                s.name,
                s.checked,
                s.failed
            );
            for d in &s.deviations {
                let _ = writeln!(out, "       deviation: {d}");
            }
            for f in &s.failures {
                for line in f.to_string().lines() {
                    let _ = writeln!(out, "       {line}");
                }
            }
        }
    }
    let _ = writeln!(out, "{}: {}", doc.command, if doc.passed { "PASS" } else { "FAIL" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use whyd_core::{CheckEntry, Field, LinearMap};

    fn failing() -> CheckReport {
        let f = Field::Rational;
        let id = LinearMap::identity(f, &[3]);
        let mut r = CheckReport::new("demo");
        r.push(CheckEntry::compare("id", "demo", "id = -id", &id, &id.scale(&f.int(-1))).unwrap());
        r
    }

    #[test]
    fn passed_tracks_every_report() {
        let mut doc = ReportDocument::new("check");
        doc.add(CheckReport::new("empty"), None);
        assert!(doc.passed);
        assert!(String::from_utf8(emit_report(&doc, Format::Text)).unwrap().ends_with("check: PASS\n"));
        doc.add(failing(), Some(3));
        assert!(!doc.passed);
        let text = String::from_utf8(emit_report(&doc, Format::Text)).unwrap();
        assert!(text.contains("(3 ms)"));
        assert!(text.ends_with("check: FAIL\n"));
    }

    #[test]
    fn witnesses_are_capped() {
        let mut doc = ReportDocument::new("check");
        doc.add(failing(), None);
        let entry = &doc.reports[0].report.entries[0];
        assert_eq!(entry.failures, 3);
        assert!(entry.witnesses.len() > 1);
        doc.cap_witnesses(1);
        let entry = &doc.reports[0].report.entries[0];
        assert_eq!(entry.witnesses.len(), 1);
        assert_eq!(entry.failures, 3);
    }

    #[test]
    fn structured_output_omits_absent_timings() {
        let mut doc = ReportDocument::new("check");
        doc.add(failing(), None);
        let value: serde_json::Value = serde_json::from_slice(&emit_report(&doc, Format::Structured)).unwrap();
        assert_eq!(value["version"], REPORT_VERSION);
        assert_eq!(value["passed"], false);
        assert!(value["reports"][0].get("millis").is_none());
        assert!(value.get("instances").is_none());
    }
}
