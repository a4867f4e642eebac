//! Structured command results, rendered as text or JSON.

use serde::{Deserialize, Serialize};
use std::fmt::{self, Write};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Verdict {
    Pass,
    Fail,
    Match,
    Mismatch,
    MismatchSuspectedTypo,
    Info,
}

impl Verdict {
    pub fn ok(self) -> bool {
        !matches!(self, Verdict::Fail | Verdict::Mismatch | Verdict::MismatchSuspectedTypo)
    }

    pub fn check(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn compare(same: bool) -> Self {
        if same {
            Verdict::Match
        } else {
            Verdict::Mismatch
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
            Verdict::MismatchSuspectedTypo => "MISMATCH-SUSPECTED-TYPO",
            Verdict::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub label: String,
    pub computed: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed: Option<String>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub title: String,
    pub passed: bool,
    pub findings: Vec<Finding>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Section { title: title.into(), passed: true, findings: Vec::new() }
    }

    pub fn info(&mut self, label: impl Into<String>, computed: impl ToString) -> &mut Self {
        self.push(label, computed, None, Verdict::Info)
    }

    pub fn check(&mut self, label: impl Into<String>, computed: impl ToString, pass: bool) -> &mut Self {
        self.push(label, computed, None, Verdict::check(pass))
    }

    /// Records `computed` next to `claimed` with MATCH or MISMATCH.
    pub fn compare(&mut self, label: impl Into<String>, computed: impl ToString, claimed: impl ToString) -> &mut Self {
        let (c, p) = (computed.to_string(), claimed.to_string());
        let v = Verdict::compare(c == p);
        self.push(label, c, Some(p), v)
    }

    pub fn push(
        &mut self,
        label: impl Into<String>,
        computed: impl ToString,
        claimed: Option<String>,
        verdict: Verdict,
    ) -> &mut Self {
        self.passed &= verdict.ok();
        self.findings.push(Finding { label: label.into(), computed: computed.to_string(), claimed, verdict });
        self
    }
}

/// Output of one command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub inputs: Vec<String>,
    pub passed: bool,
    pub sections: Vec<Section>,
}

impl ReportDocument {
    pub fn new(command: impl Into<String>, inputs: &[String]) -> Self {
        ReportDocument { command: command.into(), inputs: inputs.to_vec(), passed: true, sections: Vec::new() }
    }

    pub fn add(&mut self, s: Section) {
        self.passed &= s.passed;
        self.sections.push(s);
    }

    /// A report for a command that could not run.
    pub fn error(command: impl Into<String>, inputs: &[String], err: impl fmt::Display) -> Self {
        let mut r = Self::new(command, inputs);
        let mut s = Section::new("error");
        s.push("error", err, None, Verdict::Fail);
        r.add(s);
        r
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let head = if self.inputs.is_empty() { self.command.clone() } else { self.inputs.join(" ") };
        let _ = writeln!(out, "$ dualmock {head}");
        for s in &self.sections {
            let _ = writeln!(out, "[{}] {}", s.title, Verdict::check(s.passed));
            for f in &s.findings {
                let _ = write!(out, "  {} = {}", f.label, f.computed);
                if let Some(c) = &f.claimed {
                    let _ = write!(out, " (claimed {c})");
                }
                if f.verdict != Verdict::Info {
                    let _ = write!(out, "  {}", f.verdict);
                }
                out.push('\n');
            }
        }
        let _ = writeln!(out, "result: {}", Verdict::check(self.passed));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_fold_into_result() {
        let mut r = ReportDocument::new("h2", &["D5_01".into()]);
        let mut s = Section::new("H2");
        s.info("dim Z2", 6).compare("dim H2", 5, 5);
        r.add(s);
        assert!(r.passed);
        assert!(r.to_text().contains("dim H2 = 5 (claimed 5)  MATCH"));
        let mut s = Section::new("other");
        s.compare("dim H2", 14, 12);
        r.add(s);
        assert!(!r.passed);
        let back: ReportDocument = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
