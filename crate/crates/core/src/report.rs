//! Verification reports shared by the library verifiers and the CLI.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One verified identity or assertion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    /// Which mathematical statement this check reproduces.
    pub reference: String,
    pub status: Status,
    /// Residual polynomials, witnesses or computed values.
    pub payload: Value,
}

impl Check {
    pub fn new(id: impl Into<String>, reference: impl Into<String>, ok: bool, payload: Value) -> Self {
        Check {
            id: id.into(),
            reference: reference.into(),
            status: Status::from_bool(ok),
            payload,
        }
    }

    pub fn skip(id: impl Into<String>, reference: impl Into<String>, payload: Value) -> Self {
        Check {
            id: id.into(),
            reference: reference.into(),
            status: Status::Skip,
            payload,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub command: String,
    pub checks: Vec<Check>,
    pub status: Status,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            checks: Vec::new(),
            status: Status::Pass,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
        self.refresh();
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
        self.refresh();
    }

    /// Appends another report's checks, prefixing their ids.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        self.extend(other.checks.into_iter().map(|mut c| {
            c.id = format!("{prefix}/{}", c.id);
            c
        }));
    }

    fn refresh(&mut self) {
        self.status = Status::from_bool(
            self.checks
                .iter()
                .all(|c| matches!(c.status, Status::Pass | Status::Skip)),
        );
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// Plain-text table: one line per check, then the overall status.
    pub fn to_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            let _ = writeln!(out, "{tag}  {:width$}  {}", c.id, c.reference);
        }
        let _ = writeln!(
            out,
            "{} checks, {} failed: {}",
            self.checks.len(),
            self.failures().count(),
            if self.passed() { "PASS" } else { "FAIL" }
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn overall_status_ignores_skips() {
        let mut r = Report::new("test");
        r.push(Check::new("a", "x", true, json!(null)));
        r.push(Check::skip("b", "y", json!(null)));
        assert!(r.passed());
        r.push(Check::new("c", "z", false, json!(null)));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn status_serializes_lowercase() {
        let c = Check::new("a", "x", true, json!(1));
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["status"], "pass");
    }
}
