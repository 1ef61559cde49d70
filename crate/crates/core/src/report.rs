//! Pass/fail records produced by the verification routines.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Self {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Appends `other`'s checks, prefixing their names with its subject.
    pub fn absorb(&mut self, other: Report) {
        for c in other.checks {
            let name = if other.subject.is_empty() {
                c.name
            } else {
                format!("{}: {}", other.subject, c.name)
            };
            self.checks.push(Check { name, ..c });
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.subject.is_empty() {
            writeln!(f, "{}", self.subject)?;
        }
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "  {mark} {}", c.name)?;
            } else {
                writeln!(f, "  {mark} {} ({})", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

/// Tally of a sweep: items checked and the subjects that failed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub total: usize,
    pub failed: Vec<String>,
}

impl SweepSummary {
    pub fn record(&mut self, report: &Report) {
        self.total += 1;
        if !report.passed() {
            self.failed.push(report.subject.clone());
        }
    }

    pub fn merge(mut self, other: SweepSummary) -> Self {
        self.total += other.total;
        self.failed.extend(other.failed);
        self
    }

    pub fn passed(&self) -> bool {
        self.failed.is_empty()
    }
}
