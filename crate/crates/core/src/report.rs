//! Verification reports shared by the checking operations and the CLI.

use serde::Serialize;

/// Outcome of one verification run.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    /// Name of the identity being checked.
    pub check: String,
    /// Group or object the check ran on.
    pub subject: String,
    pub passed: bool,
    /// Number of individual comparisons made.
    pub comparisons: usize,
    /// First mismatch, if any, as a readable description.
    pub first_discrepancy: Option<String>,
    /// Check-specific data.
    pub details: serde_json::Value,
}

impl Report {
    pub fn new(check: &str, subject: &str) -> Self {
        Report {
            check: check.into(),
            subject: subject.into(),
            passed: true,
            comparisons: 0,
            first_discrepancy: None,
            details: serde_json::Value::Null,
        }
    }

    /// Records one comparison; the first failing one is kept as the discrepancy.
    pub fn compare<F: FnOnce() -> String>(&mut self, ok: bool, describe: F) {
        self.comparisons += 1;
        if !ok {
            if self.first_discrepancy.is_none() {
                self.first_discrepancy = Some(describe());
            }
            self.passed = false;
        }
    }

    pub fn with_details(mut self, d: serde_json::Value) -> Self {
        self.details = d;
        self
    }

    /// Folds another report into this one.
    pub fn absorb(&mut self, other: &Report) {
        self.comparisons += other.comparisons;
        if !other.passed {
            self.passed = false;
            if self.first_discrepancy.is_none() {
                self.first_discrepancy = other
                    .first_discrepancy
                    .clone()
                    .map(|d| format!("{} [{}]: {d}", other.check, other.subject));
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}
