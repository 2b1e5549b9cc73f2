//! Named pass/fail outcomes collected by the verification routines.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    /// Measured values, for the report.
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, id: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            id: id.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn passed(&self, id: &str) -> bool {
        self.get(id).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "{status}  {}  {}", c.id, c.detail)?;
        }
        Ok(())
    }
}
