//! Structured validation reports.
//!
//! Validators never answer with a bare boolean: each axiom gets a named
//! check with a pass flag and, on failure, a witness describing where the
//! axiom breaks (typically a basis index tuple).

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Present when `passed` is false (or when a check was skipped with a
    /// reason); identifies a concrete failing instance.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub subject: String,
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport { subject: subject.into(), checks: Vec::new() }
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(CheckResult { name: name.into(), passed: true, witness: None });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            passed: false,
            witness: Some(witness.into()),
        });
    }

    pub fn record(&mut self, name: impl Into<String>, witness: Option<String>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    /// Merge another report in, prefixing its check names.
    pub fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for mut check in other.checks {
            check.name = format!("{prefix}::{}", check.name);
            self.checks.push(check);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}]", self.subject)?;
        for c in &self.checks {
            let status = if c.passed { "ok " } else { "FAIL" };
            match &c.witness {
                Some(w) => writeln!(f, "  {status} {} ({w})", c.name)?,
                None => writeln!(f, "  {status} {}", c.name)?,
            }
        }
        Ok(())
    }
}
