//! Pass/fail bookkeeping for the verification sweeps.

use std::fmt;

use serde::Serialize;

const KEPT_FAILURES: usize = 16;

/// Outcome of one verification sweep: how many checks ran and which failed.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    title: String,
    checked: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), checked: 0, failed: 0, failures: Vec::new() }
    }

    /// Records one check; the message is only built on failure.
    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok {
            self.fail(msg());
        }
        ok
    }

    pub fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(msg);
        }
    }

    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(format!("{}: {f}", other.title));
            }
        }
    }

    pub fn title(&self) -> &str {
        &self.title
    }

    pub fn checked(&self) -> usize {
        self.checked
    }

    pub fn failed(&self) -> usize {
        self.failed
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// The first recorded counterexample, if any.
    pub fn first_failure(&self) -> Option<&str> {
        self.failures.first().map(String::as_str)
    }

    pub fn failures(&self) -> &[String] {
        &self.failures
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {} ({} checks", self.title, self.checked)?;
        if self.failed > 0 {
            write!(f, ", {} failed", self.failed)?;
        }
        write!(f, ")")?;
        for msg in &self.failures {
            write!(f, "\n    {msg}")?;
        }
        Ok(())
    }
}
