use std::fmt;

use serde::{Deserialize, Serialize};

/// One failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub location: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of a verification suite: how many items were checked and
/// which of them failed. A report passes exactly when it has no violations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checked: u64,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport { suite: suite.into(), checked: 0, violations: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn tick(&mut self) {
        self.checked += 1;
    }

    pub fn fail(&mut self, location: impl Into<String>, expected: impl fmt::Display, got: impl fmt::Display) {
        self.violations.push(Violation {
            location: location.into(),
            expected: expected.to_string(),
            got: got.to_string(),
        });
    }

    /// Records one check and a violation when `expected != got`.
    pub fn expect_eq<T: PartialEq + fmt::Debug>(&mut self, location: impl FnOnce() -> String, expected: T, got: T) {
        self.checked += 1;
        if expected != got {
            self.fail(location(), format!("{expected:?}"), format!("{got:?}"));
        }
    }

    /// Appends another report's counts and violations.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({} checked, {} violations)",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            self.violations.len()
        )?;
        for v in self.violations.iter().take(5) {
            write!(f, "\n  {}: expected {}, got {}", v.location, v.expected, v.got)?;
        }
        if self.violations.len() > 5 {
            write!(f, "\n  ... {} more", self.violations.len() - 5)?;
        }
        Ok(())
    }
}
