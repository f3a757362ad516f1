//! Named pass/fail checks with witnesses, shared by the verification reports.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Witnesses kept per failing check.
pub const MAX_WITNESSES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Number of cases examined.
    pub cases: usize,
    /// Number of failing cases.
    pub failures: usize,
    /// First few failing cases, rendered.
    pub witnesses: Vec<String>,
}

impl Check {
    /// Builds a check from the rendered failures among `cases` examined cases.
    pub fn from_failures(name: impl Into<String>, cases: usize, failures: Vec<String>) -> Self {
        let count = failures.len();
        Self {
            name: name.into(),
            passed: count == 0,
            cases,
            failures: count,
            witnesses: failures.into_iter().take(MAX_WITNESSES).collect(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} ({} cases", self.name, self.cases)?;
        if !self.passed {
            write!(f, ", {} failures", self.failures)?;
        }
        f.write_str(")")?;
        for w in &self.witnesses {
            write!(f, "\n    {w}")?;
        }
        Ok(())
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
