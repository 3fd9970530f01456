//! Pass/fail records shared by the verification routines and the CLI.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// A checked quantity: a float, or text for exact values and diagnostics.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(untagged))]
pub enum CheckValue {
    Number(f64),
    Text(String),
}

impl fmt::Display for CheckValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckValue::Number(v) => write!(f, "{v:.10}"),
            CheckValue::Text(t) => f.write_str(t),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Check {
    pub check: String,
    pub expected: CheckValue,
    pub computed: CheckValue,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
}

#[derive(Clone, Debug, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.summary.total += 1;
        if check.pass {
            self.summary.passed += 1;
        }
        self.checks.push(check);
    }

    /// Passes when `|computed - expected| <= tolerance` and both are finite.
    pub fn number(&mut self, name: impl Into<String>, expected: f64, computed: f64, tolerance: f64) -> bool {
        let pass = expected.is_finite() && computed.is_finite() && (computed - expected).abs() <= tolerance;
        self.push(Check {
            check: name.into(),
            expected: CheckValue::Number(expected),
            computed: CheckValue::Number(computed),
            tolerance,
            pass,
        });
        pass
    }

    /// Passes on exact textual equality; tolerance 0.
    pub fn exact(&mut self, name: impl Into<String>, expected: impl Into<String>, computed: impl Into<String>) -> bool {
        let (expected, computed) = (expected.into(), computed.into());
        let pass = expected == computed;
        self.push(Check {
            check: name.into(),
            expected: CheckValue::Text(expected),
            computed: CheckValue::Text(computed),
            tolerance: 0.0,
            pass,
        });
        pass
    }

    /// A boolean property; `detail` goes in the computed column.
    pub fn flag(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) -> bool {
        self.push(Check {
            check: name.into(),
            expected: CheckValue::Text("true".into()),
            computed: CheckValue::Text(detail.into()),
            tolerance: 0.0,
            pass,
        });
        pass
    }

    /// A check that could not be computed.
    pub fn failure(&mut self, name: impl Into<String>, expected: CheckValue, error: &Error) {
        self.push(Check {
            check: name.into(),
            expected,
            computed: CheckValue::Text(error.to_string()),
            tolerance: 0.0,
            pass: false,
        });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.push(c);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.passed == self.summary.total
    }

    pub fn is_consistent(&self) -> bool {
        self.summary.total == self.checks.len() && self.summary.passed == self.checks.iter().filter(|c| c.pass).count()
    }
}
