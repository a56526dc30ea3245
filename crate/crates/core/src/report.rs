//! Named pass/fail checks with exact counterexample witnesses.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::rational::Rational;
use crate::tensor::Tensor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// What a failing entry should have been.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expected {
    Exactly(Rational),
    NonZero,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Exactly(r) => write!(f, "{r}"),
            Expected::NonZero => f.write_str("nonzero"),
        }
    }
}

impl Serialize for Expected {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A counterexample. Indices are 1-based frame indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub expected: Expected,
    pub actual: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    /// Builds a witness from 0-based indices.
    pub fn at(zero_based: &[usize], expected: Rational, actual: Rational) -> Self {
        Witness {
            indices: zero_based.iter().map(|i| i + 1).collect(),
            expected: Expected::Exactly(expected),
            actual,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(usize::to_string).collect();
        write!(
            f,
            "at ({}): expected {}, got {}",
            idx.join(","),
            self.expected,
            self.actual
        )?;
        if let Some(n) = &self.note {
            write!(f, " [{n}]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn pass(id: impl Into<String>) -> Self {
        CheckResult {
            id: id.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(id: impl Into<String>, witness: Witness) -> Self {
        CheckResult {
            id: id.into(),
            status: Status::Fail,
            witness: Some(witness),
        }
    }

    /// PASS iff `actual == expected` entrywise; otherwise FAIL at the first
    /// differing index.
    pub fn compare(id: impl Into<String>, actual: &Tensor, expected: &Tensor) -> Self {
        match actual
            .first_mismatch(expected)
            .expect("compared tensors must share a shape")
        {
            None => CheckResult::pass(id),
            Some((idx, e, a)) => CheckResult::fail(id, Witness::at(&idx, e, a)),
        }
    }

    /// PASS iff `defect` is the zero tensor.
    pub fn zero(id: impl Into<String>, defect: &Tensor) -> Self {
        match defect.first_nonzero() {
            None => CheckResult::pass(id),
            Some((idx, v)) => CheckResult::fail(id, Witness::at(&idx, Rational::zero(), v.clone())),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.id)?;
        if let Some(w) = &self.witness {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

/// Ordered list of checks; order is declaration order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CheckReport {
    pub results: Vec<CheckResult>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, result: CheckResult) {
        self.results.push(result);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.results.extend(other.results);
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.id == id)
    }

    pub fn len(&self) -> usize {
        self.results.len()
    }

    pub fn is_empty(&self) -> bool {
        self.results.is_empty()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}
