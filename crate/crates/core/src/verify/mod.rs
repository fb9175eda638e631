//! Executable checks for each structural step of the finiteness argument.
//!
//! Every verifier either passes or produces a [`Finding`] with enough data
//! to reproduce the failing case. Nothing in range is skipped silently; cases
//! that cannot be decided (e.g. an unfactored cofactor) are reported as
//! [`Status::Undecided`].

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

mod brackets;
mod congruence;
mod elliptic;
mod even;
mod gcd;
mod primitive;
pub mod suites;

pub use brackets::{bracket_check, mixed_parity_bound_check, BracketReport, MixedParityReport};
pub use congruence::{
    lemma3_check, shifted_chebyshev_check, taylor_congruence_check, valuation_divisibility_check,
    Lemma3Outcome, TaylorReport, ValuationReport, ValuationRoute,
};
pub use elliptic::{
    ap7_solutions, elliptic_map, elliptic_params, enumerate_integer_points, EllipticInstance,
};
pub use even::{
    classify_even_solution, distinct_prime_sets, even_uniqueness_check, prime_factor_set,
    EvenBranch, EvenCaseClassification, FactorSet,
};
pub use gcd::{gcd_reduction, pell_gcd_check, problem1_instance, GcdReduction, Problem1Instance};
pub use primitive::{primitive_part, primitive_part_of};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Falsified,
    Undecided,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Falsified => "falsified",
            Status::Undecided => "undecided",
        }
    }
}

/// Machine-readable evidence for a failed or undecided check.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Finding {
    /// Identifier of the property being checked, e.g. `"taylor-congruence"`.
    pub check: &'static str,
    pub status: Status,
    pub detail: String,
    pub data: Vec<(&'static str, String)>,
}

impl Finding {
    pub fn falsified(check: &'static str, detail: impl Into<String>) -> Self {
        Finding { check, status: Status::Falsified, detail: detail.into(), data: Vec::new() }
    }

    pub fn undecided(check: &'static str, detail: impl Into<String>) -> Self {
        Finding { check, status: Status::Undecided, detail: detail.into(), data: Vec::new() }
    }

    pub fn with(mut self, key: &'static str, value: impl fmt::Display) -> Self {
        self.data.push((key, alloc::format!("{value}")));
        self
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.status.as_str(), self.check, self.detail)?;
        for (k, v) in &self.data {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{0}")]
    Falsified(Finding),
}

/// Outcome of a batch of checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub suite: &'static str,
    /// Number of individual cases examined.
    pub checked: u64,
    pub findings: Vec<Finding>,
}

impl VerifyReport {
    pub fn new(suite: &'static str) -> Self {
        VerifyReport { suite, checked: 0, findings: Vec::new() }
    }

    pub fn record(&mut self, outcome: Result<(), Finding>) {
        self.checked += 1;
        if let Err(f) = outcome {
            self.findings.push(f);
        }
    }

    /// Precondition errors are bugs in the caller's enumeration and count as
    /// falsifications so they cannot disappear.
    pub fn record_result<T>(&mut self, check: &'static str, outcome: Result<T, VerifyError>) -> Option<T> {
        self.checked += 1;
        match outcome {
            Ok(v) => Some(v),
            Err(VerifyError::Falsified(f)) => {
                self.findings.push(f);
                None
            }
            Err(VerifyError::Precondition(msg)) => {
                self.findings.push(Finding::falsified(check, msg));
                None
            }
        }
    }

    pub fn falsified(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.status == Status::Falsified)
    }

    pub fn undecided(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.status == Status::Undecided)
    }

    /// No falsifications (undecided cases are allowed).
    pub fn passed(&self) -> bool {
        self.falsified().next().is_none()
    }

    pub fn merge(&mut self, other: VerifyReport) {
        self.checked += other.checked;
        self.findings.extend(other.findings);
    }
}
