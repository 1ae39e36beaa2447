use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};

/// Limits on exhaustive work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// Largest number of subsets a full sweep may visit.
    pub max_subsets: u64,
    /// Largest number of poset ideals an ideal-restricted search may visit.
    pub max_ideals: u64,
    /// Worker threads for parallel sweeps.
    pub parallel_width: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_subsets: 1 << 27,
            max_ideals: 1 << 22,
            parallel_width: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl SearchBudget {
    pub fn new(max_subsets: u64, max_ideals: u64, parallel_width: usize) -> Result<Self> {
        if max_subsets == 0 || max_ideals == 0 || parallel_width == 0 {
            return Err(Error::param("budget fields must all be positive"));
        }
        Ok(SearchBudget {
            max_subsets,
            max_ideals,
            parallel_width,
        })
    }

    pub fn with_width(self, parallel_width: usize) -> Self {
        SearchBudget {
            parallel_width: parallel_width.max(1),
            ..self
        }
    }

    pub(crate) fn pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.parallel_width)
            .build()
            .map_err(|e| Error::param(format!("thread pool: {e}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Counterexample,
    BudgetExceeded,
}

/// What a report covers. Unused fields are omitted from JSON.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Scope {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    /// Inclusive range of set sizes examined.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell_range: Option<(u64, u64)>,
}

/// A concrete refutation, re-checkable from its fields alone.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Vertex labels of the offending set, when the claim is about a set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observed: Option<i64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub scope: Scope,
    pub status: Status,
    pub witness: Option<Witness>,
    /// Instances examined.
    pub checked: u64,
    /// Wall time; `None` when timing is suppressed for reproducible output.
    pub elapsed_ms: Option<u64>,
    pub detail: String,
}

impl VerificationReport {
    pub fn verified(claim: impl Into<String>, scope: Scope, checked: u64, detail: impl Into<String>) -> Self {
        VerificationReport {
            claim: claim.into(),
            scope,
            status: Status::Verified,
            witness: None,
            checked,
            elapsed_ms: None,
            detail: detail.into(),
        }
    }

    pub fn counterexample(
        claim: impl Into<String>,
        scope: Scope,
        checked: u64,
        witness: Witness,
        detail: impl Into<String>,
    ) -> Self {
        VerificationReport {
            claim: claim.into(),
            scope,
            status: Status::Counterexample,
            witness: Some(witness),
            checked,
            elapsed_ms: None,
            detail: detail.into(),
        }
    }

    /// Converts a budget error into a report; other errors pass through.
    pub fn from_budget(claim: impl Into<String>, scope: Scope, err: Error) -> Result<Self> {
        match err {
            Error::BudgetExceeded { .. } => Ok(VerificationReport {
                claim: claim.into(),
                scope,
                status: Status::BudgetExceeded,
                witness: None,
                checked: 0,
                elapsed_ms: None,
                detail: err.to_string(),
            }),
            other => Err(other),
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        self
    }

    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_field_names_are_stable() {
        let r = VerificationReport::verified("demo", Scope::default(), 3, "");
        let v = serde_json::to_value(&r).unwrap();
        for key in ["claim", "scope", "status", "witness", "elapsed_ms"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["status"], "verified");
        let b = VerificationReport::from_budget("demo", Scope::default(), Error::budget("x", 2, 1, 0)).unwrap();
        assert_eq!(serde_json::to_value(&b).unwrap()["status"], "budget-exceeded");
        assert!(VerificationReport::from_budget("demo", Scope::default(), Error::param("p")).is_err());
    }

    #[test]
    fn zero_budget_rejected() {
        assert!(SearchBudget::new(0, 1, 1).is_err());
        assert!(SearchBudget::new(1, 1, 1).is_ok());
    }
}
