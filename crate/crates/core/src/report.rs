//! Report types shared by the verification suites and the CLI.

use serde::{Deserialize, Serialize};

/// Sampling bounds for the randomized suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Highest simplicial degree exercised.
    pub max_degree: u32,
    /// Number of random samples per law.
    pub samples: u32,
    /// Coefficients are drawn from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_degree: 6,
            samples: 1000,
            coeff_bound: 3,
        }
    }
}

/// One failed check: which law broke and on what input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub law: String,
    pub witness: String,
}

/// Outcome of one named suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    /// Total number of individual checks performed.
    pub checks: u64,
    pub violations: Vec<Violation>,
}

impl SuiteResult {
    pub fn new(name: &str) -> Self {
        SuiteResult {
            name: name.to_string(),
            checks: 0,
            violations: Vec::new(),
        }
    }

    /// Record one check of `law`; `witness` describes the failing input when
    /// the check did not hold.
    pub fn check(&mut self, law: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation {
                law: law.to_string(),
                witness: witness(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Full verification run: the seed and bounds that produced it, plus every
/// suite in a fixed order. Serialization is deterministic for a fixed seed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub bounds: Bounds,
    pub suites: Vec<SuiteResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn total_checks(&self) -> u64 {
        self.suites.iter().map(|s| s.checks).sum()
    }

    pub fn total_violations(&self) -> usize {
        self.suites.iter().map(|s| s.violations.len()).sum()
    }
}
