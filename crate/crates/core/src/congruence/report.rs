//! Verification reports: per-instance outcomes with reproduction data on
//! failure, plus JSON and text renderings.

use std::time::Duration;

use serde::Serialize;

use super::reduce::CheckOutcome;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail { lhs: u64, rhs: u64 },
    Skipped { reason: String },
}

impl From<CheckOutcome> for Status {
    fn from(outcome: CheckOutcome) -> Status {
        match outcome {
            CheckOutcome::Pass => Status::Pass,
            CheckOutcome::Fail { lhs, rhs } => Status::Fail { lhs, rhs },
            CheckOutcome::Skipped { reason } => Status::Skipped { reason },
        }
    }
}

/// One checked instance: a theorem case at one prime (or an exact,
/// prime-free case).
#[derive(Clone, Debug, Serialize)]
pub struct Instance {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(flatten)]
    pub status: Status,
}

impl Instance {
    pub fn new(label: impl Into<String>, prime: Option<u64>, status: Status) -> Self {
        Instance { label: label.into(), prime, status }
    }

    pub fn pass(label: impl Into<String>, prime: Option<u64>) -> Self {
        Self::new(label, prime, Status::Pass)
    }

    pub fn of_bool(label: impl Into<String>, prime: Option<u64>, ok: bool) -> Self {
        // Boolean checks have no residues to report; encode failure as 0 ≠ 1.
        let status = if ok { Status::Pass } else { Status::Fail { lhs: 0, rhs: 1 } };
        Self::new(label, prime, status)
    }

    pub fn is_pass(&self) -> bool {
        matches!(self.status, Status::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self.status, Status::Fail { .. })
    }
}

/// The outcome of one theorem (or table) sweep.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub primes: Vec<u64>,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Failing and skipped instances, with reproduction data.
    pub issues: Vec<Instance>,
    pub wall_ms: u128,
}

impl VerificationReport {
    pub fn from_instances(
        id: impl Into<String>,
        primes: Vec<u64>,
        instances: Vec<Instance>,
        elapsed: Duration,
    ) -> Self {
        let total = instances.len();
        let passed = instances.iter().filter(|i| i.is_pass()).count();
        let failed = instances.iter().filter(|i| i.is_fail()).count();
        let skipped = total - passed - failed;
        let issues = instances.into_iter().filter(|i| !i.is_pass()).collect();
        VerificationReport {
            id: id.into(),
            primes,
            total,
            passed,
            failed,
            skipped,
            issues,
            wall_ms: elapsed.as_millis(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// One summary line plus one line per failing/skipped instance.
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{}: {} — {} instances, {} passed, {} failed, {} skipped ({} ms)",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.total,
            self.passed,
            self.failed,
            self.skipped,
            self.wall_ms
        );
        for issue in &self.issues {
            let prime = issue.prime.map_or(String::new(), |p| format!(" [p={p}]"));
            match &issue.status {
                Status::Fail { lhs, rhs } => {
                    out.push_str(&format!("\n  FAIL {}{}: lhs={} rhs={}", issue.label, prime, lhs, rhs));
                }
                Status::Skipped { reason } => {
                    out.push_str(&format!("\n  skip {}{}: {}", issue.label, prime, reason));
                }
                Status::Pass => {}
            }
        }
        out
    }
}
