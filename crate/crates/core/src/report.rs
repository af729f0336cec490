//! Per-prime verification reports, serialized one report per JSON line.

use std::collections::BTreeMap;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::PrimeCtx;
use crate::error::Result;

/// One congruence check at one prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub prime: u64,
    /// `n`, `k` or `m` for families of checks; absent for single checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<i64>,
    pub lhs: u64,
    pub rhs: u64,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(prime: u64, index: Option<i64>, lhs: u64, rhs: u64) -> Self {
        CheckRecord { prime, index, lhs, rhs, pass: lhs == rhs }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedPrime {
    pub prime: u64,
    pub reason: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub lo: u64,
    pub hi: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: BTreeMap<String, String>,
    pub window: Window,
    pub records: Vec<CheckRecord>,
    pub skipped: Vec<SkippedPrime>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_us: Option<u64>,
    /// Seconds since the Unix epoch.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

/// What a per-prime worker hands back.
pub enum PrimeOutcome {
    Checked(Vec<CheckRecord>),
    Skipped(String),
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn pass_rate(&self) -> f64 {
        if self.records.is_empty() {
            return 1.0;
        }
        self.records.iter().filter(|r| r.pass).count() as f64 / self.records.len() as f64
    }

    /// Distinct primes that produced at least one check.
    pub fn checked_primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.records.iter().map(|r| r.prime).collect();
        ps.dedup();
        ps
    }

    /// Drops the wall time and timestamp so identical runs serialize identically.
    pub fn without_timing(mut self) -> Self {
        self.wall_time_us = None;
        self.timestamp = None;
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        Ok(serde_json::from_str(line)?)
    }

    /// One-paragraph human summary.
    pub fn summary(&self) -> String {
        let fails = self.failures().count();
        format!(
            "{} {}: {} checks at {} primes in [{}, {}], {} failed, {} primes skipped",
            self.theorem,
            self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" "),
            self.records.len(),
            self.checked_primes().len(),
            self.window.lo,
            self.window.hi,
            fails,
            self.skipped.len()
        )
    }
}

/// Runs `worker` once per window prime in parallel and assembles the report
/// in prime order.
pub fn run_per_prime<F>(
    theorem: &str,
    params: BTreeMap<String, String>,
    window: Window,
    primes: &[u64],
    worker: F,
) -> VerificationReport
where
    F: Fn(&PrimeCtx) -> PrimeOutcome + Sync,
{
    let start = Instant::now();
    let outcomes: Vec<(u64, PrimeOutcome)> =
        primes.par_iter().map(|&p| (p, worker(&PrimeCtx::new(p)))).collect();
    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for (p, o) in outcomes {
        match o {
            PrimeOutcome::Checked(rs) => records.extend(rs),
            PrimeOutcome::Skipped(reason) => skipped.push(SkippedPrime { prime: p, reason }),
        }
    }
    VerificationReport {
        theorem: theorem.to_string(),
        params,
        window,
        records,
        skipped,
        wall_time_us: Some(start.elapsed().as_micros() as u64),
        timestamp: SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs()),
    }
}

/// Builds a parameter map from `(key, value)` pairs.
pub fn params<I, K, V>(pairs: I) -> BTreeMap<String, String>
where
    I: IntoIterator<Item = (K, V)>,
    K: ToString,
    V: ToString,
{
    pairs.into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}
