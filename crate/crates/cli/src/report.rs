//! Suite reports: one record per check, deterministic machine serialization.
//!
//! Machine output normalizes elapsed times to zero so that two runs with
//! the same suite, seed and options produce byte-identical documents
//! regardless of wall-clock or thread count; the text format keeps the
//! real timings.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    /// The mathematical claim the check verifies, quoted in reports.
    pub anchor: String,
    pub status: Status,
    pub observed: String,
    pub expected: String,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub primes: Vec<u64>,
    pub trials: usize,
    pub overall: Status,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, seed: u64, primes: Vec<u64>, trials: usize) -> Self {
        SuiteReport {
            suite: suite.into(),
            seed,
            primes,
            trials,
            overall: Status::Pass,
            checks: Vec::new(),
        }
    }

    /// Record a pass/fail check: passes iff observed == expected.
    pub fn check(
        &mut self,
        id: impl Into<String>,
        anchor: impl Into<String>,
        observed: impl ToString,
        expected: impl ToString,
        started: Instant,
    ) {
        let observed = observed.to_string();
        let expected = expected.to_string();
        let status = if observed == expected {
            Status::Pass
        } else {
            Status::Fail
        };
        self.push(Check {
            id: id.into(),
            anchor: anchor.into(),
            status,
            observed,
            expected,
            elapsed_ms: started.elapsed().as_millis() as u64,
        });
    }

    /// Record an informational line that never affects the overall status.
    pub fn info(
        &mut self,
        id: impl Into<String>,
        anchor: impl Into<String>,
        observed: impl ToString,
        started: Instant,
    ) {
        self.push(Check {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Info,
            observed: observed.to_string(),
            expected: String::new(),
            elapsed_ms: started.elapsed().as_millis() as u64,
        });
    }

    pub fn push(&mut self, check: Check) {
        if check.status == Status::Fail {
            self.overall = Status::Fail;
        }
        self.checks.push(check);
    }

    pub fn merge(&mut self, other: SuiteReport) {
        for c in other.checks {
            self.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    /// Copy with elapsed times zeroed; the payload of the machine format.
    pub fn normalized(&self) -> SuiteReport {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.elapsed_ms = 0;
        }
        r
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "suite {} (seed {}, primes {:?}, trials {})",
            self.suite, self.seed, self.primes, self.trials
        )
        .unwrap();
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "info",
            };
            write!(out, "  [{status}] {:<34} {}", c.id, c.anchor).unwrap();
            if c.expected.is_empty() {
                write!(out, " | {}", c.observed).unwrap();
            } else {
                write!(out, " | observed {} expected {}", c.observed, c.expected).unwrap();
            }
            writeln!(out, " ({} ms)", c.elapsed_ms).unwrap();
        }
        let overall = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "overall: {overall}").unwrap();
        out
    }

    /// Deterministic machine format (JSON of the normalized report).
    pub fn to_machine(&self) -> String {
        serde_json::to_string_pretty(&self.normalized()).expect("report serializes")
    }

    #[cfg(test)]
    pub fn from_machine(text: &str) -> Result<SuiteReport, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_passes() {
        let r = SuiteReport::new("empty", 1, vec![], 0);
        assert!(r.passed());
        assert_eq!(r.checks.len(), 0);
    }

    #[test]
    fn machine_round_trip() {
        let mut r = SuiteReport::new("demo", 42, vec![7], 20);
        let t = Instant::now();
        r.check("demo.a", "1 = 1", 1, 1, t);
        r.info("demo.b", "a count", 17, t);
        let text = r.to_machine();
        let parsed = SuiteReport::from_machine(&text).unwrap();
        assert_eq!(parsed, r.normalized());
        assert_eq!(parsed.to_machine(), text);
    }

    #[test]
    fn overall_fails_on_any_failed_check() {
        let mut r = SuiteReport::new("demo", 1, vec![], 0);
        let t = Instant::now();
        r.check("demo.good", "x", 1, 1, t);
        r.check("demo.bad", "y", 1, 2, t);
        r.info("demo.note", "z", "whatever", t);
        assert!(!r.passed());
    }
}
