//! Check results and report formatting.
//!
//! A [`Report`] is an ordered list of case results plus the global seed.
//! Text mode is for humans and shows real durations; JSON mode is a
//! versioned, byte-stable machine format in which durations are zeroed so
//! identical inputs produce identical bytes.

use serde::Serialize;

use crate::hopf::CheckOutcome;

/// Schema version of the JSON report format.
pub const REPORT_VERSION: u32 = 1;

/// Outcome of one checked case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Unverified,
}

/// One checked case: suite, case id, status, and a witness on failure or
/// a reason when unverified.
#[derive(Debug, Clone)]
pub struct CaseResult {
    pub suite: String,
    pub id: String,
    pub status: CheckStatus,
    pub witness: Option<String>,
    pub duration_ms: u64,
}

impl CaseResult {
    pub fn from_outcome(
        suite: impl Into<String>,
        id: impl Into<String>,
        outcome: CheckOutcome,
        duration_ms: u64,
    ) -> CaseResult {
        let (status, witness) = match outcome {
            CheckOutcome::Pass => (CheckStatus::Pass, None),
            CheckOutcome::Fail { witness } => (CheckStatus::Fail, Some(witness)),
        };
        CaseResult {
            suite: suite.into(),
            id: id.into(),
            status,
            witness,
            duration_ms,
        }
    }

    pub fn unverified(
        suite: impl Into<String>,
        id: impl Into<String>,
        reason: impl Into<String>,
        duration_ms: u64,
    ) -> CaseResult {
        CaseResult {
            suite: suite.into(),
            id: id.into(),
            status: CheckStatus::Unverified,
            witness: Some(reason.into()),
            duration_ms,
        }
    }
}

/// An ordered collection of case results.
#[derive(Debug, Clone)]
pub struct Report {
    pub seed: u64,
    pub cases: Vec<CaseResult>,
}

#[derive(Serialize)]
struct JsonCase<'a> {
    suite: &'a str,
    id: &'a str,
    status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a str>,
    duration_ms: u64,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    version: u32,
    seed: u64,
    cases: Vec<JsonCase<'a>>,
}

impl Report {
    pub fn new(seed: u64) -> Report {
        Report {
            seed,
            cases: Vec::new(),
        }
    }

    pub fn push(&mut self, case: CaseResult) {
        self.cases.push(case);
    }

    pub fn passed(&self) -> usize {
        self.count(CheckStatus::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(CheckStatus::Fail)
    }

    pub fn unverified(&self) -> usize {
        self.count(CheckStatus::Unverified)
    }

    fn count(&self, status: CheckStatus) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }

    /// Process exit code: 0 all pass, 1 any fail, 3 unverified but no fail.
    pub fn exit_code(&self) -> i32 {
        if self.failed() > 0 {
            1
        } else if self.unverified() > 0 {
            3
        } else {
            0
        }
    }

    /// Byte-stable JSON: durations are reported as zero so two runs with
    /// the same inputs and seed serialize identically.
    pub fn to_json(&self) -> String {
        let shadow = JsonReport {
            version: REPORT_VERSION,
            seed: self.seed,
            cases: self
                .cases
                .iter()
                .map(|c| JsonCase {
                    suite: &c.suite,
                    id: &c.id,
                    status: c.status,
                    witness: c.witness.as_deref(),
                    duration_ms: 0,
                })
                .collect(),
        };
        serde_json::to_string(&shadow).expect("report serialization cannot fail")
    }

    /// Human-readable text with one line per case and a summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let label = match c.status {
                CheckStatus::Pass => "PASS      ",
                CheckStatus::Fail => "FAIL      ",
                CheckStatus::Unverified => "UNVERIFIED",
            };
            out.push_str(label);
            out.push(' ');
            out.push_str(&c.suite);
            out.push('/');
            out.push_str(&c.id);
            if let Some(w) = &c.witness {
                out.push_str(": ");
                out.push_str(w);
            }
            out.push_str(&format!(" ({} ms)\n", c.duration_ms));
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} unverified (seed {})\n",
            self.passed(),
            self.failed(),
            self.unverified(),
            self.seed
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_serializes_to_the_frozen_schema() {
        let r = Report::new(42);
        assert_eq!(r.to_json(), r#"{"version":1,"seed":42,"cases":[]}"#);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn witnesses_appear_in_json_and_durations_are_zeroed() {
        let mut r = Report::new(7);
        r.push(CaseResult::from_outcome(
            "bialgebra",
            "A",
            CheckOutcome::Pass,
            12,
        ));
        r.push(CaseResult::from_outcome(
            "antipode",
            "A",
            CheckOutcome::fail("bad"),
            3,
        ));
        assert_eq!(
            r.to_json(),
            r#"{"version":1,"seed":7,"cases":[{"suite":"bialgebra","id":"A","status":"pass","duration_ms":0},{"suite":"antipode","id":"A","status":"fail","witness":"bad","duration_ms":0}]}"#
        );
        assert_eq!(r.exit_code(), 1);
        let text = r.to_text();
        assert!(text.contains("PASS       bialgebra/A (12 ms)"));
        assert!(text.contains("FAIL       antipode/A: bad (3 ms)"));
        assert!(text.contains("1 passed, 1 failed, 0 unverified (seed 7)"));
    }

    #[test]
    fn unverified_without_failures_exits_three() {
        let mut r = Report::new(1);
        r.push(CaseResult::from_outcome("a", "x", CheckOutcome::Pass, 0));
        r.push(CaseResult::unverified("b", "y", "fuel exhausted", 0));
        assert_eq!(r.exit_code(), 3);
    }
}
