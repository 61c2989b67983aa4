//! Verification reports shared by the inequality scans and tiling audits.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// Outcome of one check: verdict, the smallest slack seen (negative means a
/// violation), an optional witness and the scanned grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub check: String,
    pub passed: bool,
    pub min_slack: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default)]
    pub grid: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    pub details: Map<String, Value>,
}

impl AuditReport {
    pub fn new(check: impl Into<String>) -> Self {
        AuditReport {
            check: check.into(),
            passed: true,
            min_slack: 0.0,
            witness: None,
            grid: Map::new(),
            details: Map::new(),
        }
    }

    pub fn with_grid(mut self, lo: f64, hi: f64, step: f64) -> Self {
        self.grid.insert("lo".into(), lo.into());
        self.grid.insert("hi".into(), hi.into());
        self.grid.insert("step".into(), step.into());
        self
    }

    pub fn detail(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.into(), value.into());
        self
    }

    pub fn set_detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.into(), value.into());
    }

    pub fn fail(&mut self, witness: Value) {
        if self.passed {
            self.witness = Some(witness);
        }
        self.passed = false;
    }
}

/// Tracks the minimum slack over a scan and the first violating point.
#[derive(Clone, Debug)]
pub struct SlackTracker {
    min: f64,
    argmin: Option<Value>,
    first_violation: Option<Value>,
    count: usize,
}

impl Default for SlackTracker {
    fn default() -> Self {
        SlackTracker {
            min: f64::INFINITY,
            argmin: None,
            first_violation: None,
            count: 0,
        }
    }
}

impl SlackTracker {
    /// Records `slack` (must be strictly positive to pass) at `at`.
    pub fn record(&mut self, slack: f64, at: impl FnOnce() -> Value) {
        self.count += 1;
        let bad = !(slack > 0.0);
        if bad || slack < self.min {
            let w = at();
            if bad && self.first_violation.is_none() {
                self.first_violation = Some(w.clone());
            }
            if slack < self.min || slack.is_nan() {
                self.min = slack;
                self.argmin = Some(w);
            }
        }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    /// Writes the verdict into `report`. The witness is the first violation,
    /// or the location of the minimum slack when everything passed.
    pub fn finish(self, mut report: AuditReport) -> AuditReport {
        report.min_slack = if self.min.is_finite() { self.min } else { 0.0 };
        report.set_detail("comparisons", self.count);
        match self.first_violation {
            Some(w) => report.fail(w),
            None => {
                if let Some(w) = self.argmin {
                    report.set_detail("min_slack_at", w);
                }
            }
        }
        report
    }
}
