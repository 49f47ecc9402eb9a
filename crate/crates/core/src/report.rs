// Copyright 2026 The scv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Structured verification outcomes shared by every suite.

use std::time::Duration;

use serde::{Deserialize, Serialize};

/// Version of the JSON report layout; bump on incompatible changes.
pub const SCHEMA_VERSION: &str = "1.0.0";

/// JSON Schema for [`VerificationReport`]; `residual` uses the custom format
/// `gaussian-rational`, the string form of [`Gq`](crate::Gq).
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Research output: the outcome is reported but never fails a run.
    Recorded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    /// Short tag naming the identity or table the check reproduces.
    pub anchor: String,
    pub status: Status,
    /// Exact residual, `0` on success.
    pub residual: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckRecord {
    pub fn new(
        name: impl Into<String>,
        anchor: impl Into<String>,
        status: Status,
        residual: impl ToString,
    ) -> Self {
        CheckRecord {
            name: name.into(),
            anchor: anchor.into(),
            status,
            residual: residual.to_string(),
            counterexample: None,
            detail: None,
            elapsed_ms: None,
        }
    }

    /// `Pass` when `ok`, `Fail` otherwise.
    pub fn verdict(
        name: impl Into<String>,
        anchor: impl Into<String>,
        ok: bool,
        residual: impl ToString,
    ) -> Self {
        Self::new(
            name,
            anchor,
            if ok { Status::Pass } else { Status::Fail },
            residual,
        )
    }

    pub fn with_counterexample(mut self, c: impl Into<String>) -> Self {
        self.counterexample = Some(c.into());
        self
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn with_elapsed(mut self, d: Duration) -> Self {
        self.elapsed_ms = Some(d.as_millis() as u64);
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub recorded: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: String,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Default for VerificationReport {
    fn default() -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION.to_string(),
            records: Vec::new(),
            summary: Summary::default(),
        }
    }
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_records(records: impl IntoIterator<Item = CheckRecord>) -> Self {
        let mut r = Self::new();
        r.extend(records);
        r
    }

    pub fn push(&mut self, rec: CheckRecord) {
        self.summary.total += 1;
        match rec.status {
            Status::Pass => self.summary.passed += 1,
            Status::Fail => self.summary.failed += 1,
            Status::Recorded => self.summary.recorded += 1,
        }
        self.records.push(rec);
    }

    pub fn extend(&mut self, recs: impl IntoIterator<Item = CheckRecord>) {
        for r in recs {
            self.push(r);
        }
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.extend(other.records);
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn find(&self, name: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One table row per record. The note column shows the counterexample if
    /// there is one, else the detail; a time column appears only when some
    /// record carries `elapsed_ms`.
    pub fn to_markdown(&self) -> String {
        let timed = self.records.iter().any(|r| r.elapsed_ms.is_some());
        let mut s = String::new();
        if timed {
            s.push_str(
                "| check | anchor | status | residual | note | ms |\n|---|---|---|---|---|---|\n",
            );
        } else {
            s.push_str("| check | anchor | status | residual | note |\n|---|---|---|---|---|\n");
        }
        for r in &self.records {
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Recorded => "recorded",
            };
            let note = r
                .counterexample
                .as_ref()
                .or(r.detail.as_ref())
                .map_or(String::new(), |n| n.replace('|', "\\|"));
            s.push_str(&format!(
                "| {} | {} | {} | {} | {} |",
                r.name, r.anchor, status, r.residual, note
            ));
            if timed {
                s.push_str(&format!(
                    " {} |",
                    r.elapsed_ms.map_or(String::new(), |m| m.to_string())
                ));
            }
            s.push('\n');
        }
        let t = &self.summary;
        s.push_str(&format!(
            "\n{} checks: {} passed, {} failed, {} recorded\n",
            t.total, t.passed, t.failed, t.recorded
        ));
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_counts() {
        let r = VerificationReport::from_records([
            CheckRecord::verdict("a", "x", true, 0),
            CheckRecord::verdict("b", "x", false, 3),
            CheckRecord::new("c", "x", Status::Recorded, 0),
        ]);
        assert_eq!(
            r.summary,
            Summary {
                total: 3,
                passed: 1,
                failed: 1,
                recorded: 1
            }
        );
        assert!(!r.all_passed());
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn json_round_trip() {
        let r = VerificationReport::from_records([
            CheckRecord::verdict("a", "x", false, "1/2").with_counterexample("(0,1,2,3)")
        ]);
        let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(!r.to_json().contains("elapsed_ms"));
    }
}
