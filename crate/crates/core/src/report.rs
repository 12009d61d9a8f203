//! Machine-readable verification reports: a titled list of named checks,
//! each carrying expected and computed values, a pass/fail/skipped status,
//! and a witness on failure. Reports serialize to JSON that validates
//! against the shipped schema and round-trips losslessly.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Display;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub expected: String,
    pub computed: String,
    /// Required on failure: the witness pinning down what went wrong.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub title: String,
    /// Wall time of the producing run, milliseconds.
    pub elapsed_ms: u64,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(title: impl Into<String>) -> VerificationReport {
        VerificationReport {
            title: title.into(),
            elapsed_ms: 0,
            checks: Vec::new(),
        }
    }

    /// Records a comparison check: pass when the rendered values agree.
    pub fn push_eq(&mut self, name: impl Into<String>, expected: impl Display, computed: impl Display) {
        let expected = expected.to_string();
        let computed = computed.to_string();
        if expected == computed {
            self.push_pass(name, expected, computed);
        } else {
            let witness = "computed value differs from expected".to_string();
            self.push_fail(name, expected, computed, witness);
        }
    }

    /// Records a predicate check with explicit rendered values.
    pub fn push_claim(
        &mut self,
        name: impl Into<String>,
        holds: bool,
        expected: impl Display,
        computed: impl Display,
        witness_on_fail: impl Display,
    ) {
        if holds {
            self.push_pass(name, expected, computed);
        } else {
            self.push_fail(name, expected, computed, witness_on_fail.to_string());
        }
    }

    pub fn push_pass(&mut self, name: impl Into<String>, expected: impl Display, computed: impl Display) {
        self.checks.push(CheckResult {
            name: name.into(),
            status: CheckStatus::Pass,
            expected: expected.to_string(),
            computed: computed.to_string(),
            witness: None,
        });
    }

    pub fn push_fail(
        &mut self,
        name: impl Into<String>,
        expected: impl Display,
        computed: impl Display,
        witness: impl Into<String>,
    ) {
        self.checks.push(CheckResult {
            name: name.into(),
            status: CheckStatus::Fail,
            expected: expected.to_string(),
            computed: computed.to_string(),
            witness: Some(witness.into()),
        });
    }

    pub fn push_skipped(&mut self, name: impl Into<String>, reason: impl Display) {
        self.checks.push(CheckResult {
            name: name.into(),
            status: CheckStatus::Skipped,
            expected: String::new(),
            computed: reason.to_string(),
            witness: None,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks
            .iter()
            .all(|c| matches!(c.status, CheckStatus::Pass | CheckStatus::Skipped))
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut pass = 0;
        let mut fail = 0;
        let mut skipped = 0;
        for c in &self.checks {
            match c.status {
                CheckStatus::Pass => pass += 1,
                CheckStatus::Fail => fail += 1,
                CheckStatus::Skipped => skipped += 1,
            }
        }
        (pass, fail, skipped)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<VerificationReport> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Plain-text rendering: one line per check, then a summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {}\n", self.title));
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            if c.status == CheckStatus::Skipped {
                out.push_str(&format!("{tag} {}: {}\n", c.name, c.computed));
            } else {
                out.push_str(&format!(
                    "{tag} {}: expected {}, computed {}\n",
                    c.name, c.expected, c.computed
                ));
            }
            if let Some(w) = &c.witness {
                out.push_str(&format!("     witness: {w}\n"));
            }
        }
        let (pass, fail, skipped) = self.counts();
        out.push_str(&format!(
            "{}: {pass} passed, {fail} failed, {skipped} skipped ({} ms)\n",
            if fail == 0 { "OK" } else { "FAILED" },
            self.elapsed_ms
        ));
        out
    }
}

/// The shipped JSON schema the reports validate against.
pub const REPORT_SCHEMA_JSON: &str = r#"{
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "VerificationReport",
  "version": 1,
  "type": "object",
  "required": ["title", "elapsed_ms", "checks"],
  "additionalProperties": false,
  "properties": {
    "title": { "type": "string" },
    "elapsed_ms": { "type": "integer", "minimum": 0 },
    "checks": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["name", "status", "expected", "computed"],
        "additionalProperties": false,
        "properties": {
          "name": { "type": "string" },
          "status": { "enum": ["pass", "fail", "skipped"] },
          "expected": { "type": "string" },
          "computed": { "type": "string" },
          "witness": { "type": "string" }
        }
      }
    }
  }
}"#;

/// Structural validation of a serialized report against the shipped
/// schema: required fields, types, the status enumeration, and the
/// failure-implies-witness rule.
pub fn validate_report_json(text: &str) -> Result<()> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("report must be a JSON object".into()))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "title" | "elapsed_ms" | "checks") {
            return Err(Error::Parse(format!("unexpected report field {key:?}")));
        }
    }
    if !obj.get("title").is_some_and(|v| v.is_string()) {
        return Err(Error::Parse("title must be a string".into()));
    }
    if !obj.get("elapsed_ms").is_some_and(|v| v.is_u64()) {
        return Err(Error::Parse("elapsed_ms must be a nonnegative integer".into()));
    }
    let checks = obj
        .get("checks")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::Parse("checks must be an array".into()))?;
    for (i, check) in checks.iter().enumerate() {
        let c = check
            .as_object()
            .ok_or_else(|| Error::Parse(format!("checks[{i}] must be an object")))?;
        for key in c.keys() {
            if !matches!(
                key.as_str(),
                "name" | "status" | "expected" | "computed" | "witness"
            ) {
                return Err(Error::Parse(format!("unexpected check field {key:?}")));
            }
        }
        for field in ["name", "expected", "computed"] {
            if !c.get(field).is_some_and(|v| v.is_string()) {
                return Err(Error::Parse(format!("checks[{i}].{field} must be a string")));
            }
        }
        let status = c
            .get("status")
            .and_then(|v| v.as_str())
            .ok_or_else(|| Error::Parse(format!("checks[{i}].status must be a string")))?;
        if !matches!(status, "pass" | "fail" | "skipped") {
            return Err(Error::Parse(format!("checks[{i}].status {status:?} invalid")));
        }
        match c.get("witness") {
            None => {
                if status == "fail" {
                    return Err(Error::Parse(format!("checks[{i}] failed without witness")));
                }
            }
            Some(v) if v.is_string() => {}
            Some(_) => {
                return Err(Error::Parse(format!("checks[{i}].witness must be a string")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        let mut r = VerificationReport::new("sample");
        r.push_eq("matching", 4, 4);
        r.push_eq("mismatching", 4, 5);
        r.push_claim("bounded", true, "<= 10", 7, "");
        r.push_skipped("deferred", "degree beyond cap");
        r.elapsed_ms = 12;
        r
    }

    #[test]
    fn statuses_and_counts() {
        let r = sample();
        assert!(!r.all_pass());
        assert_eq!(r.counts(), (2, 1, 1));
        let mut ok = VerificationReport::new("ok");
        ok.push_eq("x", 1, 1);
        ok.push_skipped("y", "later");
        assert!(ok.all_pass());
    }

    #[test]
    fn json_round_trips_and_validates() {
        let r = sample();
        let json = r.to_json();
        validate_report_json(&json).unwrap();
        let back = VerificationReport::from_json(&json).unwrap();
        assert_eq!(back, r);
        // Schema text itself parses as JSON.
        let schema: serde_json::Value = serde_json::from_str(REPORT_SCHEMA_JSON).unwrap();
        assert_eq!(schema["version"], 1);
    }

    #[test]
    fn validator_rejects_malformed_reports() {
        assert!(validate_report_json("[]").is_err());
        assert!(validate_report_json(r#"{"title":"t","elapsed_ms":0}"#).is_err());
        assert!(validate_report_json(
            r#"{"title":"t","elapsed_ms":0,"checks":[],"extra":1}"#
        )
        .is_err());
        // A failing check without a witness violates the contract.
        assert!(validate_report_json(
            r#"{"title":"t","elapsed_ms":0,"checks":[
                {"name":"n","status":"fail","expected":"1","computed":"2"}]}"#
        )
        .is_err());
        // Unknown status.
        assert!(validate_report_json(
            r#"{"title":"t","elapsed_ms":0,"checks":[
                {"name":"n","status":"maybe","expected":"1","computed":"1"}]}"#
        )
        .is_err());
        // Well-formed minimal report.
        assert!(validate_report_json(
            r#"{"title":"t","elapsed_ms":3,"checks":[
                {"name":"n","status":"pass","expected":"1","computed":"1"}]}"#
        )
        .is_ok());
    }

    #[test]
    fn text_rendering_lists_each_check() {
        let r = sample();
        let text = r.to_text();
        assert!(text.contains("PASS matching: expected 4, computed 4"));
        assert!(text.contains("FAIL mismatching: expected 4, computed 5"));
        assert!(text.contains("SKIP deferred"));
        assert!(text.contains("witness:"));
        assert!(text.ends_with("ms)\n"));
    }
}
