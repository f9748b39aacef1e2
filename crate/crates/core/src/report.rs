//! Outcome records shared by every checker.
//!
//! A [`VerificationReport`] serializes to one JSON object with the fields
//! `check`, `params`, `status`, `first_violation` and `elapsed_ms`. Parameter
//! maps are ordered by key so that equal reports render to equal bytes.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// First offending position of a failed check.
///
/// For coefficient checks `exponent` is the power of q; for window checks
/// (Lemma-style sums over `[a, b]`) it is the summation start `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub exponent: i64,
    pub coefficient: String,
}

impl Violation {
    pub fn new(exponent: i64, coefficient: &BigInt) -> Self {
        Violation {
            exponent,
            coefficient: coefficient.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Text(String),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Text(s) => f.write_str(s),
        }
    }
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<u64> for ParamValue {
    fn from(v: u64) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Text(v.to_owned())
    }
}

impl From<String> for ParamValue {
    fn from(v: String) -> Self {
        ParamValue::Text(v)
    }
}

pub type Params = BTreeMap<String, ParamValue>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: Params,
    pub status: Status,
    pub first_violation: Option<Violation>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            params: Params::new(),
            status: Status::Pass,
            first_violation: None,
            elapsed_ms: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<ParamValue>) -> Self {
        self.params.insert(key.to_owned(), value.into());
        self
    }

    /// Sets the status from `violation` (fail iff present) and records the
    /// time elapsed since `started`.
    pub fn conclude(mut self, violation: Option<Violation>, started: Instant) -> Self {
        self.status = if violation.is_some() {
            Status::Fail
        } else {
            Status::Pass
        };
        self.first_violation = violation;
        self.elapsed_ms = started.elapsed().as_millis() as u64;
        self
    }

    pub fn skipped(mut self) -> Self {
        self.status = Status::Skipped;
        self.first_violation = None;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.check)?;
        for (i, (k, v)) in self.params.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        write!(f, "] {}", self.status)?;
        if let Some(v) = &self.first_violation {
            write!(f, " at {} (value {})", v.exponent, v.coefficient)?;
        }
        Ok(())
    }
}
