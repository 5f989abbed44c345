//! Verdict reports shared by every check and by the CLI JSON output.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Error,
}

/// Outcome of a structural check: `{claim, params, verdict, witness, deviations}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub claim: String,
    pub params: Map<String, Value>,
    pub verdict: Verdict,
    pub witness: Option<Value>,
    pub deviations: Vec<String>,
}

impl Report {
    pub fn new(claim: impl Into<String>) -> Self {
        Report {
            claim: claim.into(),
            params: Map::new(),
            verdict: Verdict::Holds,
            witness: None,
            deviations: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn verdict(mut self, holds: bool) -> Self {
        self.verdict = if holds { Verdict::Holds } else { Verdict::Fails };
        self
    }

    pub fn witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn deviation(mut self, note: impl Into<String>) -> Self {
        self.deviations.push(note.into());
        self
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization")
    }
}
