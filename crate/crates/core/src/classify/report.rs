use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Serialize, Serializer};

/// `true`, `false`, or unknown because an applicability limit was hit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Unknown(String),
}

impl Verdict {
    pub fn is_true(&self) -> bool {
        matches!(self, Verdict::True)
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Verdict::True => s.serialize_bool(true),
            Verdict::False => s.serialize_bool(false),
            Verdict::Unknown(reason) => {
                use serde::ser::SerializeMap;
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("unknown", reason)?;
                m.end()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub label: String,
    pub ok: bool,
    pub detail: String,
}

impl Condition {
    pub fn new(label: &str, ok: bool, detail: impl Into<String>) -> Condition {
        Condition { label: label.to_string(), ok, detail: detail.into() }
    }
}

/// Serialized as `{verdict, conditions, parameters, timings}`; timings are
/// wall-clock milliseconds.
#[derive(Clone, Debug, Serialize)]
pub struct ClassifierReport {
    pub verdict: Verdict,
    pub conditions: Vec<Condition>,
    pub parameters: serde_json::Map<String, serde_json::Value>,
    pub timings: BTreeMap<String, f64>,
}

impl ClassifierReport {
    /// Verdict true iff every condition holds.
    pub fn from_conditions(
        conditions: Vec<Condition>,
        parameters: serde_json::Map<String, serde_json::Value>,
    ) -> ClassifierReport {
        let verdict = if conditions.iter().all(|c| c.ok) { Verdict::True } else { Verdict::False };
        ClassifierReport { verdict, conditions, parameters, timings: BTreeMap::new() }
    }

    pub fn unknown(reason: String, parameters: serde_json::Map<String, serde_json::Value>) -> ClassifierReport {
        ClassifierReport { verdict: Verdict::Unknown(reason), conditions: Vec::new(), parameters, timings: BTreeMap::new() }
    }

    pub fn timed(mut self, phase: &str, start: Instant) -> ClassifierReport {
        self.timings.insert(phase.to_string(), start.elapsed().as_secs_f64() * 1000.0);
        self
    }

    pub fn with_label(mut self, label: &str) -> ClassifierReport {
        self.parameters.insert("label".into(), serde_json::Value::String(label.to_string()));
        self
    }

    pub fn condition(&self, label: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.label == label)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}
