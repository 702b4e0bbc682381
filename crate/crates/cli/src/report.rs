//! Report documents: verdicts and witnesses keyed by name, rendered either
//! as aligned text or as pretty JSON with sorted keys.

use std::collections::BTreeMap;
use std::time::Duration;

use leibniz_core::{Scalar, Subspace};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    /// SHA-256 of the input file bytes, hex encoded; empty for `build`.
    pub input_digest: String,
    pub verdicts: BTreeMap<String, Value>,
    pub witnesses: BTreeMap<String, Value>,
    /// Wall-clock microseconds per phase.
    pub timings: BTreeMap<String, u64>,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn rational(x: &Scalar) -> Value {
    Value::String(x.to_string())
}

pub fn vector(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn subspace(s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.basis_vectors().iter().map(|v| vector(v)).collect::<Vec<_>>(),
    })
}

impl ReportDocument {
    pub fn new(command: &str, input_digest: String) -> Self {
        ReportDocument {
            command: command.to_string(),
            input_digest,
            verdicts: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            timings: BTreeMap::new(),
        }
    }

    pub fn verdict(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.verdicts.insert(key.to_string(), value.into());
        self
    }

    pub fn witness(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.witnesses.insert(key.to_string(), value.into());
        self
    }

    pub fn timing(&mut self, key: &str, elapsed: Duration) -> &mut Self {
        self.timings
            .insert(key.to_string(), elapsed.as_micros() as u64);
        self
    }

    pub fn render_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        if !self.input_digest.is_empty() {
            out.push_str(&format!("input: sha256:{}\n", self.input_digest));
        }
        for (k, v) in &self.verdicts {
            out.push_str(&format!("{k}: {}\n", text_value(v)));
        }
        if !self.witnesses.is_empty() {
            out.push_str("witnesses:\n");
            for (k, v) in &self.witnesses {
                out.push_str(&format!("  {k}: {}\n", text_value(v)));
            }
        }
        if !self.timings.is_empty() {
            let parts: Vec<String> = self
                .timings
                .iter()
                .map(|(k, t)| format!("{k}={t}us"))
                .collect();
            out.push_str(&format!("timings: {}\n", parts.join(" ")));
        }
        out
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::Bool(true) => "yes".into(),
        Value::Bool(false) => "no".into(),
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz_core::linalg::frac;

    #[test]
    fn text_uses_yes_and_no() {
        let mut r = ReportDocument::new("classify", digest(b"abc"));
        r.verdict("simple", true).verdict("solvable", false);
        let text = r.render_text();
        assert!(text.contains("simple: yes\n"));
        assert!(text.contains("solvable: no\n"));
        assert!(text
            .contains("sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"));
    }

    #[test]
    fn machine_output_round_trips() {
        let mut r = ReportDocument::new("info", String::new());
        r.verdict("dim", 3)
            .witness("v", vector(&[frac(1, 2), frac(-3, 1)]));
        let text = r.render_machine();
        let back: ReportDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(text.contains("\"1/2\""));
    }
}
