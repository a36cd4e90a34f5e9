use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub id: String,
    /// The statement this record checks.
    pub anchor: String,
    /// SHA-256 of the canonical JSON of `inputs`.
    pub inputs_digest: String,
    pub inputs: Value,
    pub values: Value,
    pub pass: bool,
}

impl Record {
    pub fn new(id: &str, anchor: &str, inputs: Value, values: Value, pass: bool) -> Self {
        let canonical = serde_json::to_vec(&inputs).expect("json values serialize");
        Record {
            id: id.to_string(),
            anchor: anchor.to_string(),
            inputs_digest: hex::encode(Sha256::digest(&canonical)),
            inputs,
            values,
            pass,
        }
    }

    /// A check that could not be computed.
    pub fn failed(id: &str, anchor: &str, inputs: Value, err: impl std::fmt::Display) -> Self {
        Record::new(
            id,
            anchor,
            inputs,
            serde_json::json!({ "error": err.to_string() }),
            false,
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub version: String,
    pub seed: u64,
    pub records: Vec<Record>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn new(seed: u64, mut records: Vec<Record>) -> Self {
        records.sort_by(|a, b| a.id.cmp(&b.id));
        let overall = records.iter().all(|r| r.pass);
        VerificationReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            records,
            overall,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("weylfix {} seed {}\n", self.version, self.seed);
        for r in &self.records {
            let status = if r.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{status} {:<28} {}", r.id, r.anchor);
            let _ = writeln!(s, "     {}", r.values);
        }
        let _ = writeln!(s, "overall: {}", if self.overall { "PASS" } else { "FAIL" });
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn digest_is_sha256_of_inputs() {
        let r = Record::new("x", "a", json!({}), json!(null), true);
        // sha256("{}")
        assert_eq!(
            r.inputs_digest,
            "44136fa355b3678a1146ad16f7e8649e94fb4fc21fe77e8310c060f61caaff8a"
        );
    }

    #[test]
    fn overall_and_order() {
        let rep = VerificationReport::new(
            3,
            vec![
                Record::new("02.a", "", json!(1), json!(null), false),
                Record::new("01.a", "", json!(1), json!(null), true),
            ],
        );
        assert_eq!(rep.records[0].id, "01.a");
        assert!(!rep.overall);
        assert!(rep.to_text().contains("FAIL 02.a"));
    }
}
