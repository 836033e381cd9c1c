use std::collections::BTreeMap;
use std::time::Instant;

use dnormal::CertificateReport;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// The document every command prints. Field order is fixed by the struct;
/// `results` keys are sorted by `serde_json`.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    pub inputs_digest: String,
    pub results: Value,
    pub certificates: Vec<CertificateReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// SHA-256 over each input's bytes, then the canonical flag string.
pub fn digest(inputs: &[&[u8]], flags: &str) -> String {
    let mut h = Sha256::new();
    for i in inputs {
        h.update((i.len() as u64).to_le_bytes());
        h.update(i);
    }
    h.update(flags.as_bytes());
    hex::encode(h.finalize())
}

/// Wall-clock stage timings, kept only when asked for.
pub struct Timer {
    enabled: bool,
    stages: BTreeMap<String, f64>,
}

impl Timer {
    pub fn new(enabled: bool) -> Self {
        Self {
            enabled,
            stages: BTreeMap::new(),
        }
    }

    pub fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            *self.stages.entry(stage.to_string()).or_default() += start.elapsed().as_secs_f64();
        }
        out
    }

    pub fn finish(self) -> Option<BTreeMap<String, f64>> {
        self.enabled.then_some(self.stages)
    }
}
