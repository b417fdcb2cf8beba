use std::collections::BTreeMap;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Error => "error",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// Files read during a command, keyed by the path as given.
#[derive(Default)]
pub struct Inputs(BTreeMap<String, String>);

impl Inputs {
    pub fn read(&mut self, path: &str) -> Result<String, String> {
        let bytes = std::fs::read(path).map_err(|e| format!("cannot read `{path}`: {e}"))?;
        self.0.insert(path.to_string(), hex::encode(&Sha256::digest(&bytes)[..]));
        String::from_utf8(bytes).map_err(|_| format!("`{path}` is not UTF-8"))
    }

    fn to_json(&self) -> Value {
        json!(self.0)
    }
}

/// What the process prints and how it exits.
pub struct Outcome {
    pub status: Status,
    pub text: String,
    pub message: Option<String>,
}

pub fn envelope(argv: &[String], inputs: &Inputs, status: Status, payload: Value) -> Value {
    json!({
        "tool": "alexcert",
        "version": env!("CARGO_PKG_VERSION"),
        "command": argv,
        "inputs": inputs.to_json(),
        "status": status.as_str(),
        "payload": payload,
    })
}

pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
