//! Deterministic reports: a fixed JSON schema with sorted keys,
//! canonical rational strings, a derived text rendering, and the
//! exit-code contract (0 = all checks pass, 1 = some check failed,
//! 2 = usage error, handled by the argument parser).

use serde::Serialize;
use serde_json::{Map, Value};

pub const REPORT_VERSION: &str = "report-v1";

#[derive(Serialize)]
pub struct CheckLine {
    pub name: String,
    pub status: String,
    pub detail: String,
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub checks: Vec<CheckLine>,
    pub version: String,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Value::Object(Map::new()),
            results: Value::Object(Map::new()),
            checks: Vec::new(),
            version: REPORT_VERSION.to_string(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        if let Value::Object(m) = &mut self.inputs {
            m.insert(key.to_string(), value.into());
        }
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        if let Value::Object(m) = &mut self.results {
            m.insert(key.to_string(), value.into());
        }
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckLine {
            name: name.to_string(),
            status: if passed { "pass" } else { "fail" }.to_string(),
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == "pass")
    }

    pub fn to_json(&self) -> String {
        // serde_json maps are sorted; struct fields keep declaration
        // order: byte-identical output for identical inputs.
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {}\n", self.command));
        if let Value::Object(m) = &self.inputs {
            if !m.is_empty() {
                out.push_str("inputs:\n");
                for (k, v) in m {
                    out.push_str(&format!("  {k} = {v}\n"));
                }
            }
        }
        if let Value::Object(m) = &self.results {
            if !m.is_empty() {
                out.push_str("results:\n");
                for (k, v) in m {
                    out.push_str(&format!("  {k} = {}\n", compact(v)));
                }
            }
        }
        if !self.checks.is_empty() {
            out.push_str("checks:\n");
            for c in &self.checks {
                out.push_str(&format!(
                    "  [{}] {} - {}\n",
                    if c.status == "pass" { "ok" } else { "FAIL" },
                    c.name,
                    c.detail
                ));
            }
        }
        out.push_str(&format!(
            "status: {}\n",
            if self.all_passed() { "pass" } else { "fail" }
        ));
        out
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).unwrap_or_else(|_| "<unprintable>".to_string())
}
