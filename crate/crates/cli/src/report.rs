use serde_json::{json, Value};

use crate::commands::{run_command, Outcome};
use crate::error::CliResult;
use crate::spec::ProblemSpec;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub json: Value,
    pub inconclusive: bool,
}

pub fn run(command: &str, spec: &ProblemSpec) -> CliResult<Report> {
    let Outcome { result, inconclusive } = run_command(command, spec)?;
    let json = json!({
        "schema_version": SCHEMA_VERSION,
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "spec": spec.echo(),
        "result": result,
    });
    Ok(Report { command: command.into(), json, inconclusive })
}

impl Report {
    pub fn set_timing(&mut self, millis: u128) {
        self.json["timing_ms"] = json!(millis as u64);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("values serialize")
    }

    /// `path: value` lines derived from the JSON payload.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        flatten("", &self.json, &mut out);
        out
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&join(k), v, out);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{prefix}: [{}]\n", parts.join(", ")));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        other => out.push_str(&format!("{prefix}: {}\n", scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
