use serde_json::{json, Value};

use crate::error::CliError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Output of one run: text for the terminal and a JSON document that
/// records the tool version and the full configuration.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub config: Value,
    pub result: Value,
    pub text: String,
    /// Set when the run completed but a certificate or property failed.
    pub failure: Option<(i32, String)>,
}

impl Report {
    pub fn new(command: &'static str, config: Value, result: Value, text: String) -> Self {
        Report { command, config, result, text, failure: None }
    }

    pub fn fail_with(mut self, e: CliError) -> Self {
        self.failure = Some((e.exit_code(), e.to_string()));
        self
    }

    /// Report for a run that stopped before producing a result.
    pub fn error(command: &'static str, config: Value, e: &CliError) -> Self {
        Report {
            command,
            config,
            result: Value::Null,
            text: String::new(),
            failure: Some((e.exit_code(), e.to_string())),
        }
    }

    pub fn to_json(&self) -> Value {
        let (status, exit_code, error) = match &self.failure {
            None => ("ok", 0, Value::Null),
            Some((code, msg)) => ("failed", *code, json!(msg)),
        };
        json!({
            "tool": "skein",
            "version": VERSION,
            "command": self.command,
            "config": self.config,
            "status": status,
            "exit_code": exit_code,
            "error": error,
            "result": self.result,
        })
    }

    pub fn json_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }
}
