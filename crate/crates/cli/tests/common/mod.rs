#![allow(dead_code)]

use std::process::Command;

use serde_json::Value;

pub const SCHEMA: &str = include_str!("../../schema/realforms.schema.json");

pub fn validator() -> jsonschema::Validator {
    let schema: Value = serde_json::from_str(SCHEMA).expect("schema is JSON");
    jsonschema::validator_for(&schema).expect("schema compiles")
}

/// Schema violations of a printed JSON document, one message per error.
pub fn schema_errors(v: &jsonschema::Validator, stdout: &str) -> Vec<String> {
    match serde_json::from_str::<Value>(stdout) {
        Ok(doc) => v
            .iter_errors(&doc)
            .map(|e| format!("{e} at {}", e.instance_path()))
            .collect(),
        Err(e) => vec![format!("not JSON: {e}")],
    }
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
}

/// Runs the built binary with `REALFORMS_SEED` cleared unless given.
pub fn run_bin(args: &[&str], seed_env: Option<&str>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_realforms"));
    cmd.args(args).env_remove("REALFORMS_SEED");
    if let Some(s) = seed_env {
        cmd.env("REALFORMS_SEED", s);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 output"),
    }
}
