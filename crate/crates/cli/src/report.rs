use std::fmt;

use serde_json::{json, Map, Value};

use gradalg::json::SchemaError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_MATH: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Schema(String),
    /// A mathematical precondition failed; `name` is the error variant.
    Math {
        name: String,
        message: String,
    },
}

impl From<SchemaError> for CliError {
    fn from(e: SchemaError) -> Self {
        CliError::Schema(e.to_string())
    }
}

/// The innermost variant name of a library error, read off its Debug form.
pub fn error_name(debug: &str) -> String {
    const WRAPPERS: [&str; 6] = ["Loop(", "Grading(", "Group(", "Algebra(", "Scalar(", "Classify("];
    let mut s = debug;
    while let Some(rest) = WRAPPERS.iter().find_map(|w| s.strip_prefix(w)) {
        s = rest;
    }
    let end = s.find(|c: char| !c.is_alphanumeric() && c != '_').unwrap_or(s.len());
    s[..end].to_string()
}

pub fn math<E: fmt::Debug + fmt::Display>(e: E) -> CliError {
    CliError::Math { name: error_name(&format!("{e:?}")), message: e.to_string() }
}

pub struct Report {
    command: Vec<String>,
    seed: u64,
    checks: Vec<Value>,
    failed: bool,
    result: Map<String, Value>,
}

impl Report {
    pub fn new(command: Vec<String>, seed: u64) -> Report {
        Report { command, seed, checks: Vec::new(), failed: false, result: Map::new() }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.check_with(name, passed, Value::Null);
    }

    pub fn check_with(&mut self, name: impl Into<String>, passed: bool, witness: Value) {
        self.failed |= !passed;
        let mut c = Map::new();
        c.insert("name".into(), Value::String(name.into()));
        c.insert("status".into(), Value::String(if passed { "pass" } else { "fail" }.into()));
        if !witness.is_null() {
            c.insert("witness".into(), witness);
        }
        self.checks.push(Value::Object(c));
    }

    pub fn set(&mut self, key: &str, v: Value) {
        self.result.insert(key.to_string(), v);
    }

    pub fn finish(self, error: Option<CliError>) -> (Value, i32) {
        let (status, code, err) = match &error {
            Some(CliError::Schema(m)) => ("error", EXIT_SCHEMA, json!({"kind": "schema", "message": m})),
            Some(CliError::Math { name, message }) => {
                ("error", EXIT_MATH, json!({"kind": "math", "name": name, "message": message}))
            }
            None if self.failed => ("fail", EXIT_FAILED, Value::Null),
            None => ("pass", EXIT_OK, Value::Null),
        };
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("seed".into(), json!(self.seed));
        m.insert("status".into(), json!(status));
        m.insert("checks".into(), Value::Array(self.checks));
        m.insert("result".into(), Value::Object(self.result));
        if !err.is_null() {
            m.insert("error".into(), err);
        }
        (Value::Object(m), code)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_of_nested_errors() {
        assert_eq!(error_name("Loop(Grading(NotDirectSum(\"x\")))"), "NotDirectSum");
        assert_eq!(error_name("NoSuchRoot(\"Q\")"), "NoSuchRoot");
        assert_eq!(error_name("CharCoprime { p: 0, n: 2 }"), "CharCoprime");
        assert_eq!(error_name("NoLift"), "NoLift");
    }
}
