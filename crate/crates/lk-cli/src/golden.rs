//! Comparison of command output against stored JSON fixtures.
//!
//! A fixture constrains only the keys it lists: every key of a fixture object
//! must be present in the output with a matching value, while extra output
//! keys are ignored. Arrays must agree in length and element by element, and
//! scalars must be equal.

use std::path::{Path, PathBuf};

use serde_json::Value;

use crate::error::CliError;

/// Location of the fixture for `command` at rank `n` under `root`, e.g.
/// `root/locus/n4.json`.
pub fn fixture_path(root: &Path, command: &str, n: usize) -> PathBuf {
    root.join(command).join(format!("n{n}.json"))
}

pub fn load(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read golden file {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("golden file {} is not valid JSON: {e}", path.display())))
}

/// JSON-pointer paths at which `actual` departs from `expected`, in document
/// order.
pub fn mismatches(expected: &Value, actual: &Value) -> Vec<String> {
    let mut out = Vec::new();
    walk(expected, actual, String::new(), &mut out);
    out
}

fn walk(expected: &Value, actual: &Value, path: String, out: &mut Vec<String>) {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => {
            for (k, ev) in e {
                let sub = format!("{path}/{k}");
                match a.get(k) {
                    Some(av) => walk(ev, av, sub, out),
                    None => out.push(format!("{sub}: missing from output")),
                }
            }
        }
        (Value::Array(e), Value::Array(a)) => {
            if e.len() != a.len() {
                out.push(format!("{path}: expected {} elements, found {}", e.len(), a.len()));
                return;
            }
            for (k, (ev, av)) in e.iter().zip(a).enumerate() {
                walk(ev, av, format!("{path}/{k}"), out);
            }
        }
        _ => {
            if expected != actual {
                let shown = if path.is_empty() { "/".to_string() } else { path };
                out.push(format!("{shown}: expected {expected}, found {actual}"));
            }
        }
    }
}

/// Fails with a mismatch error naming the first few differing paths.
pub fn check(path: &Path, actual: &Value) -> Result<(), CliError> {
    let expected = load(path)?;
    let diffs = mismatches(&expected, actual);
    if diffs.is_empty() {
        return Ok(());
    }
    let shown: Vec<&str> = diffs.iter().take(3).map(String::as_str).collect();
    Err(CliError::GoldenMismatch(format!(
        "{} mismatch(es) against {}: {}",
        diffs.len(),
        path.display(),
        shown.join("; ")
    )))
}
