//! Plain-text rendering of a command report.

use serde_json::Value;

/// Renders a report as indented `key: value` lines. Arrays of scalars are
/// printed inline, so matrices come out one row per line.
pub fn text(v: &Value) -> String {
    let mut out = String::new();
    block(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(a) => format!("[{}]", a.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => scalar(other),
    }
}

fn block(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if is_flat(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    block(x, depth + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for (idx, x) in items.iter().enumerate() {
                if is_flat(x) {
                    out.push_str(&format!("{pad}{}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}[{}]\n", idx + 1));
                    block(x, depth + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}
