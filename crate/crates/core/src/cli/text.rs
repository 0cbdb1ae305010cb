//! Plain-text rendering of result documents.

use std::fmt::Write;

use serde_json::Value;

/// Indented `key: value` lines; vectors on one line, matrices one row per
/// line. Error records become a single line.
pub fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    if let Some(e) = doc.get("error") {
        let field = |k: &str| e.get(k).and_then(Value::as_str).unwrap_or("");
        let _ = writeln!(
            out,
            "error {} at {}: {}",
            field("code"),
            field("location"),
            field("message")
        );
        return out;
    }
    if let Some(v) = doc.get("verdict").and_then(Value::as_bool) {
        let _ = writeln!(
            out,
            "{}",
            if v {
                "order is maximal"
            } else {
                "order is NOT maximal"
            }
        );
    }
    write_value(&mut out, doc, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("null".into()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        _ => None,
    }
}

fn inline_vector(v: &Value) -> Option<String> {
    let items = v.as_array()?;
    let parts = items.iter().map(scalar).collect::<Option<Vec<_>>>()?;
    Some(format!("[{}]", parts.join(", ")))
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if let Some(s) = scalar(x).or_else(|| inline_vector(x)) {
                    let _ = writeln!(out, "{pad}{k}: {s}");
                } else {
                    let _ = writeln!(out, "{pad}{k}:");
                    write_value(out, x, indent + 1);
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if let Some(s) = scalar(x).or_else(|| inline_vector(x)) {
                    let _ = writeln!(out, "{pad}{s}");
                } else {
                    let _ = writeln!(out, "{pad}-");
                    write_value(out, x, indent + 1);
                }
            }
        }
        _ => {
            let _ = writeln!(out, "{pad}{}", scalar(v).unwrap_or_default());
        }
    }
}
