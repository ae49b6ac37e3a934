//! Fixed-precision rendering of results as JSON, CSV and plain tables.
//!
//! Reals are written in scientific notation with a fixed number of
//! significant digits (12 unless overridden) so that output is
//! byte-stable across platforms. Integers and booleans are written as is.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

pub const DEFAULT_DIGITS: usize = 12;
pub const MAX_DIGITS: usize = 17;

/// `x` with `digits` significant digits, e.g. `2.87097888508e-21`.
pub fn real(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return "null".to_string();
    }
    let digits = digits.clamp(1, MAX_DIGITS);
    format!("{:.*e}", digits - 1, x)
}

fn scalar(v: &Value, digits: usize) -> String {
    match v {
        Value::Null => "null".into(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => match (n.as_u64(), n.as_i64()) {
            (Some(u), _) => u.to_string(),
            (None, Some(i)) => i.to_string(),
            _ => real(n.as_f64().unwrap_or(f64::NAN), digits),
        },
        Value::String(s) => s.clone(),
        Value::Array(_) | Value::Object(_) => unreachable!("scalar() called on a container"),
    }
}

fn write_json(out: &mut String, v: &Value, digits: usize, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_json(out, item, digits, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(indent + 1), Value::String(k.clone()));
                write_json(out, item, digits, indent + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        other => out.push_str(&scalar(other, digits)),
    }
}

/// Pretty-printed JSON document, terminated by a newline.
pub fn to_json<T: Serialize>(value: &T, digits: usize) -> Result<String, serde_json::Error> {
    let v = serde_json::to_value(value)?;
    let mut out = String::new();
    write_json(&mut out, &v, digits, 0);
    out.push('\n');
    Ok(out)
}

/// Flattens nested objects into `parent.child` keys, in field order.
fn flatten(prefix: &str, v: &Value, into: &mut Vec<(String, Value)>) {
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, item, into);
            }
        }
        other => into.push((prefix.to_string(), other.clone())),
    }
}

fn records(v: &Value) -> Vec<Vec<(String, Value)>> {
    let rows: Vec<&Value> = match v {
        Value::Array(items) => items.iter().collect(),
        other => vec![other],
    };
    rows.into_iter()
        .map(|row| {
            let mut fields = Vec::new();
            flatten("", row, &mut fields);
            fields
        })
        .collect()
}

/// CSV with a header row; an array becomes one row per element.
pub fn to_csv<T: Serialize>(value: &T, digits: usize) -> Result<String, Box<dyn std::error::Error>> {
    let rows = records(&serde_json::to_value(value)?);
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(first) = rows.first() {
        w.write_record(first.iter().map(|(k, _)| k.as_str()))?;
    }
    for row in &rows {
        w.write_record(row.iter().map(|(_, v)| match v {
            Value::Array(items) => items.iter().map(|i| scalar(i, digits)).collect::<Vec<_>>().join(";"),
            other => scalar(other, digits),
        }))?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Two-column `key  value` listing; array elements are prefixed with their index.
pub fn to_table<T: Serialize>(value: &T, digits: usize) -> Result<String, serde_json::Error> {
    let v = serde_json::to_value(value)?;
    let mut fields = Vec::new();
    match &v {
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&format!("[{i}]"), item, &mut fields);
            }
        }
        other => flatten("", other, &mut fields),
    }
    let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, item) in fields {
        let text = match &item {
            Value::Array(items) => items.iter().map(|i| scalar(i, digits)).collect::<Vec<_>>().join(", "),
            other => scalar(other, digits),
        };
        let _ = writeln!(out, "{k:<width$}  {text}");
    }
    Ok(out)
}

/// Empty object, used when a payload has nothing to report.
pub fn empty() -> Value {
    Value::Object(Map::new())
}
