use std::collections::BTreeSet;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Map, Value};
use tritau_core::report::to_record;

pub const TOOL: &str = "tritau";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Keys left out of csv rows: bulky certificate payloads that the json
/// output carries in full.
const CSV_SKIP: &[&str] = &["certificate", "removed"];

/// `{tool, version, config, results}` with normalized floats.
pub fn envelope<C: Serialize, R: Serialize>(config: &C, results: &R, timings: bool) -> Value {
    json!({
        "tool": TOOL,
        "version": VERSION,
        "config": to_record(config, timings),
        "results": to_record(results, timings),
    })
}

pub fn json_text(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("valid json");
    text.push('\n');
    text
}

/// Writes to `path`, or stdout when absent.
pub fn emit(path: Option<&Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

/// Any solve outcome inside `value` without a certified optimum.
pub fn has_bounded(value: &Value) -> bool {
    match value {
        Value::Object(map) => {
            map.get("status").and_then(Value::as_str) == Some("BOUNDED")
                || map.values().any(has_bounded)
        }
        Value::Array(items) => items.iter().any(has_bounded),
        _ => false,
    }
}

/// Dotted-path flattening; arrays become compact json text.
pub fn flatten(value: &Value) -> Map<String, Value> {
    fn walk(prefix: &str, value: &Value, out: &mut Map<String, Value>) {
        match value {
            Value::Object(map) => {
                for (k, v) in map {
                    if CSV_SKIP.contains(&k.as_str()) {
                        continue;
                    }
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&key, v, out);
                }
            }
            Value::Array(_) => {
                out.insert(prefix.into(), Value::String(value.to_string()));
            }
            _ => {
                out.insert(prefix.into(), value.clone());
            }
        }
    }
    let mut out = Map::new();
    walk("", value, &mut out);
    out
}

fn cell(value: Option<&Value>) -> String {
    match value {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(v) => v.to_string(),
    }
}

/// csv with the union of all flattened keys as sorted columns.
pub fn csv_text(rows: &[Value]) -> csv::Result<String> {
    let flat: Vec<Map<String, Value>> = rows.iter().map(flatten).collect();
    let columns: BTreeSet<&String> = flat.iter().flat_map(|r| r.keys()).collect();
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(columns.iter().map(|c| c.as_str()).collect::<Vec<_>>())?;
    for row in &flat {
        writer.write_record(columns.iter().map(|c| cell(row.get(*c))))?;
    }
    let bytes = writer.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("utf-8 csv"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flattening() {
        let v = json!({"a": {"b": 1, "certificate": [1, 2]}, "c": [1, 2], "d": null});
        let flat = flatten(&v);
        assert_eq!(flat.keys().collect::<Vec<_>>(), ["a.b", "c", "d"]);
        assert_eq!(flat["c"], json!("[1,2]"));
    }

    #[test]
    fn csv_columns_are_unioned() {
        let text = csv_text(&[json!({"x": 1}), json!({"y": "a,b"})]).unwrap();
        assert_eq!(text, "x,y\n1,\n,\"a,b\"\n");
    }

    #[test]
    fn bounded_detection() {
        assert!(has_bounded(&json!([{"inner": {"status": "BOUNDED"}}])));
        assert!(!has_bounded(&json!({"status": "OPTIMAL"})));
    }
}
