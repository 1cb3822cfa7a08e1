//! Deterministic JSON records.
//!
//! Keys come out sorted (the default `serde_json` map), floats are rounded
//! to 12 significant digits, and wall-clock fields are dropped unless asked
//! for, so a fixed run renders to the same bytes every time.

use serde::Serialize;
use serde_json::Value;

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Field names that carry wall-clock measurements.
const TIMING_KEYS: &[&str] = &["seconds"];

/// Rounds to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses")
}

fn normalize(value: &mut Value, timings: bool) {
    match value {
        Value::Number(num) if num.is_f64() => {
            let x = round_sig(num.as_f64().expect("f64"));
            *value = serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number);
        }
        Value::Array(items) => items.iter_mut().for_each(|v| normalize(v, timings)),
        Value::Object(map) => {
            if !timings {
                map.retain(|k, _| !TIMING_KEYS.contains(&k.as_str()));
            }
            map.values_mut().for_each(|v| normalize(v, timings));
        }
        _ => {}
    }
}

/// Serializes `item` into a normalized JSON value.
pub fn to_record<T: Serialize>(item: &T, timings: bool) -> Value {
    let mut value = serde_json::to_value(item).expect("reports serialize");
    normalize(&mut value, timings);
    value
}

/// Pretty JSON text of [`to_record`], newline-terminated.
pub fn to_json_string<T: Serialize>(item: &T, timings: bool) -> String {
    let mut text = serde_json::to_string_pretty(&to_record(item, timings)).expect("valid json");
    text.push('\n');
    text
}
