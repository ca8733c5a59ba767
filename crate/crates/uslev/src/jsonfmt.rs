//! Deterministic JSON emission for CLI reports.
//!
//! Keys come out sorted (the default `serde_json` map is a BTreeMap),
//! floats are rounded to 12 significant digits before printing, and every
//! document ends with a newline — identical inputs and seed produce
//! byte-identical output.

use serde_json::{Map, Value};

use crate::extvalues::ExtScalar;

/// Rounds to 12 significant digits; the shortest round-trip printer then
/// emits a stable decimal form.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub fn number(x: f64) -> Value {
    Value::from(sig12(x))
}

/// Extended scalars print as a number, `"-inf"` or `"nu"`.
pub fn ext(v: ExtScalar) -> Value {
    match v {
        ExtScalar::Real(x) => number(x),
        ExtScalar::NegInf => Value::String("-inf".into()),
        ExtScalar::Nu => Value::String("nu".into()),
    }
}

pub fn ext_list(values: &[ExtScalar]) -> Value {
    Value::Array(values.iter().map(|v| ext(*v)).collect())
}

pub fn indices(list: &[usize]) -> Value {
    Value::Array(list.iter().map(|&i| Value::from(i)).collect())
}

/// Serializes any serde value and normalizes every float in it.
pub fn normalized<T: serde::Serialize>(value: &T) -> Value {
    let raw = serde_json::to_value(value).expect("report types serialize infallibly");
    normalize_value(raw)
}

fn normalize_value(v: Value) -> Value {
    match v {
        Value::Number(n) => {
            if let Some(f) = n.as_f64() {
                if n.is_f64() {
                    return Value::from(sig12(f));
                }
            }
            Value::Number(n)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(normalize_value).collect()),
        Value::Object(map) => {
            let mut out = Map::new();
            for (k, val) in map {
                out.insert(k, normalize_value(val));
            }
            Value::Object(out)
        }
        other => other,
    }
}

/// Final rendering: compact JSON, newline-terminated.
pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("value renders");
    s.push('\n');
    s
}
