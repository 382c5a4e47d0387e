// Copyright 2026 the Limacon Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Number formatting and the JSON and CSV writers.

use serde::Serialize;
use serde_json::{Map, Number, Value};

/// Significant digits kept in every serialized number.
pub const DIGITS: usize = 12;

/// Rounds to [`DIGITS`] significant digits. Negative zero becomes zero.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{:.*e}", DIGITS - 1, x).parse().unwrap_or(x);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Shortest decimal form of `round_sig(x)`, with `.` as separator.
pub fn fmt_num(x: f64) -> String {
    let r = round_sig(x);
    match Number::from_f64(r) {
        Some(n) => n.to_string(),
        None if r.is_nan() => "nan".into(),
        None if r > 0.0 => "inf".into(),
        None => "-inf".into(),
    }
}

fn round_value(v: Value) -> Value {
    match v {
        Value::Number(n) if !(n.is_i64() || n.is_u64()) => n
            .as_f64()
            .and_then(|x| Number::from_f64(round_sig(x)))
            .map_or(Value::Null, Value::Number),
        Value::Array(a) => Value::Array(a.into_iter().map(round_value).collect()),
        Value::Object(o) => {
            Value::Object(o.into_iter().map(|(k, v)| (k, round_value(v))).collect())
        }
        other => other,
    }
}

/// Serializes `report` with every float rounded, keys sorted, and a trailing newline.
pub fn to_json<T: Serialize>(report: &T) -> String {
    let v = serde_json::to_value(report).map_or(Value::Null, round_value);
    let mut s = serde_json::to_string_pretty(&v).unwrap_or_else(|_| "null".into());
    s.push('\n');
    s
}

/// A report object stamped with the schema version and the resolved config.
pub fn envelope<C: Serialize, R: Serialize>(config: &C, report: &R) -> Value {
    let mut map = match serde_json::to_value(report) {
        Ok(Value::Object(m)) => m,
        Ok(other) => {
            let mut m = Map::new();
            m.insert("result".into(), other);
            m
        }
        Err(_) => Map::new(),
    };
    map.insert("schema".into(), Value::from(1));
    map.insert(
        "config".into(),
        serde_json::to_value(config).unwrap_or(Value::Null),
    );
    Value::Object(map)
}

/// CSV text with the given header and rows, `\n` line endings.
pub fn to_csv(header: &[&str], rows: impl IntoIterator<Item = Vec<f64>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.into_iter().map(fmt_num).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
