//! JSON envelope, exact-rational rendering and CSV flattening.

use std::io::Write;

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::hypotest::Mode;
use crate::numerics::{fmt_rational, Scalar};

/// `{"num": "..", "den": "..", "approx": x}`; the strings are authoritative.
pub fn exact(r: &BigRational) -> Value {
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
        "approx": Scalar::to_f64(r),
    })
}

/// A command's payload plus the optional flat table used for CSV output.
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub table: Option<Table>,
}

pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub fn envelope(report: &Report, mode: Mode, elapsed_ms: Option<u128>) -> Value {
    let mut env = Map::new();
    env.insert("command".into(), Value::String(report.command.clone()));
    env.insert("inputs".into(), report.inputs.clone());
    env.insert("mode".into(), serde_json::to_value(mode).expect("mode serializes"));
    env.insert("results".into(), report.results.clone());
    if let Some(ms) = elapsed_ms {
        env.insert("timing_ms".into(), json!(ms as u64));
    }
    Value::Object(env)
}

fn is_exact(v: &Map<String, Value>) -> bool {
    v.len() == 3 && v.contains_key("num") && v.contains_key("den") && v.contains_key("approx")
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<Vec<String>>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) if is_exact(map) => {
            let num = map["num"].as_str().unwrap_or_default();
            let den = map["den"].as_str().unwrap_or_default();
            let text = if den == "1" { num.to_string() } else { format!("{num}/{den}") };
            out.push(vec![prefix.to_string(), text, map["approx"].to_string()]);
        }
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&key(k), x, out);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), x, out);
            }
        }
        Value::String(s) => out.push(vec![prefix.to_string(), s.clone(), String::new()]),
        Value::Null => out.push(vec![prefix.to_string(), String::new(), String::new()]),
        other => out.push(vec![prefix.to_string(), other.to_string(), String::new()]),
    }
}

/// CSV rendering: the command's own table when it has one, otherwise
/// `field,value,approx` rows flattened from the results.
pub fn write_csv<W: Write>(report: &Report, w: W) -> csv::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    match &report.table {
        Some(t) => {
            out.write_record(&t.header)?;
            for row in &t.rows {
                out.write_record(row)?;
            }
        }
        None => {
            out.write_record(["field", "value", "approx"])?;
            let mut rows = Vec::new();
            flatten("", &report.results, &mut rows);
            for row in rows {
                out.write_record(&row)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

/// `p/q` text for CSV cells.
pub fn cell(r: &BigRational) -> String {
    fmt_rational(r)
}
