use std::fmt::Write as _;

use polyrec_core::{ExponentVec, Polytope, Rational};
use serde::Serialize;
use serde_json::{json, Value};

/// Machine-readable result of one CLI invocation.
///
/// Object keys are sorted, so identical inputs serialize to identical bytes.
/// `elapsed` is only filled in when timing is requested.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub verified: bool,
    pub artifacts: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed: Option<String>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is plain JSON");
        s.push('\n');
        s
    }

    /// `key: value` lines; strings are printed bare, everything else as
    /// compact JSON.
    pub fn to_text(&self) -> String {
        let mut out = format!("verified: {}\n", self.verified);
        if let Value::Object(map) = &self.artifacts {
            for (k, v) in map {
                let _ = writeln!(out, "{k}: {}", scalar_text(v));
            }
        }
        if let Some(e) = &self.elapsed {
            let _ = writeln!(out, "elapsed: {e}");
        }
        out
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn rationals(row: &[Rational]) -> Value {
    Value::Array(row.iter().map(rational).collect())
}

pub fn exponent(e: &ExponentVec) -> Value {
    json!(e.as_slice())
}

pub fn exponents<'a>(es: impl IntoIterator<Item = &'a ExponentVec>) -> Value {
    Value::Array(es.into_iter().map(exponent).collect())
}

pub fn polytope(p: &Polytope) -> Value {
    let vertices = match p.vertices() {
        Ok(v) => Value::Array(v.iter().map(|r| rationals(r)).collect()),
        Err(_) => Value::Null,
    };
    json!({ "dim": p.ambient_dim(), "vertices": vertices })
}
