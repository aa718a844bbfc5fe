//! Structured output. Scalars are always canonical strings.

use gebra_core::{Matrix, Multivector, ScalarRF, TensorPoly};
use serde_json::{json, Value as Json};

use crate::eval::Value;
use crate::repro::{Item, Mismatch, Report};

fn scalar(s: &ScalarRF) -> Json {
    Json::String(s.to_string())
}

pub fn multivector(m: &Multivector) -> Json {
    let terms: Vec<Json> = m
        .terms()
        .map(|(b, c)| json!({"blade": b.name(), "coeff": scalar(c)}))
        .collect();
    json!({"kind": "multivector", "dim": m.dim(), "terms": terms})
}

pub fn tensor(t: &TensorPoly) -> Json {
    let terms: Vec<Json> = t
        .terms()
        .map(|(w, c)| {
            let word: Vec<String> = w.iter().map(|b| b.name()).collect();
            json!({"word": word, "coeff": scalar(c)})
        })
        .collect();
    json!({"kind": "tensor", "dim": t.dim(), "rank": t.rank(), "terms": terms})
}

pub fn matrix(m: &Matrix, dim: usize) -> Json {
    let rows: Vec<Json> = (0..m.rows())
        .map(|i| Json::Array(m.row(i).iter().map(scalar).collect()))
        .collect();
    json!({"kind": "matrix", "dim": dim, "rows": m.rows(), "cols": m.cols(), "entries": rows})
}

pub fn value(v: &Value, dim: usize) -> Json {
    match v {
        Value::Scalar(s) => json!({"kind": "scalar", "dim": dim, "value": scalar(s)}),
        Value::Multivector(m) => multivector(m),
        Value::Tensor(t) => tensor(t),
    }
}

/// Golden outcome attached to a report.
pub enum GoldenStatus<'a> {
    Skipped,
    Passed(usize),
    Failed(&'a Mismatch),
}

pub fn report(r: &Report, golden: GoldenStatus<'_>) -> Json {
    let results: Vec<Json> = r
        .entries
        .iter()
        .map(|e| {
            let mut v = match &e.item {
                Item::Matrix(m) => matrix(m, r.dim),
                Item::Bool(b) => json!({"kind": "bool", "value": b}),
                Item::Scalar(s) => json!({"kind": "scalar", "dim": r.dim, "value": scalar(s)}),
                Item::Note(s) => json!({"kind": "note", "value": s}),
            };
            v["name"] = Json::String(e.name.clone());
            v
        })
        .collect();
    let golden = match golden {
        GoldenStatus::Skipped => json!({"status": "skipped"}),
        GoldenStatus::Passed(k) => json!({"status": "passed", "checked": k}),
        GoldenStatus::Failed(m) => json!({"status": "failed", "entry": m.name, "diff": m.detail}),
    };
    json!({"target": r.target.name(), "dim": r.dim, "results": results, "golden": golden})
}
