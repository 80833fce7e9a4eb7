//! The machine-readable document emitted under `--json`, plus the JSON
//! shapes of the library types it carries.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use torus_pinch::{
    CounterexampleReport, EvenCF, MatSL2, PinchSequence, PinchStep, ReducedFraction,
    TorusKnotParams, TwoBridgeKnot,
};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Violation,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violation => 1,
            Status::Error => 2,
        }
    }
}

/// One command's outcome. Maps are `BTreeMap`-backed, so serialization
/// order is stable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: Value,
    pub status: Status,
}

impl ReportDocument {
    pub fn new(
        command: &str,
        inputs: BTreeMap<String, Value>,
        results: Value,
        status: Status,
    ) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            results,
            status,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report document serializes")
    }
}

pub fn knot_json(k: &TorusKnotParams<i128>) -> Value {
    json!([k.p(), k.q()])
}

pub fn fraction_json(f: &ReducedFraction<i128>) -> Value {
    json!([f.num(), f.den()])
}

pub fn cf_json(cf: &EvenCF<i128>) -> Value {
    json!(cf.coeffs())
}

pub fn matrix_json(m: &MatSL2<i128>) -> Value {
    let [a, b, c, d] = m.entries();
    json!([[a, b], [c, d]])
}

pub fn step_json(s: &PinchStep<i128>) -> Value {
    json!({
        "from": knot_json(&s.from),
        "to": knot_json(&s.to),
        "t": s.t,
        "h": s.h,
        "sign": s.sign.symbol(),
    })
}

pub fn sequence_json(seq: &PinchSequence<i128>) -> Value {
    json!({
        "start": knot_json(&seq.start),
        "steps": seq.steps.iter().map(step_json).collect::<Vec<_>>(),
        "pinch_number": seq.pinch_number(),
    })
}

pub fn two_bridge_json(k: &TwoBridgeKnot<i128>) -> Value {
    json!({
        "t1": fraction_json(&k.t1),
        "t2": fraction_json(&k.t2),
        "matrix": matrix_json(&k.matrix),
        "normalized": fraction_json(&k.normalized),
    })
}

pub fn counterexample_json(r: &CounterexampleReport<i128>) -> Value {
    json!({
        "family": r.id.family.letter(),
        "n": r.id.n,
        "knot": knot_json(&r.knot),
        "pinch_number": r.pinch_number,
        "band_count": r.band_count,
        "slice_fraction": fraction_json(&r.slice_fraction),
        "slice_cf": cf_json(&r.slice_cf),
        "slice_recognized": r.slice_recognized,
        "determinant": r.determinant,
        "jvc_negative_count": r.jvc_negative_count,
        "jvc_equals_pinch_minus_one": r.jvc_equals_pinch_minus_one,
    })
}
