//! JSON rendering. Every integer is written as a decimal string and no
//! floats appear, so parsing and re-serializing a report reproduces it
//! byte for byte (object keys are kept sorted).

use serde_json::{json, Map, Value};
use torsion_core::gate::{Attempt, ConditionEvidence, GateReport};

pub const REPORT_VERSION: &str = "1";

pub fn int(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

pub fn evidence_json(e: &ConditionEvidence) -> Value {
    let data: Vec<Value> = e.data.iter().map(|d| json!({"label": d.label, "value": int(&d.value)})).collect();
    json!({
        "name": e.name,
        "passed": e.passed,
        "data": data,
        "note": e.note,
    })
}

pub fn attempt_json(a: &Attempt) -> Value {
    json!({
        "method": a.method.map(|m| m.to_string()),
        "p": a.p.map(int),
        "passed": a.passed,
        "evidence": a.evidence.iter().map(evidence_json).collect::<Vec<_>>(),
    })
}

pub fn gate_outcome_json(r: &GateReport) -> Value {
    json!({
        "status": r.outcome.as_str(),
        "excluded": r.outcome.is_excluded(),
        "method": r.outcome.method().map(|m| m.to_string()),
        "witness_prime": r.witness_prime.map(int),
        "attempts": r.attempts.iter().map(attempt_json).collect::<Vec<_>>(),
    })
}

pub fn envelope(command: &str, inputs: Map<String, Value>, outcome: Value, evidence: Vec<Value>, micros: u128) -> Value {
    json!({
        "version": REPORT_VERSION,
        "command": command,
        "inputs": Value::Object(inputs),
        "outcome": outcome,
        "evidence": evidence,
        "timing": {"elapsed_micros": int(micros)},
    })
}

/// Pretty-printed with a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("Value always serializes");
    s.push('\n');
    s
}
