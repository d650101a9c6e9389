use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Map, Value};
use torsion_core::exactmath::{dedekind_psi, FiniteField, PrimePower};
use torsion_core::gate::{verify_with, GateReport, Method, SearchOptions};
use torsion_core::hecke::{action_on_level, render_translates, translates_on_level};
use torsion_core::maninspace::{cusp_count_x0, genus_x0, Level};
use torsion_core::redux::{admissible_traces, census_slice, orders_divisible_by, CensusTables, ObservedCensus, CENSUS_MAX_Q};

use crate::cli::{CensusArgs, Command, Format, HeckeArgs, RunConfig, SearchArgs};
use crate::engine::ParallelEngine;
use crate::error::Result;
use crate::report::{envelope, evidence_json, gate_outcome_json, int, to_text};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;

/// Levels of the two case lists, in the order they are stated.
pub const CASE_LEVELS: [u64; 9] = [169, 49, 25, 143, 91, 77, 55, 40, 22];

pub struct Output {
    pub stdout: String,
    pub exit: i32,
}

struct Rendered {
    text: String,
    inputs: Map<String, Value>,
    outcome: Value,
    evidence: Vec<Value>,
    exit: i32,
}

pub fn run(config: &RunConfig) -> Result<Output> {
    let engine = ParallelEngine::new(config.cache.clone());
    let start = Instant::now();
    let (name, r) = match &config.command {
        Command::Verify(a) => ("verify", verify(&engine, a.level, a.search)?),
        Command::Homology(a) => ("homology", homology(&engine, a.level)?),
        Command::Hecke(a) => ("hecke", hecke(a)?),
        Command::Census(a) => ("census", census(a)?),
        Command::Reproduce(a) => ("reproduce", reproduce(&engine, *a)?),
    };
    let micros = start.elapsed().as_micros();
    let stdout = match config.format {
        Format::Json => to_text(&envelope(name, r.inputs, r.outcome, r.evidence, micros)),
        Format::Text => format!("{}elapsed: {micros} us\n", r.text),
    };
    Ok(Output { stdout, exit: r.exit })
}

fn inputs(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn attempt_heading(method: Option<Method>, p: Option<u64>) -> String {
    match (method, p) {
        (None, _) => "gonality gate".into(),
        (Some(Method::MethodA), Some(p)) => format!("reduction at p={p}"),
        (Some(Method::MethodA), None) => "reduction".into(),
        (Some(m), Some(p)) => format!("{m} at p={p}"),
        (Some(m), None) => m.to_string(),
    }
}

/// Evidence chain in search order: gonality, then each prime's
/// arithmetic conditions and rank check, then the verdict.
pub fn render_gate_text(r: &GateReport) -> String {
    let mut s = String::new();
    for a in &r.attempts {
        let _ = writeln!(s, "{}", attempt_heading(a.method, a.p));
        for e in &a.evidence {
            let _ = writeln!(s, "  {e}");
        }
    }
    match r.witness_prime {
        Some(p) => {
            let _ = writeln!(s, "verdict: {} (p={p})", r.outcome);
        }
        None => {
            let _ = writeln!(s, "verdict: {}", r.outcome);
        }
    }
    s
}

fn gate_report(engine: &ParallelEngine, level: u64, search: SearchArgs) -> Result<GateReport> {
    let start = Instant::now();
    let mut report = verify_with(engine, level, search.degree, SearchOptions { p_max: search.p_max })?;
    report.elapsed_micros = Some(start.elapsed().as_micros() as u64);
    Ok(report)
}

fn verify(engine: &ParallelEngine, level: u64, search: SearchArgs) -> Result<Rendered> {
    let r = gate_report(engine, level, search)?;
    let mut text = format!("verify N={level} d={} p_max={}\n", search.degree, search.p_max);
    text.push_str(&render_gate_text(&r));
    Ok(Rendered {
        text,
        inputs: inputs(&[("N", int(level)), ("d", int(search.degree)), ("p_max", int(search.p_max))]),
        outcome: gate_outcome_json(&r),
        evidence: r.evidence.iter().map(evidence_json).collect(),
        exit: if r.outcome.is_excluded() { EXIT_OK } else { EXIT_INCONCLUSIVE },
    })
}

fn homology(engine: &ParallelEngine, level: u64) -> Result<Rendered> {
    use torsion_core::gate::Engine;
    let space = engine.space(level)?;
    let (psi, rank, dim) = (dedekind_psi(level), space.relation_rank_q(), space.quotient_rank_q());
    let (g, c) = (genus_x0(level), cusp_count_x0(level));
    let text = format!(
        "homology N={level}\n\
         generators (psi): {psi}\n\
         relation rank:    {rank}\n\
         dimension:        {dim}\n\
         genus:            {g}\n\
         cusps:            {c}\n\
         2g+c-1:           {}\n",
        2 * g + c - 1
    );
    let consistent = dim as u64 == 2 * g + c - 1;
    Ok(Rendered {
        text,
        inputs: inputs(&[("N", int(level))]),
        outcome: json!({
            "psi": int(psi),
            "relation_rank": int(rank),
            "dimension": int(dim),
            "genus": int(g),
            "cusps": int(c),
            "matches_2g_plus_c_minus_1": consistent,
        }),
        evidence: vec![],
        exit: EXIT_OK,
    })
}

fn hecke(a: &HeckeArgs) -> Result<Rendered> {
    let level = Level::new(a.level)?;
    let e = level.normalize(0, 1)?;
    let raw = render_translates(&translates_on_level(&level, a.index, e));
    let canonical = action_on_level(&level, a.index, e);
    let text = format!(
        "T_{}(0,1) at N={}\nexpansion: {raw}\ncanonical: {canonical}\n",
        a.index, a.level
    );
    let terms: Vec<Value> = canonical
        .iter()
        .map(|(x, c)| json!({"symbol": x.to_string(), "coefficient": int(c)}))
        .collect();
    Ok(Rendered {
        text,
        inputs: inputs(&[("N", int(a.level)), ("n", int(a.index))]),
        outcome: json!({"expansion": raw, "canonical": canonical.to_string(), "terms": terms}),
        evidence: vec![],
        exit: EXIT_OK,
    })
}

fn join(xs: impl IntoIterator<Item = impl ToString>) -> String {
    let v: Vec<String> = xs.into_iter().map(|x| x.to_string()).collect();
    if v.is_empty() { "none".into() } else { v.join(" ") }
}

fn census(a: &CensusArgs) -> Result<Rendered> {
    let q = PrimePower::from_order(a.q)?;
    if q.p() == 2 || a.q > CENSUS_MAX_Q {
        return Err(torsion_core::Error::CensusGuard { q: a.q, max: CENSUS_MAX_Q }.into());
    }
    let analytic = admissible_traces(q);
    let field = FiniteField::new(q)?;
    let tables = CensusTables::new(&field)?;
    let observed = (0..a.q)
        .into_par_iter()
        .map(|coef| census_slice(&tables, coef))
        .reduce(|| ObservedCensus { q: a.q, ..Default::default() }, ObservedCensus::merge);
    let matched = observed.traces() == analytic.traces;

    let mut text = format!("census q={} (p={}, n={})\n", a.q, q.p(), q.n());
    let _ = writeln!(text, "hasse interval: [{}, {}]", analytic.hasse_lo, analytic.hasse_hi);
    let _ = writeln!(text, "admissible traces: {}", join(&analytic.traces));
    let _ = writeln!(text, "observed traces:   {}", join(observed.traces()));
    let _ = writeln!(text, "curves: {} nonsingular, {} singular", observed.curves, observed.singular);
    let _ = writeln!(text, "{}", if matched { "MATCH" } else { "MISMATCH" });

    let mut outcome = json!({
        "hasse_lo": int(analytic.hasse_lo),
        "hasse_hi": int(analytic.hasse_hi),
        "admissible_traces": analytic.traces.iter().map(int).collect::<Vec<_>>(),
        "observed_traces": observed.traces().iter().map(int).collect::<Vec<_>>(),
        "curves": int(observed.curves),
        "singular": int(observed.singular),
        "verdict": if matched { "MATCH" } else { "MISMATCH" },
    });
    let mut ins = inputs(&[("q", int(a.q))]);
    if let Some(n) = a.level {
        ins.insert("N".into(), int(n));
        let hits = orders_divisible_by(q, n);
        let seen: Vec<u64> = observed.orders().into_iter().filter(|o| o % n == 0).collect();
        if hits.is_empty() {
            let why = if n > analytic.hasse_hi {
                format!(" ({n} > {})", analytic.hasse_hi)
            } else {
                String::new()
            };
            let _ = writeln!(text, "no admissible order divisible by {n}{why}");
        } else {
            let _ = writeln!(text, "admissible orders divisible by {n}: {}", join(&hits));
        }
        let _ = writeln!(text, "observed orders divisible by {n}: {}", join(&seen));
        let obj = outcome.as_object_mut().expect("object");
        obj.insert("orders_divisible_by_N".into(), hits.iter().map(int).collect());
        obj.insert("observed_orders_divisible_by_N".into(), seen.iter().map(int).collect());
    }
    Ok(Rendered {
        text,
        inputs: ins,
        outcome,
        evidence: vec![],
        exit: if matched { EXIT_OK } else { EXIT_INCONCLUSIVE },
    })
}

fn reproduce(engine: &ParallelEngine, search: SearchArgs) -> Result<Rendered> {
    let reports = CASE_LEVELS
        .par_iter()
        .map(|&n| gate_report(engine, n, search))
        .collect::<Result<Vec<_>>>()?;
    let excluded = reports.iter().filter(|r| r.outcome.is_excluded()).count();

    let mut text = format!("reproduce d={} p_max={}\n", search.degree, search.p_max);
    let _ = writeln!(text, "{:>5}  {:<18} {:>3}", "N", "outcome", "p");
    for r in &reports {
        let p = r.witness_prime.map(|p| p.to_string()).unwrap_or_else(|| "-".into());
        let _ = writeln!(text, "{:>5}  {:<18} {:>3}", r.level, r.outcome.as_str(), p);
    }
    let _ = writeln!(text, "{excluded}/{} excluded", reports.len());

    let cases: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "N": int(r.level),
                "outcome": gate_outcome_json(r),
                "evidence": r.evidence.iter().map(evidence_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(Rendered {
        text,
        inputs: inputs(&[("d", int(search.degree)), ("p_max", int(search.p_max))]),
        outcome: json!({"excluded": int(excluded), "total": int(reports.len()), "cases": cases}),
        evidence: vec![],
        exit: if excluded == reports.len() { EXIT_OK } else { EXIT_INCONCLUSIVE },
    })
}
