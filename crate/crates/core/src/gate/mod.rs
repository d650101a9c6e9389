//! Verdicts for `(N, d)`: the Hecke criterion at a witness prime, with the
//! reduction argument as a fallback.

mod conditions;
mod evidence;
mod gonality;

use alloc::vec::Vec;
use core::fmt;

pub use conditions::{
    gonality_evidence, hasse_gate, independence_evidence, is_squarefree_composite, prime_admissible,
    t3_divisibility, t4_coprimality,
};
pub use evidence::{ConditionEvidence, Datum};
pub use gonality::{
    gonality_exceeds, gonality_table, CurveFamily, GonalityTable, X0_GENUS_ZERO, X0_GONALITY_AT_MOST_3,
    X0_THREE_GONAL_LISTED, X0_TWO_GONAL, X1_GENUS_ZERO, X1_THREE_GONAL, X1_TWO_GONAL,
};

use crate::error::{Error, Result};
use crate::exactmath::odd_primes_up_to;
use crate::maninspace::SymbolSpace;
use crate::redux::{jacobian_fact, method_a_verdict};

pub const DEFAULT_P_MAX: u64 = 97;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    T3,
    T4,
    MethodA,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::T3 => "T3",
            Method::T4 => "T4",
            Method::MethodA => "methodA",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    ExcludedT3,
    ExcludedT4,
    ExcludedMethodA,
    Inconclusive,
}

impl Outcome {
    pub fn is_excluded(self) -> bool {
        self != Outcome::Inconclusive
    }

    fn from_method(m: Method) -> Self {
        match m {
            Method::T3 => Outcome::ExcludedT3,
            Method::T4 => Outcome::ExcludedT4,
            Method::MethodA => Outcome::ExcludedMethodA,
        }
    }

    pub fn method(self) -> Option<Method> {
        match self {
            Outcome::ExcludedT3 => Some(Method::T3),
            Outcome::ExcludedT4 => Some(Method::T4),
            Outcome::ExcludedMethodA => Some(Method::MethodA),
            Outcome::Inconclusive => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::ExcludedT3 => "excluded-T3",
            Outcome::ExcludedT4 => "excluded-T4",
            Outcome::ExcludedMethodA => "excluded-methodA",
            Outcome::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One route tried at one prime. `method` and `p` are `None` for the
/// gonality gate, which does not depend on `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attempt {
    pub method: Option<Method>,
    pub p: Option<u64>,
    pub passed: bool,
    pub evidence: Vec<ConditionEvidence>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPrime {
    pub p: u64,
    pub method: Method,
    pub evidence: Vec<ConditionEvidence>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateReport {
    pub level: u64,
    pub degree: u32,
    pub outcome: Outcome,
    pub witness_prime: Option<u64>,
    /// For an exclusion, every condition of the witness (all passing).
    /// Otherwise the conditions that blocked each route.
    pub evidence: Vec<ConditionEvidence>,
    /// Every route in search order, up to and including the witness.
    pub attempts: Vec<Attempt>,
    /// Filled in by callers that have a clock.
    pub elapsed_micros: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub p_max: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { p_max: DEFAULT_P_MAX }
    }
}

/// Supplies the symbol space and evaluates independence at several primes.
/// The default evaluates sequentially; a caller may cache spaces or spread
/// primes over threads, as long as results come back in input order.
pub trait Engine {
    fn space(&self, n: u64) -> Result<SymbolSpace> {
        SymbolSpace::build(n)
    }

    fn independence(&self, space: &SymbolSpace, d: u32, primes: &[u64]) -> Vec<ConditionEvidence> {
        primes.iter().map(|&p| independence_evidence(space, d, p)).collect()
    }
}

/// Builds every space from scratch and checks primes one by one.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Engine for Sequential {}

struct Candidate {
    p: u64,
    method: Method,
    arithmetic: Vec<ConditionEvidence>,
}

impl Candidate {
    fn arithmetic_passed(&self) -> bool {
        self.arithmetic.iter().all(|e| e.passed)
    }
}

fn candidates(n: u64, d: u32, p_max: u64) -> Vec<Candidate> {
    let squarefree_composite = is_squarefree_composite(n);
    let mut out = Vec::new();
    for p in odd_primes_up_to(p_max).into_iter().filter(|p| n % p != 0) {
        let hasse = hasse_gate(n, p, d);
        out.push(Candidate {
            p,
            method: Method::T3,
            arithmetic: alloc::vec![prime_admissible(n, p), hasse.clone(), t3_divisibility(n, p, d)],
        });
        if squarefree_composite {
            let t4 = t4_coprimality(n, p, d).expect("checked squarefree composite");
            out.push(Candidate { p, method: Method::T4, arithmetic: alloc::vec![prime_admissible(n, p), hasse, t4] });
        }
    }
    out
}

/// Hecke-criterion search: the least odd prime `p <= p_max`, `p` not
/// dividing `N`, at which T3 (or T4, for squarefree composite `N`) holds
/// in full. Returns the witness, if any, and the routes tried.
pub fn search_witness(engine: &dyn Engine, n: u64, d: u32, p_max: u64) -> Result<(Option<WitnessPrime>, Vec<Attempt>)> {
    let gon = gonality_evidence(CurveFamily::X0, n, d);
    let mut attempts = alloc::vec![Attempt { method: None, p: None, passed: gon.passed, evidence: alloc::vec![gon.clone()] }];
    if !gon.passed {
        return Ok((None, attempts));
    }
    let cands = candidates(n, d, p_max);
    let mut primes: Vec<u64> = cands.iter().filter(|c| c.arithmetic_passed()).map(|c| c.p).collect();
    primes.dedup();
    let indep = if primes.is_empty() {
        Vec::new()
    } else {
        let space = engine.space(n)?;
        engine.independence(&space, d, &primes)
    };
    debug_assert_eq!(indep.len(), primes.len());

    for c in cands {
        let mut evidence = c.arithmetic.clone();
        if c.arithmetic_passed() {
            let i = primes.binary_search(&c.p).expect("prime with passing arithmetic was evaluated");
            evidence.push(indep[i].clone());
        }
        let passed = evidence.iter().all(|e| e.passed);
        attempts.push(Attempt { method: Some(c.method), p: Some(c.p), passed, evidence: evidence.clone() });
        if passed {
            let mut full = alloc::vec![gon];
            full.extend(evidence);
            return Ok((Some(WitnessPrime { p: c.p, method: c.method, evidence: full }), attempts));
        }
    }
    Ok((None, attempts))
}

/// [`search_witness`] with the sequential engine, witness only.
pub fn find_witness_prime(n: u64, d: u32, p_max: u64) -> Option<WitnessPrime> {
    if n == 0 || d == 0 {
        return None;
    }
    search_witness(&Sequential, n, d, p_max).ok().and_then(|(w, _)| w)
}

/// Full verdict with the sequential engine.
pub fn verify_cyclic_exclusion(n: u64, d: u32, options: SearchOptions) -> Result<GateReport> {
    verify_with(&Sequential, n, d, options)
}

pub fn verify_with(engine: &dyn Engine, n: u64, d: u32, options: SearchOptions) -> Result<GateReport> {
    if n == 0 {
        return Err(Error::InvalidLevel(n));
    }
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let (witness, mut attempts) = search_witness(engine, n, d, options.p_max)?;
    let mut report = GateReport {
        level: n,
        degree: d,
        outcome: Outcome::Inconclusive,
        witness_prime: None,
        evidence: Vec::new(),
        attempts: Vec::new(),
        elapsed_micros: None,
    };
    if let Some(w) = witness {
        report.outcome = Outcome::from_method(w.method);
        report.witness_prime = Some(w.p);
        report.evidence = w.evidence;
        report.attempts = attempts;
        return Ok(report);
    }

    // Blocking conditions of the Hecke route: the gonality gate if it
    // failed, else the first failing condition at each candidate.
    let mut blocked: Vec<ConditionEvidence> = Vec::new();
    for a in &attempts {
        if let Some(e) = a.evidence.iter().find(|e| !e.passed) {
            if !blocked.contains(e) {
                blocked.push(e.clone());
            }
        }
    }

    if jacobian_fact(n).is_none() {
        let v = method_a_verdict(n, d, 3);
        let finite = v.evidence.into_iter().find(|e| e.name == "jacobian_finite").expect("always recorded");
        attempts.push(Attempt { method: Some(Method::MethodA), p: None, passed: false, evidence: alloc::vec![finite.clone()] });
        blocked.push(finite);
    } else {
        for p in odd_primes_up_to(options.p_max).into_iter().filter(|p| n % p != 0) {
            let v = method_a_verdict(n, d, p);
            attempts.push(Attempt { method: Some(Method::MethodA), p: Some(p), passed: v.passed, evidence: v.evidence.clone() });
            if v.passed {
                report.outcome = Outcome::ExcludedMethodA;
                report.witness_prime = Some(p);
                report.evidence = v.evidence;
                report.attempts = attempts;
                return Ok(report);
            }
            if let Some(e) = v.evidence.iter().find(|e| !e.passed) {
                if !blocked.contains(e) {
                    blocked.push(e.clone());
                }
            }
        }
    }
    report.evidence = blocked;
    report.attempts = attempts;
    Ok(report)
}
