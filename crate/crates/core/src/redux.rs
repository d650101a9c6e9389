//! Reduction-mod-`p` exclusions.
//!
//! If `J_1(N)(Q)` is finite and `X_1(N)` has gonality above `d`, a point of
//! order `N` over a degree-`d` field forces good reduction at primes over
//! `p` (additive reduction is ruled out by a divisibility check). The
//! reduced curve then lives over some `F_{p^i}`, `i <= d`, so `N` must
//! divide an admissible group order there. This module decides that last
//! step exactly, from the Hasse interval and the classification of
//! Frobenius traces, and ships a brute-force point counter to check the
//! classification on small fields.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactmath::{isqrt, FiniteField, PrimePower};
use crate::gate::{gonality_evidence, prime_admissible, ConditionEvidence, CurveFamily};

/// Hasse interval and admissible traces of elliptic curves over `F_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceCensus {
    pub order: PrimePower,
    pub hasse_lo: u64,
    pub hasse_hi: u64,
    pub traces: BTreeSet<i64>,
}

impl TraceCensus {
    /// Group orders `q + 1 - t`.
    pub fn orders(&self) -> BTreeSet<u64> {
        let q1 = self.order.q() as i64 + 1;
        self.traces.iter().map(|t| (q1 - t) as u64).collect()
    }
}

/// Which clause of the isogeny-class classification admits `t` over `F_q`,
/// numbered 1 to 5; `None` if `t` is not the trace of any curve.
///
/// 1. `gcd(t, p) = 1`;
/// 2. `n` even, `t = +-2 p^{n/2}`;
/// 3. `n` even, `p != 1 mod 3`, `t = +-p^{n/2}`;
/// 4. `n` odd, `p` in `{2, 3}`, `t = +-p^{(n+1)/2}`;
/// 5. `t = 0` when `n` is odd or `p != 1 mod 4`.
pub fn trace_clause(q: PrimePower, t: i64) -> Option<u8> {
    let (p, n) = (q.p() as i64, q.n());
    let t_sq = (t as i128) * (t as i128);
    if t_sq > 4 * q.q() as i128 {
        return None;
    }
    let even = n % 2 == 0;
    let abs = t.unsigned_abs() as i64;
    if t % p != 0 {
        return Some(1);
    }
    if even && abs == 2 * p.pow(n / 2) {
        return Some(2);
    }
    if even && p % 3 != 1 && abs == p.pow(n / 2) {
        return Some(3);
    }
    if !even && (p == 2 || p == 3) && abs == p.pow(n.div_ceil(2)) {
        return Some(4);
    }
    if t == 0 && (!even || p % 4 != 1) {
        return Some(5);
    }
    None
}

/// Admissible traces over `F_q` and the Hasse interval.
pub fn admissible_traces(q: PrimePower) -> TraceCensus {
    // floor(2 sqrt q), exact
    let t_max = isqrt(4 * q.q()) as i64;
    let traces = (-t_max..=t_max).filter(|&t| trace_clause(q, t).is_some()).collect();
    TraceCensus {
        order: q,
        hasse_lo: q.q() + 1 - t_max as u64,
        hasse_hi: q.q() + 1 + t_max as u64,
        traces,
    }
}

/// Admissible group orders over `F_q` divisible by `N`.
pub fn orders_divisible_by(q: PrimePower, n: u64) -> BTreeSet<u64> {
    admissible_traces(q).orders().into_iter().filter(|o| o % n == 0).collect()
}

/// Additive reduction is impossible: `N` divides no `p^i * c` with
/// `1 <= i <= d`, `1 <= c <= 4` (`|G_a(k)| = p^i`, component group of
/// order at most four).
pub fn additive_excluded(n: u64, p: u64, d: u32) -> ConditionEvidence {
    let mut ev = ConditionEvidence::new("additive_excluded", true).with("N", n).with("p", p).with("d", d);
    'outer: for i in 1..=d {
        let pi = p.checked_pow(i).map(u128::from);
        for c in 1..=4u128 {
            let hit = match pi {
                Some(pi) => (pi * c) % n as u128 == 0,
                // p^i overflowed u64; N | p^i c iff N | gcd, use the
                // prime-by-prime test instead
                None => divides_prime_power_times(n, p, i, c as u64),
            };
            if hit {
                ev.passed = false;
                ev = ev.with("i", i).with("c", c as u64).noted(format!("{n} | {p}^{i}*{c}"));
                break 'outer;
            }
        }
    }
    ev
}

fn divides_prime_power_times(n: u64, p: u64, i: u32, c: u64) -> bool {
    let mut m = n;
    let mut k = 0;
    while m % p == 0 && k < i {
        m /= p;
        k += 1;
    }
    c % m == 0
}

/// A cited fact: `J_1(N)(Q)` is finite, with the dimensions of the simple
/// factors of the decomposition used to establish it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JacobianFiniteFact {
    pub level: u64,
    pub dimensions: &'static [u64],
    pub citation: &'static str,
}

impl JacobianFiniteFact {
    pub fn total_dimension(&self) -> u64 {
        self.dimensions.iter().sum()
    }
}

pub const JACOBIAN_FINITE_FACTS: &[JacobianFiniteFact] = &[
    JacobianFiniteFact {
        level: 49,
        dimensions: &[1, 48, 6, 12, 2],
        citation: "J1(49) decomposition, all L(A_i,1) != 0",
    },
    JacobianFiniteFact {
        level: 25,
        dimensions: &[8, 4],
        citation: "J1(25) decomposition, all L(A_i,1) != 0",
    },
    JacobianFiniteFact {
        level: 55,
        dimensions: &[1, 2, 1, 1, 4, 32, 8, 8, 16, 4, 4],
        citation: "J1(55) decomposition, all L(A_i,1) != 0",
    },
    JacobianFiniteFact {
        level: 40,
        dimensions: &[1, 1, 1, 4, 2, 2, 8, 2, 4],
        citation: "J1(40) decomposition, all L(A_i,1) != 0",
    },
    JacobianFiniteFact {
        level: 22,
        dimensions: &[1, 1, 4],
        citation: "J1(22) decomposition, all L(A_i,1) != 0",
    },
];

pub fn jacobian_fact(n: u64) -> Option<&'static JacobianFiniteFact> {
    JACOBIAN_FINITE_FACTS.iter().find(|f| f.level == n)
}

/// Result of the reduction argument at one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodAVerdict {
    pub level: u64,
    pub degree: u32,
    pub p: u64,
    pub passed: bool,
    pub evidence: Vec<ConditionEvidence>,
}

/// Passes iff `J_1(N)(Q)` is known finite, `X_1(N)` has gonality above
/// `d`, additive reduction is excluded, and no admissible order over any
/// `F_{p^i}` (`1 <= i <= d`) is divisible by `N`.
pub fn method_a_verdict(n: u64, d: u32, p: u64) -> MethodAVerdict {
    let mut evidence = Vec::new();
    evidence.push(prime_admissible(n, p));

    let fact = jacobian_fact(n);
    let mut finite = ConditionEvidence::new("jacobian_finite", fact.is_some()).with("N", n);
    finite = match fact {
        Some(f) => finite.with("total_dimension", f.total_dimension()).noted(f.citation),
        None => finite.noted("no finiteness fact on record for J1(N)(Q)"),
    };
    evidence.push(finite);
    evidence.push(gonality_evidence(CurveFamily::X1, n, d));

    if evidence[0].passed {
        evidence.push(additive_excluded(n, p, d));
        for i in 1..=d {
            let ev = match PrimePower::new(p, i) {
                Ok(q) => {
                    let census = admissible_traces(q);
                    let hits = orders_divisible_by(q, n);
                    let mut ev = ConditionEvidence::new("no_order_divisible", hits.is_empty())
                        .with("q", q.q())
                        .with("N", n)
                        .with("hasse_lo", census.hasse_lo)
                        .with("hasse_hi", census.hasse_hi);
                    if let Some(&o) = hits.iter().next() {
                        ev = ev.with("order", o).with("trace", q.q() as i64 + 1 - o as i64);
                    } else {
                        let blocked: Vec<_> = (census.hasse_lo.div_ceil(n)..=census.hasse_hi / n)
                            .map(|m| q.q() as i64 + 1 - (m * n) as i64)
                            .collect();
                        ev = ev.noted(if blocked.is_empty() {
                            format!("no multiple of {n} in [hasse_lo, hasse_hi]")
                        } else {
                            format!("traces {blocked:?} not admissible")
                        });
                    }
                    ev
                }
                Err(e) => ConditionEvidence::new("no_order_divisible", false).noted(format!("{e}")),
            };
            evidence.push(ev);
        }
    }
    let passed = evidence.iter().all(|e| e.passed);
    MethodAVerdict { level: n, degree: d, p, passed, evidence }
}

/// Largest field the brute-force census accepts.
pub const CENSUS_MAX_Q: u64 = 343;

/// Addition, multiplication and quadratic-character tables for a small
/// field, indexed by [`FiniteField::index_of`].
#[derive(Debug, Clone)]
pub struct CensusTables {
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    chi: Vec<i8>,
    four: u16,
    eighteen: u16,
    twenty_seven: u16,
}

impl CensusTables {
    pub fn new(field: &FiniteField) -> Result<Self> {
        let q = field.q();
        if field.characteristic() == 2 || q > CENSUS_MAX_Q {
            return Err(Error::CensusGuard { q, max: CENSUS_MAX_Q });
        }
        let elems: Vec<_> = field.elements().collect();
        let qu = q as usize;
        let mut add = alloc::vec![0u16; qu * qu];
        let mut mul = alloc::vec![0u16; qu * qu];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * qu + j] = field.index_of(&field.add(a, b)) as u16;
                mul[i * qu + j] = field.index_of(&field.mul(a, b)) as u16;
            }
        }
        let chi = elems.iter().map(|a| field.quadratic_character(a)).collect();
        let idx = |c: i64| field.index_of(&field.from_int(c)) as u16;
        Ok(CensusTables {
            q: qu,
            add,
            mul,
            chi,
            four: idx(4),
            eighteen: idx(18),
            twenty_seven: idx(27),
        })
    }

    pub fn q(&self) -> u64 {
        self.q as u64
    }

    fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q + b as usize]
    }

    fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q + b as usize]
    }

    fn neg(&self, a: u16) -> u16 {
        (0..self.q as u16).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    /// Discriminant of `x^3 + a x^2 + b x + c`:
    /// `a^2 b^2 - 4 b^3 - 4 a^3 c - 27 c^2 + 18 abc`.
    fn discriminant(&self, a: u16, b: u16, c: u16) -> u16 {
        let a2 = self.mul(a, a);
        let b2 = self.mul(b, b);
        let pos = self.add(
            self.mul(a2, b2),
            self.mul(self.eighteen, self.mul(self.mul(a, b), c)),
        );
        let neg = self.add(
            self.add(
                self.mul(self.four, self.mul(b2, b)),
                self.mul(self.four, self.mul(self.mul(a2, a), c)),
            ),
            self.mul(self.twenty_seven, self.mul(c, c)),
        );
        self.add(pos, self.neg(neg))
    }
}

/// Traces and orders observed by exhaustive point counting.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ObservedCensus {
    pub q: u64,
    /// Nonsingular curves counted.
    pub curves: u64,
    pub singular: u64,
    /// Number of curves `y^2 = x^3 + ax^2 + bx + c` with each trace.
    pub trace_counts: BTreeMap<i64, u64>,
}

impl ObservedCensus {
    pub fn traces(&self) -> BTreeSet<i64> {
        self.trace_counts.keys().copied().collect()
    }

    pub fn orders(&self) -> BTreeSet<u64> {
        self.trace_counts.keys().map(|t| (self.q as i64 + 1 - t) as u64).collect()
    }

    pub fn merge(mut self, other: ObservedCensus) -> ObservedCensus {
        debug_assert!(self.q == other.q || self.curves + self.singular == 0);
        self.q = other.q.max(self.q);
        self.curves += other.curves;
        self.singular += other.singular;
        for (t, c) in other.trace_counts {
            *self.trace_counts.entry(t).or_insert(0) += c;
        }
        self
    }
}

/// Count all curves with leading coefficient index `a`; the full census
/// is the merge over every `a` in `0..q`.
pub fn census_slice(tables: &CensusTables, a: u64) -> ObservedCensus {
    let q = tables.q;
    let a = a as u16;
    let mut out = ObservedCensus { q: q as u64, ..Default::default() };
    let xs: Vec<u16> = (0..q as u16).collect();
    let x2: Vec<u16> = xs.iter().map(|&x| tables.mul(x, x)).collect();
    let x3: Vec<u16> = xs.iter().zip(&x2).map(|(&x, &s)| tables.mul(x, s)).collect();
    let mut g = alloc::vec![0u16; q];
    for b in 0..q as u16 {
        for (x, gx) in g.iter_mut().enumerate() {
            let ax2 = tables.mul(a, x2[x]);
            let bx = tables.mul(b, xs[x]);
            *gx = tables.add(tables.add(x3[x], ax2), bx);
        }
        for c in 0..q as u16 {
            if tables.discriminant(a, b, c) == 0 {
                out.singular += 1;
                continue;
            }
            let chi_sum: i64 = g.iter().map(|&gx| tables.chi[tables.add(gx, c) as usize] as i64).sum();
            // #E = q + 1 + sum chi(f(x)), trace t = q + 1 - #E
            out.curves += 1;
            *out.trace_counts.entry(-chi_sum).or_insert(0) += 1;
        }
    }
    out
}

/// Exhaustive census over `F_q` (odd `q <= 343`) using the default modulus.
pub fn brute_force_census(q: PrimePower) -> Result<ObservedCensus> {
    if q.p() == 2 || q.q() > CENSUS_MAX_Q {
        return Err(Error::CensusGuard { q: q.q(), max: CENSUS_MAX_Q });
    }
    let field = FiniteField::new(q)?;
    let tables = CensusTables::new(&field)?;
    Ok((0..q.q()).map(|a| census_slice(&tables, a)).fold(
        ObservedCensus { q: q.q(), ..Default::default() },
        ObservedCensus::merge,
    ))
}
