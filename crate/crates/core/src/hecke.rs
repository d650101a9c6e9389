//! Hecke operators on Manin symbols via Merel's matrix sums.
//!
//! `T_n (u, v) = sum (u, v) [a b; c d]` over integer matrices with
//! `a > b >= 0`, `d > c >= 0`, `ad - bc = n`. A summand whose translate
//! `(u', v')` has `gcd(u', v', N) != 1` is dropped. The sums are valid on
//! the quotient by the Manin relations for `n` coprime to `N`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::maninspace::{write_term, FreeVector, Level, ManinSymbol, SymbolSpace};

/// `[a b; c d]` with `a > b >= 0`, `d > c >= 0`, `ad - bc = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct MerelMatrix {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl MerelMatrix {
    pub fn determinant(&self) -> i128 {
        self.a as i128 * self.d as i128 - self.b as i128 * self.c as i128
    }

    /// The defining inequalities plus `det = n`.
    pub fn is_valid_for(&self, n: u64) -> bool {
        self.a > self.b && self.d > self.c && self.determinant() == n as i128
    }
}

impl fmt::Display for MerelMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}; {} {}]", self.a, self.b, self.c, self.d)
    }
}

/// All Merel matrices of determinant `n`, sorted by `(a, b, c, d)`.
///
/// From `b <= a - 1` and `c <= d - 1` we get `a + d <= n + 1`, so both
/// diagonal entries are at most `n`.
pub fn merel_matrices(n: u64) -> Vec<MerelMatrix> {
    assert!(n >= 1, "Hecke index must be positive");
    let mut out = Vec::new();
    for a in 1..=n {
        for d in 1..=(n + 1 - a) {
            let Some(r) = (a * d).checked_sub(n) else { continue };
            if r == 0 {
                // b = 0 with any c < d, or c = 0 with any b < a
                out.extend((0..d).map(|c| MerelMatrix { a, b: 0, c, d }));
                out.extend((1..a).map(|b| MerelMatrix { a, b, c: 0, d }));
                continue;
            }
            for b in 1..a {
                if r % b == 0 && r / b < d {
                    out.push(MerelMatrix { a, b, c: r / b, d });
                }
            }
        }
    }
    out.sort_unstable();
    debug_assert!(out.iter().all(|m| m.is_valid_for(n)));
    out
}

/// The symbol `(0,1)`, image of the modular symbol `{0, oo}`.
pub fn winding_symbol(space: &SymbolSpace) -> ManinSymbol {
    space.normalize(0, 1).expect("(0,1) lies on P^1(Z/NZ)")
}

/// Translates `(u, v) * m mod N` in Merel order, omitted summands removed,
/// not yet canonicalized.
pub fn hecke_translates(space: &SymbolSpace, n: u64, x: ManinSymbol) -> Vec<(u64, u64)> {
    translates_on_level(space.level_data(), n, x)
}

/// [`hecke_translates`] without building the relation matrix.
pub fn translates_on_level(level: &Level, n: u64, x: ManinSymbol) -> Vec<(u64, u64)> {
    merel_matrices(n)
        .iter()
        .map(|m| {
            let mat = [m.a as i64, m.b as i64, m.c as i64, m.d as i64];
            crate::maninspace::right_act(level, x, &mat)
        })
        .filter(|&(u, v)| level.is_projective(u, v))
        .collect()
}

/// `T_n x` as a free vector of canonical symbols.
///
/// Canonicalization preserves `gcd(u, v, N)`, so dropping summands before
/// or after normalizing gives the same result.
pub fn hecke_action(space: &SymbolSpace, n: u64, x: ManinSymbol) -> FreeVector {
    action_on_level(space.level_data(), n, x)
}

/// [`hecke_action`] without building the relation matrix.
pub fn action_on_level(level: &Level, n: u64, x: ManinSymbol) -> FreeVector {
    let mut out = FreeVector::zero(level.n());
    for (u, v) in translates_on_level(level, n, x) {
        let s = level.normalize_reduced(u, v);
        debug_assert!(level.is_projective(s.u, s.v));
        out.add_term(s, 1);
    }
    out
}

/// Extend `T_n` linearly to a free vector.
pub fn hecke_on_vector(space: &SymbolSpace, n: u64, v: &FreeVector) -> FreeVector {
    let mut out = FreeVector::zero(space.level());
    for (&x, &c) in v.iter() {
        out.add_scaled(&hecke_action(space, n, x), c);
    }
    out
}

/// `T_1 (0,1), ..., T_{2d} (0,1)`.
pub fn criterion_vectors(space: &SymbolSpace, d: u32) -> Vec<FreeVector> {
    let e = winding_symbol(space);
    (1..=2 * d as u64).map(|i| hecke_action(space, i, e)).collect()
}

/// Whether the `2d` criterion vectors are independent in the quotient
/// tensored with `F_p`.
pub fn independence_mod_p(space: &SymbolSpace, d: u32, p: u64) -> Result<bool> {
    Ok(independence_rank_mod_p(space, d, p)? == 2 * d as usize)
}

/// Rank of the criterion vectors' span modulo `p`; rejects `p = 2` and
/// `p | N`.
pub fn independence_rank_mod_p(space: &SymbolSpace, d: u32, p: u64) -> Result<usize> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    if p == 2 {
        return Err(Error::EvenPrime);
    }
    if space.level() % p == 0 {
        return Err(Error::PrimeDividesLevel { p, level: space.level() });
    }
    space.quotient_rank_mod_p(&criterion_vectors(space, d), p)
}

/// Render translates with repeated symbols merged at first occurrence,
/// e.g. `(0,2)+(1,2)+2(0,1)`.
pub fn render_translates(translates: &[(u64, u64)]) -> alloc::string::String {
    let mut merged: Vec<((u64, u64), i64)> = Vec::new();
    for &t in translates {
        match merged.iter_mut().find(|(s, _)| *s == t) {
            Some((_, c)) => *c += 1,
            None => merged.push((t, 1)),
        }
    }
    let mut out = alloc::string::String::new();
    if merged.is_empty() {
        out.push('0');
    }
    for (i, ((u, v), c)) in merged.iter().enumerate() {
        let sym = ManinSymbol::new(*u, *v);
        write_term(&mut out, i == 0, *c, &sym).expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maninspace::build_space;

    #[test]
    fn merel_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| merel_matrices(n).len()).collect();
        assert_eq!(counts, [1, 4, 7, 13, 15, 26]);
        assert_eq!(merel_matrices(1), [MerelMatrix { a: 1, b: 0, c: 0, d: 1 }]);
    }

    /// Independent enumeration over the full box `0 <= b, c < 2n`.
    #[test]
    fn merel_matches_box_search() {
        for n in 1..=12u64 {
            let mut brute = Vec::new();
            for a in 1..=n {
                for d in 1..=n {
                    for b in 0..a {
                        for c in 0..d {
                            if a * d == n + b * c {
                                brute.push(MerelMatrix { a, b, c, d });
                            }
                        }
                    }
                }
            }
            brute.sort();
            assert_eq!(merel_matrices(n), brute, "n = {n}");
        }
    }

    #[test]
    fn h2_and_h3_lists() {
        let m = |a, b, c, d| MerelMatrix { a, b, c, d };
        assert_eq!(merel_matrices(2), [m(1, 0, 0, 2), m(1, 0, 1, 2), m(2, 0, 0, 1), m(2, 1, 0, 1)]);
        let mut h3 = vec![
            m(1, 0, 0, 3),
            m(1, 0, 1, 3),
            m(1, 0, 2, 3),
            m(3, 0, 0, 1),
            m(3, 1, 0, 1),
            m(3, 2, 0, 1),
            m(2, 1, 1, 2),
        ];
        h3.sort();
        assert_eq!(merel_matrices(3), h3);
    }

    #[test]
    fn t2_at_169_and_omission_at_2() {
        let s = build_space(169).unwrap();
        let e = winding_symbol(&s);
        let t2 = hecke_action(&s, 2, e);
        assert_eq!(t2.to_string(), "3(0,1)+(1,2)");
        assert_eq!(render_translates(&hecke_translates(&s, 2, e)), "(0,2)+(1,2)+2(0,1)");
        assert_eq!(hecke_action(&s, 1, e), FreeVector::from_symbol(169, e));

        let s2 = build_space(2).unwrap();
        let e2 = winding_symbol(&s2);
        assert_eq!(render_translates(&hecke_translates(&s2, 2, e2)), "(1,0)+2(0,1)");
        let v = criterion_vectors(&s2, 1);
        assert_eq!(v.len(), 2);
        assert_eq!(v[0].to_string(), "(0,1)");
        assert_eq!(v[1].to_string(), "2(0,1)+(1,0)");
    }

    #[test]
    fn independence_examples() {
        let s169 = build_space(169).unwrap();
        assert!(independence_mod_p(&s169, 3, 5).unwrap());
        assert_eq!(independence_rank_mod_p(&s169, 3, 3).unwrap(), 5);
        let s11 = build_space(11).unwrap();
        assert!(!independence_mod_p(&s11, 3, 3).unwrap());
        assert_eq!(independence_mod_p(&s11, 3, 11), Err(Error::PrimeDividesLevel { p: 11, level: 11 }));
        assert_eq!(independence_mod_p(&s11, 3, 2), Err(Error::EvenPrime));
    }

    #[test]
    fn total_weight_of_t_n() {
        // With no omissions every Merel matrix contributes one summand.
        let s = build_space(169).unwrap();
        let e = winding_symbol(&s);
        for n in 1..=6 {
            assert_eq!(hecke_action(&s, n, e).weight(), merel_matrices(n).len() as i64);
        }
    }
}
