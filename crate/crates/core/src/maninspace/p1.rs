//! Canonical representatives for the projective line `P^1(Z/NZ)`.
//!
//! The representative of `[u : v]` is the lexicographically least pair
//! `(lambda*u mod N, lambda*v mod N)` over units `lambda`. Its first entry
//! is always `gcd(u, N)` (or `0` when `u = 0 mod N`), since the unit orbit
//! of `u` is exactly the set of residues sharing that gcd with `N`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{divisors, gcd};

/// Largest level accepted. Keeps every intermediate of the right action
/// inside `i128`/`u64` with room to spare.
pub const MAX_LEVEL: u64 = 1 << 31;

/// A canonical point `(u, v)` of `P^1(Z/NZ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ManinSymbol {
    pub u: u64,
    pub v: u64,
}

impl ManinSymbol {
    pub const fn new(u: u64, v: u64) -> Self {
        ManinSymbol { u, v }
    }
}

impl fmt::Display for ManinSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// Level `N` together with its unit group, the data needed to normalize.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    n: u64,
    units: Vec<u64>,
}

impl Level {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 || n > MAX_LEVEL {
            return Err(Error::InvalidLevel(n));
        }
        let units = if n == 1 {
            alloc::vec![0]
        } else {
            (1..n).filter(|&l| gcd(l, n) == 1).collect()
        };
        Ok(Level { n, units })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Reduce a signed integer into `[0, N)`.
    pub fn reduce(&self, x: i128) -> u64 {
        x.rem_euclid(self.n as i128) as u64
    }

    /// `gcd(u, v, N) == 1` for residues already reduced mod `N`.
    pub fn is_projective(&self, u: u64, v: u64) -> bool {
        gcd(gcd(u, v), self.n) == 1
    }

    /// Canonical representative of `[u : v]`.
    pub fn normalize(&self, u: i64, v: i64) -> Result<ManinSymbol> {
        let (ru, rv) = (self.reduce(u as i128), self.reduce(v as i128));
        if !self.is_projective(ru, rv) {
            return Err(Error::NotInProjectiveLine { level: self.n, u, v });
        }
        Ok(self.normalize_reduced(ru, rv))
    }

    /// Canonical representative of residues `u, v` known to satisfy
    /// `gcd(u, v, N) = 1`.
    pub(crate) fn normalize_reduced(&self, u: u64, v: u64) -> ManinSymbol {
        let n = self.n;
        if n == 1 {
            return ManinSymbol::new(0, 0);
        }
        let target = if u == 0 { 0 } else { gcd(u, n) };
        let v_min = self
            .units
            .iter()
            .filter(|&&l| l * u % n == target)
            .map(|&l| l * v % n)
            .min()
            .expect("some unit maps u to gcd(u, N)");
        ManinSymbol::new(target, v_min)
    }

    /// All canonical symbols, ascending. Length `psi(N)`.
    pub fn enumerate(&self) -> Vec<ManinSymbol> {
        let n = self.n;
        if n == 1 {
            return alloc::vec![ManinSymbol::new(0, 0)];
        }
        let mut out = BTreeSet::new();
        for g in divisors(n) {
            let u = if g == n { 0 } else { g };
            for v in 0..n {
                if self.is_projective(u, v) {
                    out.insert(self.normalize_reduced(u, v));
                }
            }
        }
        out.into_iter().collect()
    }
}

/// Canonical representative of `[u : v]` in `P^1(Z/NZ)`.
pub fn p1_normalize(level: u64, u: i64, v: i64) -> Result<ManinSymbol> {
    Level::new(level)?.normalize(u, v)
}

/// One canonical symbol per point of `P^1(Z/NZ)`, ascending.
pub fn p1_list(level: u64) -> Result<Vec<ManinSymbol>> {
    Ok(Level::new(level)?.enumerate())
}
