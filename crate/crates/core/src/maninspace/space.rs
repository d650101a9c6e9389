use alloc::vec::Vec;

use super::linalg::{EchelonModP, EchelonQ, SparseRow};
use super::p1::{Level, ManinSymbol};
use super::vector::FreeVector;
use crate::error::{Error, Result};
use crate::exactmath::{dedekind_psi, is_prime};

/// Integer 2x2 matrix `[a b; c d]` acting on the right of row vectors.
pub type Matrix2 = [i64; 4];

pub const SIGMA: Matrix2 = [0, -1, 1, 0];
pub const TAU: Matrix2 = [0, -1, 1, -1];

/// `(u, v) * [a b; c d] = (ua + vc, ub + vd)`, reduced mod `N`.
pub fn right_act(level: &Level, x: ManinSymbol, m: &Matrix2) -> (u64, u64) {
    let (u, v) = (x.u as i128, x.v as i128);
    let [a, b, c, d] = m.map(i128::from);
    (level.reduce(u * a + v * c), level.reduce(u * b + v * d))
}

/// Manin-symbol presentation of `H_1(X_0(N), cusps; Z)`: the free module
/// on `P^1(Z/NZ)` modulo the rows `x + x sigma` and `x + x tau + x tau^2`.
#[derive(Debug, Clone)]
pub struct SymbolSpace {
    level: Level,
    gens: Vec<ManinSymbol>,
    relations: Vec<SparseRow>,
    relation_rank_q: usize,
}

impl SymbolSpace {
    /// Build the space at level `N`, computing the relation rank over `Q`.
    pub fn build(n: u64) -> Result<Self> {
        let level = Level::new(n)?;
        let gens = level.enumerate();
        let relations = relation_rows(&level, &gens);
        let relation_rank_q = rank_of(&relations);
        Ok(SymbolSpace { level, gens, relations, relation_rank_q })
    }

    /// Reassemble a space from stored relation rows and rank. The generator
    /// list is recomputed and must have `psi(N)` entries; row indices are
    /// checked against it.
    pub fn from_parts(
        n: u64,
        generator_count: usize,
        relations: Vec<SparseRow>,
        relation_rank_q: usize,
    ) -> Result<Self> {
        let level = Level::new(n)?;
        if generator_count as u64 != dedekind_psi(n) {
            return Err(Error::InvalidLevel(n));
        }
        let gens = level.enumerate();
        debug_assert_eq!(gens.len(), generator_count);
        let in_range = relations.iter().flatten().all(|&(c, _)| c < gens.len());
        if !in_range || relation_rank_q > gens.len() {
            return Err(Error::InvalidLevel(n));
        }
        Ok(SymbolSpace { level, gens, relations, relation_rank_q })
    }

    pub fn level(&self) -> u64 {
        self.level.n()
    }

    pub(crate) fn level_data(&self) -> &Level {
        &self.level
    }

    pub fn generators(&self) -> &[ManinSymbol] {
        &self.gens
    }

    pub fn relations(&self) -> &[SparseRow] {
        &self.relations
    }

    pub fn index_of(&self, x: &ManinSymbol) -> Option<usize> {
        self.gens.binary_search(x).ok()
    }

    pub fn normalize(&self, u: i64, v: i64) -> Result<ManinSymbol> {
        self.level.normalize(u, v)
    }

    /// Rank of the relation matrix over `Q`.
    pub fn relation_rank_q(&self) -> usize {
        self.relation_rank_q
    }

    /// Dimension of the quotient over `Q`.
    pub fn quotient_rank_q(&self) -> usize {
        self.gens.len() - self.relation_rank_q
    }

    /// Coordinates of a free vector in generator order.
    pub fn row_of(&self, v: &FreeVector) -> Result<SparseRow> {
        if v.level() != self.level() {
            return Err(Error::LevelMismatch { expected: self.level(), found: v.level() });
        }
        v.iter()
            .map(|(x, &c)| {
                let idx = self.index_of(x).ok_or(Error::NotInProjectiveLine {
                    level: self.level(),
                    u: x.u as i64,
                    v: x.v as i64,
                })?;
                Ok((idx, c))
            })
            .collect()
    }

    /// Dimension of the span of the images of `vectors` in the quotient
    /// tensored with `F_p`: `rank_p([R; V]) - rank_p(R)`.
    pub fn quotient_rank_mod_p(&self, vectors: &[FreeVector], p: u64) -> Result<usize> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let rows = vectors.iter().map(|v| self.row_of(v)).collect::<Result<Vec<_>>>()?;
        let mut ech = EchelonModP::new(self.gens.len(), p);
        for r in &self.relations {
            ech.insert(r);
        }
        Ok(rows.iter().filter(|r| ech.insert(r)).count())
    }

    /// Dimension of the span of the images of `vectors` in the quotient
    /// tensored with `Q`.
    pub fn quotient_rank_q_of(&self, vectors: &[FreeVector]) -> Result<usize> {
        let rows = vectors.iter().map(|v| self.row_of(v)).collect::<Result<Vec<_>>>()?;
        let mut ech = EchelonQ::new();
        for r in &self.relations {
            ech.insert(r);
        }
        Ok(rows.iter().filter(|r| ech.insert(r)).count())
    }
}

fn rank_of(rows: &[SparseRow]) -> usize {
    super::linalg::rank_q(rows)
}

/// One sigma row and one tau row per generator, duplicates included.
fn relation_rows(level: &Level, gens: &[ManinSymbol]) -> Vec<SparseRow> {
    let index = |u: u64, v: u64| {
        let s = level.normalize_reduced(u, v);
        gens.binary_search(&s).expect("translate of a generator is a generator")
    };
    let mut rows = Vec::with_capacity(2 * gens.len());
    for (i, &x) in gens.iter().enumerate() {
        let (su, sv) = right_act(level, x, &SIGMA);
        rows.push(merge(&[i, index(su, sv)]));

        let (tu, tv) = right_act(level, x, &TAU);
        let xt = level.normalize_reduced(tu, tv);
        let (ttu, ttv) = right_act(level, xt, &TAU);
        rows.push(merge(&[i, index(tu, tv), index(ttu, ttv)]));
    }
    rows
}

fn merge(indices: &[usize]) -> SparseRow {
    let mut row: SparseRow = Vec::with_capacity(indices.len());
    for &i in indices {
        match row.iter_mut().find(|(c, _)| *c == i) {
            Some((_, x)) => *x += 1,
            None => row.push((i, 1)),
        }
    }
    row.sort_unstable();
    row
}

/// Build the Manin-symbol space at level `N`.
pub fn build_space(n: u64) -> Result<SymbolSpace> {
    SymbolSpace::build(n)
}
