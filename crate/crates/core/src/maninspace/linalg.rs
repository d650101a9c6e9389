//! Exact ranks of integer matrices over `Q` and over `F_p`.
//!
//! Rows are sparse: `(column, coefficient)` pairs with distinct columns.
//! The relation matrices here have two or three nonzeros per row, so the
//! `Q` path keeps rows sparse and fraction-free, dividing each row by the
//! gcd of its entries after every elimination step. Dense Bareiss
//! elimination is kept alongside for small matrices and cross-checks.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type SparseRow = Vec<(usize, i64)>;

/// Incremental row echelon form over `F_p`.
///
/// Each stored row has its leading entry scaled to 1 and is indexed by that
/// leading column, so reducing a new row is a single left-to-right sweep.
#[derive(Debug, Clone)]
pub struct EchelonModP {
    p: u64,
    ncols: usize,
    pivots: BTreeMap<usize, Vec<u64>>,
}

impl EchelonModP {
    pub fn new(ncols: usize, p: u64) -> Self {
        assert!((2..1 << 31).contains(&p), "modulus out of range");
        EchelonModP { p, ncols, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Insert a row; returns true when it increased the rank.
    pub fn insert(&mut self, row: &[(usize, i64)]) -> bool {
        let p = self.p;
        let mut dense = vec![0u64; self.ncols];
        for &(c, x) in row {
            dense[c] = (dense[c] + x.rem_euclid(p as i64) as u64) % p;
        }
        for c in 0..self.ncols {
            let lead = dense[c];
            if lead == 0 {
                continue;
            }
            match self.pivots.get(&c) {
                Some(pivot) => {
                    for (d, &pv) in dense[c..].iter_mut().zip(&pivot[c..]) {
                        *d = (*d + p - lead * pv % p) % p;
                    }
                }
                None => {
                    let inv = pow_mod(lead, p - 2, p);
                    for d in dense[c..].iter_mut() {
                        *d = *d * inv % p;
                    }
                    self.pivots.insert(c, dense);
                    return true;
                }
            }
        }
        false
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Rank over `F_p` (`p` prime).
pub fn rank_mod_p(rows: &[SparseRow], ncols: usize, p: u64) -> usize {
    let mut ech = EchelonModP::new(ncols, p);
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

type BigRow = Vec<(usize, BigInt)>;

/// Incremental fraction-free echelon form over `Q`, rows kept primitive.
#[derive(Debug, Clone, Default)]
pub struct EchelonQ {
    pivots: BTreeMap<usize, BigRow>,
}

impl EchelonQ {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Insert a row; returns true when it increased the rank.
    pub fn insert(&mut self, row: &[(usize, i64)]) -> bool {
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for &(c, x) in row {
            *acc.entry(c).or_insert_with(BigInt::zero) += x;
        }
        let mut cur: BigRow = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        while let Some((lead_col, lead)) = cur.first().cloned() {
            match self.pivots.get(&lead_col) {
                Some(pivot) => {
                    // cur <- pivot_lead * cur - lead * pivot, then strip content
                    let scale = pivot[0].1.clone();
                    cur = combine(&cur, &scale, pivot, &lead);
                    make_primitive(&mut cur);
                }
                None => {
                    make_primitive(&mut cur);
                    self.pivots.insert(lead_col, cur);
                    return true;
                }
            }
        }
        false
    }
}

/// `a * x - b * y` for sparse rows sorted by column.
fn combine(x: &BigRow, a: &BigInt, y: &BigRow, b: &BigInt) -> BigRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (col, val) = match (x.get(i), y.get(j)) {
            (Some((cx, vx)), Some((cy, _))) if cx < cy => {
                i += 1;
                (*cx, a * vx)
            }
            (Some((cx, _)), Some((cy, vy))) if cy < cx => {
                j += 1;
                (*cy, -(b * vy))
            }
            (Some((cx, vx)), Some((_, vy))) => {
                i += 1;
                j += 1;
                (*cx, a * vx - b * vy)
            }
            (Some((cx, vx)), None) => {
                i += 1;
                (*cx, a * vx)
            }
            (None, Some((cy, vy))) => {
                j += 1;
                (*cy, -(b * vy))
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    out
}

fn make_primitive(row: &mut BigRow) {
    let mut g = BigInt::zero();
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if row.first().is_some_and(|(_, x)| x.is_negative()) {
        g = -g;
    }
    if !g.is_zero() && g != BigInt::one() {
        for (_, x) in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Rank over `Q` via sparse fraction-free elimination.
pub fn rank_q(rows: &[SparseRow]) -> usize {
    let mut ech = EchelonQ::new();
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// Rank over `Q` of a dense integer matrix by Bareiss elimination.
/// Every intermediate entry is a minor of the input, so all divisions
/// are exact.
pub fn rank_bareiss(matrix: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = if v.is_zero() { v } else { v / &prev };
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Densify sparse rows for [`rank_bareiss`].
pub fn to_dense(rows: &[SparseRow], ncols: usize) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            let mut d = vec![BigInt::zero(); ncols];
            for &(c, x) in r {
                d[c] += x;
            }
            d
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense_to_sparse(m: &[Vec<i64>]) -> Vec<SparseRow> {
        m.iter()
            .map(|r| r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(c, &x)| (c, x)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        let s = dense_to_sparse(&m);
        assert_eq!(rank_q(&s), 2);
        assert_eq!(rank_bareiss(&to_dense(&s, 3)), 2);
        // det = 6 over Z: full rank over Q and F_5, rank drop mod 2 and 3.
        let m = vec![vec![2, 0], vec![0, 3]];
        let s = dense_to_sparse(&m);
        assert_eq!(rank_q(&s), 2);
        assert_eq!(rank_mod_p(&s, 2, 5), 2);
        assert_eq!(rank_mod_p(&s, 2, 3), 1);
        assert_eq!(rank_mod_p(&s, 2, 2), 1);
        assert_eq!(rank_q(&[]), 0);
        assert_eq!(rank_bareiss(&[]), 0);
    }

    #[test]
    fn duplicate_columns_in_a_row_accumulate() {
        let rows = vec![vec![(0, 1), (0, 1)], vec![(0, 2)]];
        assert_eq!(rank_q(&rows), 1);
        assert_eq!(rank_mod_p(&rows, 1, 3), 1);
        assert_eq!(rank_mod_p(&[vec![(0, 1), (0, 1)]], 1, 2), 0);
    }

    /// Gaussian elimination over exact rationals as a third route.
    fn rank_rational(m: &[Vec<i64>]) -> usize {
        use num_rational::BigRational;
        let mut a: Vec<Vec<BigRational>> = m
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let (nr, nc) = (a.len(), a.first().map_or(0, Vec::len));
        let mut rank = 0;
        for c in 0..nc {
            let Some(p) = (rank..nr).find(|&r| !a[r][c].is_zero()) else { continue };
            a.swap(rank, p);
            for r in 0..nr {
                if r != rank && !a[r][c].is_zero() {
                    let f = &a[r][c] / &a[rank][c];
                    for j in 0..nc {
                        let t = &f * &a[rank][j];
                        a[r][j] -= t;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn q_rank_routes_agree(m in prop::collection::vec(prop::collection::vec(-3i64..=3, 6), 0..9)) {
            let s = dense_to_sparse(&m);
            let sparse = rank_q(&s);
            prop_assert_eq!(sparse, rank_bareiss(&to_dense(&s, 6)));
            prop_assert_eq!(sparse, rank_rational(&m));
        }

        #[test]
        fn mod_p_rank_never_exceeds_q_rank(m in prop::collection::vec(prop::collection::vec(-4i64..=4, 5), 0..8), pi in 0usize..3) {
            let p = [2u64, 3, 5][pi];
            let s = dense_to_sparse(&m);
            prop_assert!(rank_mod_p(&s, 5, p) <= rank_q(&s));
        }
    }
}
