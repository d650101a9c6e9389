//! Levels of low gonality for `X_0(N)` and `X_1(N)`, with the genus each
//! source lists for them.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveFamily {
    X0,
    X1,
}

impl core::fmt::Display for CurveFamily {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CurveFamily::X0 => write!(f, "X0"),
            CurveFamily::X1 => write!(f, "X1"),
        }
    }
}

/// `(level, genus)` pairs.
pub type GonalityTable = &'static [(u64, u32)];

macro_rules! table {
    ($($g:literal: [$($n:literal),*]),* $(,)?) => { &[$($(($n, $g)),*),*] };
}

/// `X_0(N)` of genus 0 (gonality 1).
pub const X0_GENUS_ZERO: GonalityTable = table![0: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25]];

/// `X_0(N)` that are 2-gonal (Ogg).
pub const X0_TWO_GONAL: GonalityTable = table![
    0: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25],
    1: [11, 14, 15, 17, 19, 20, 21, 24, 27, 32, 36, 49],
    2: [22, 23, 26, 28, 29, 31, 37, 50],
    3: [30, 33, 35, 39, 40, 41, 48],
    4: [47],
    5: [46, 59],
    6: [71],
];

/// `X_0(N)` that are 3-gonal as listed by Hasegawa-Shimura. This list does
/// not repeat the hyperelliptic levels of genus >= 3; see
/// [`X0_GONALITY_AT_MOST_3`].
pub const X0_THREE_GONAL_LISTED: GonalityTable = table![
    0: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25],
    1: [11, 14, 15, 17, 19, 20, 21, 24, 27, 32, 36, 49],
    2: [22, 23, 26, 28, 29, 31, 37, 50],
    3: [34, 43, 45, 64],
    4: [38, 44, 53, 54, 61, 81],
];

/// Union of the 2-gonal and 3-gonal `X_0` lists: every level whose
/// gonality is at most 3.
pub const X0_GONALITY_AT_MOST_3: GonalityTable = table![
    0: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25],
    1: [11, 14, 15, 17, 19, 20, 21, 24, 27, 32, 36, 49],
    2: [22, 23, 26, 28, 29, 31, 37, 50],
    3: [30, 33, 35, 39, 40, 41, 48],
    4: [47],
    5: [46, 59],
    6: [71],
    3: [34, 43, 45, 64],
    4: [38, 44, 53, 54, 61, 81],
];

pub const X1_GENUS_ZERO: GonalityTable = table![0: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12]];

/// `X_1(N)` that are 2-gonal (Ishii-Momose).
pub const X1_TWO_GONAL: GonalityTable = table![
    0: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12],
    1: [11, 14, 15],
    2: [13, 16, 18],
];

/// `X_1(N)` that are 3-gonal (Jeon-Kim-Schweizer).
pub const X1_THREE_GONAL: GonalityTable = table![
    0: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12],
    1: [11, 14, 15],
    2: [13, 16, 18],
    3: [20],
];

/// Table of levels whose gonality is at most `d`.
pub fn gonality_table(family: CurveFamily, d: u32) -> Result<GonalityTable> {
    Ok(match (family, d) {
        (_, 0) => return Err(Error::ZeroDegree),
        (CurveFamily::X0, 1) => X0_GENUS_ZERO,
        (CurveFamily::X0, 2) => X0_TWO_GONAL,
        (CurveFamily::X0, 3) => X0_GONALITY_AT_MOST_3,
        (CurveFamily::X1, 1) => X1_GENUS_ZERO,
        (CurveFamily::X1, 2) => X1_TWO_GONAL,
        (CurveFamily::X1, 3) => X1_THREE_GONAL,
        (_, d) => return Err(Error::DegreeUnsupported(d)),
    })
}

/// True iff the gonality of the curve at level `N` exceeds `d`.
pub fn gonality_exceeds(family: CurveFamily, n: u64, d: u32) -> Result<bool> {
    let table = gonality_table(family, d)?;
    Ok(!table.iter().any(|&(m, _)| m == n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maninspace::{genus_x0, genus_x1};

    fn levels(t: GonalityTable) -> Vec<u64> {
        t.iter().map(|&(n, _)| n).collect()
    }

    #[test]
    fn examples() {
        assert!(gonality_exceeds(CurveFamily::X0, 169, 3).unwrap());
        assert!(!gonality_exceeds(CurveFamily::X0, 54, 3).unwrap());
        assert!(!gonality_exceeds(CurveFamily::X1, 20, 3).unwrap());
        assert!(gonality_exceeds(CurveFamily::X1, 49, 3).unwrap());
        assert_eq!(gonality_exceeds(CurveFamily::X0, 11, 4), Err(Error::DegreeUnsupported(4)));
        assert_eq!(gonality_exceeds(CurveFamily::X0, 11, 0), Err(Error::ZeroDegree));
        // hyperelliptic of genus 3: gonality 2, so not > 3
        assert!(!gonality_exceeds(CurveFamily::X0, 40, 3).unwrap());
    }

    #[test]
    fn lower_tables_nest() {
        for family in [CurveFamily::X0, CurveFamily::X1] {
            for d in 1..3 {
                let lo = levels(gonality_table(family, d).unwrap());
                let hi = levels(gonality_table(family, d + 1).unwrap());
                assert!(lo.iter().all(|n| hi.contains(n)), "{family} d={d}");
            }
        }
    }

    #[test]
    fn listed_genera_match_formulas() {
        for table in [X0_TWO_GONAL, X0_THREE_GONAL_LISTED, X0_GONALITY_AT_MOST_3] {
            for &(n, g) in table {
                assert_eq!(genus_x0(n), g as u64, "X0({n})");
            }
        }
        for table in [X1_TWO_GONAL, X1_THREE_GONAL] {
            for &(n, g) in table {
                assert_eq!(genus_x1(n), g as u64, "X1({n})");
            }
        }
    }

    #[test]
    fn case_levels_have_large_gonality() {
        for n in [169u64, 143, 91, 77, 55] {
            assert!(gonality_exceeds(CurveFamily::X0, n, 3).unwrap(), "X0({n})");
        }
        for n in [169u64, 49, 25, 143, 91, 77, 55, 40, 22] {
            assert!(gonality_exceeds(CurveFamily::X1, n, 3).unwrap(), "X1({n})");
        }
    }
}
