use alloc::collections::BTreeMap;
use core::fmt;

use super::p1::ManinSymbol;

/// A finite integer combination of canonical Manin symbols at one level,
/// i.e. an element of the free module before quotienting by relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeVector {
    level: u64,
    terms: BTreeMap<ManinSymbol, i64>,
}

impl FreeVector {
    pub fn zero(level: u64) -> Self {
        FreeVector { level, terms: BTreeMap::new() }
    }

    pub fn from_symbol(level: u64, x: ManinSymbol) -> Self {
        let mut v = Self::zero(level);
        v.add_term(x, 1);
        v
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// Add `coeff * x`. Zero coefficients are dropped.
    pub fn add_term(&mut self, x: ManinSymbol, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(x).or_insert(0);
        *entry = entry.checked_add(coeff).expect("coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&x);
        }
    }

    pub fn add_scaled(&mut self, other: &FreeVector, scale: i64) {
        assert_eq!(self.level, other.level, "level mismatch");
        for (&x, &c) in &other.terms {
            self.add_term(x, c.checked_mul(scale).expect("coefficient overflow"));
        }
    }

    pub fn coefficient(&self, x: &ManinSymbol) -> i64 {
        self.terms.get(x).copied().unwrap_or(0)
    }

    /// Terms in ascending symbol order.
    pub fn iter(&self) -> impl Iterator<Item = (&ManinSymbol, &i64)> {
        self.terms.iter()
    }

    /// Number of symbols with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.is_empty()
    }

    /// Sum of all coefficients.
    pub fn weight(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl core::ops::Sub for &FreeVector {
    type Output = FreeVector;

    fn sub(self, rhs: &FreeVector) -> FreeVector {
        let mut out = self.clone();
        out.add_scaled(rhs, -1);
        out
    }
}

/// Renders like `3(0,1)+(1,2)-(2,5)`; the zero vector renders as `0`.
impl fmt::Display for FreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (x, &c)) in self.terms.iter().enumerate() {
            write_term(f, i == 0, c, x)?;
        }
        Ok(())
    }
}

pub(crate) fn write_term(
    f: &mut impl fmt::Write,
    first: bool,
    c: i64,
    x: &impl fmt::Display,
) -> fmt::Result {
    match (first, c) {
        (_, 1) if first => write!(f, "{x}"),
        (_, 1) => write!(f, "+{x}"),
        (_, -1) => write!(f, "-{x}"),
        (true, c) => write!(f, "{c}{x}"),
        (false, c) if c < 0 => write!(f, "{c}{x}"),
        (false, c) => write!(f, "+{c}{x}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_not_stored() {
        let x = ManinSymbol::new(0, 1);
        let mut v = FreeVector::from_symbol(11, x);
        v.add_term(x, -1);
        assert!(v.is_zero());
        assert_eq!(v.to_string(), "0");
    }

    #[test]
    fn rendering() {
        let mut v = FreeVector::zero(169);
        v.add_term(ManinSymbol::new(1, 2), 1);
        v.add_term(ManinSymbol::new(0, 1), 3);
        v.add_term(ManinSymbol::new(2, 5), -1);
        v.add_term(ManinSymbol::new(3, 4), -2);
        assert_eq!(v.to_string(), "3(0,1)+(1,2)-(2,5)-2(3,4)");
        assert_eq!(v.weight(), 1);
        let w = &v - &v;
        assert!(w.is_zero());
    }
}
