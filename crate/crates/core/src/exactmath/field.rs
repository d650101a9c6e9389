//! `F_q` in a polynomial basis over `F_p`.
//!
//! Elements are coefficient vectors of length `n` (constant term first),
//! reduced modulo a monic irreducible polynomial of degree `n`. Fields are
//! immutable once built and can be shared freely.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::arith::{factorize, PrimePower};
use crate::error::{Error, Result};

/// Largest characteristic supported; keeps every `a * b` inside `u64`.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "x")?,
                1 => write!(f, "{c}x")?,
                _ if c == 1 => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A finite field `F_{p^n}` with a fixed modulus polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    order: PrimePower,
    /// Monic modulus, constant term first, length `n + 1`.
    modulus: Vec<u64>,
}

impl FiniteField {
    /// Build `F_q` with the default modulus: `x^2 + 1` for `F_9`,
    /// `x^3 - x - 1` for `F_27`, otherwise the first monic irreducible
    /// polynomial when coefficient vectors are read as base-`p` integers
    /// (constant term least significant).
    pub fn new(order: PrimePower) -> Result<Self> {
        let p = order.p();
        check_characteristic(p)?;
        let n = order.n() as usize;
        let modulus = match (p, n) {
            (_, 1) => vec![0, 1],
            (3, 2) => vec![1, 0, 1],
            (3, 3) => vec![2, 2, 0, 1],
            _ => first_irreducible(p, n),
        };
        Ok(FiniteField { order, modulus })
    }

    /// Build `F_q` from an explicit monic modulus (constant term first).
    /// Rejects moduli of the wrong degree and reducible ones.
    pub fn with_modulus(order: PrimePower, modulus: &[i64]) -> Result<Self> {
        let p = order.p();
        check_characteristic(p)?;
        let n = order.n() as usize;
        if modulus.len() != n + 1 {
            return Err(Error::BadModulus(alloc::format!(
                "expected degree {n}, got {} coefficients",
                modulus.len()
            )));
        }
        let modulus: Vec<u64> = modulus
            .iter()
            .map(|&c| c.rem_euclid(p as i64) as u64)
            .collect();
        if modulus[n] != 1 {
            return Err(Error::BadModulus("modulus must be monic".into()));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus);
        }
        Ok(FiniteField { order, modulus })
    }

    pub fn order(&self) -> PrimePower {
        self.order
    }

    pub fn q(&self) -> u64 {
        self.order.q()
    }

    pub fn characteristic(&self) -> u64 {
        self.order.p()
    }

    pub fn degree(&self) -> usize {
        self.order.n() as usize
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.degree()] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, c: i64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = c.rem_euclid(self.characteristic() as i64) as u64;
        e
    }

    /// Build an element from its coefficient vector, reducing each entry.
    pub fn element(&self, coeffs: &[i64]) -> FieldElement {
        let p = self.characteristic() as i64;
        let mut poly: Vec<u64> = coeffs.iter().map(|&c| c.rem_euclid(p) as u64).collect();
        poly_rem(&mut poly, &self.modulus, self.characteristic());
        self.pad(poly)
    }

    /// The element whose coefficients are the base-`p` digits of `index`.
    pub fn from_index(&self, mut index: u64) -> FieldElement {
        let p = self.characteristic();
        let mut e = self.zero();
        for c in e.coeffs.iter_mut() {
            *c = index % p;
            index /= p;
        }
        e
    }

    pub fn index_of(&self, x: &FieldElement) -> u64 {
        let p = self.characteristic();
        x.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    /// All `q` elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q()).map(move |i| self.from_index(i))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.characteristic();
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| (x + y) % p).collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let p = self.characteristic();
        let coeffs = a.coeffs.iter().map(|&x| (p - x) % p).collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.characteristic();
        let mut prod = poly_mul(&a.coeffs, &b.coeffs, p);
        poly_rem(&mut prod, &self.modulus, p);
        self.pad(prod)
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut result = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        if a.is_zero() {
            None
        } else {
            Some(self.pow(a, self.q() - 2))
        }
    }

    /// `0` at zero, `+1` on nonzero squares, `-1` otherwise.
    ///
    /// In characteristic 2 every element is a square.
    pub fn quadratic_character(&self, a: &FieldElement) -> i8 {
        if a.is_zero() {
            return 0;
        }
        if self.characteristic() == 2 {
            return 1;
        }
        if self.pow(a, (self.q() - 1) / 2) == self.one() {
            1
        } else {
            -1
        }
    }

    fn pad(&self, mut poly: Vec<u64>) -> FieldElement {
        poly.resize(self.degree(), 0);
        FieldElement { coeffs: poly }
    }
}

fn check_characteristic(p: u64) -> Result<()> {
    if p >= MAX_CHARACTERISTIC {
        return Err(Error::BadModulus(alloc::format!(
            "characteristic {p} exceeds {MAX_CHARACTERISTIC}"
        )));
    }
    Ok(())
}

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

/// Reduce `a` modulo a polynomial `m` whose leading coefficient is a unit.
fn poly_rem(a: &mut Vec<u64>, m: &[u64], p: u64) {
    trim(a);
    let dm = m.len() - 1;
    let lead_inv = super::arith::mod_inverse(m[dm], p).expect("leading coefficient is a unit");
    while a.len() > dm {
        let top = a.len() - 1;
        let factor = a[top] * lead_inv % p;
        if factor != 0 {
            let shift = top - dm;
            for (k, &mk) in m.iter().enumerate() {
                a[shift + k] = (a[shift + k] + p - factor * mk % p) % p;
            }
        }
        trim(a);
    }
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        poly_rem(&mut a, &b, p);
        core::mem::swap(&mut a, &mut b);
    }
    a
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = base.to_vec();
    poly_rem(&mut b, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mul(&result, &b, p);
            poly_rem(&mut result, m, p);
        }
        b = poly_mul(&b, &b, p);
        poly_rem(&mut b, m, p);
        e >>= 1;
    }
    result
}

/// Rabin's test for a monic `f` of degree `n` over `F_p`: `x^{p^n} = x mod f`
/// and `gcd(x^{p^{n/r}} - x, f) = 1` for each prime `r | n`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    // frob[k] = x^{p^k} mod f
    let mut frob = Vec::with_capacity(n + 1);
    frob.push(x.clone());
    for k in 1..=n {
        let next = poly_powmod(&frob[k - 1], p, f, p);
        frob.push(next);
    }
    let mut xm = x.clone();
    poly_rem(&mut xm, f, p);
    if frob[n] != xm {
        return false;
    }
    for r in factorize(n as u64).primes() {
        let k = n / r as usize;
        let mut h = frob[k].clone();
        h.resize(h.len().max(2), 0);
        h[1] = (h[1] + p - 1) % p;
        let g = poly_gcd(&h, f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn first_irreducible(p: u64, n: usize) -> Vec<u64> {
    let count = p.pow(n as u32);
    (0..count)
        .map(|mut idx| {
            let mut f = vec![0u64; n + 1];
            for c in f.iter_mut().take(n) {
                *c = idx % p;
                idx /= p;
            }
            f[n] = 1;
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64, n: u32) -> FiniteField {
        FiniteField::new(PrimePower::new(p, n).unwrap()).unwrap()
    }

    #[test]
    fn modulus_x3_minus_x_minus_1_accepted() {
        // x^3 - x - 1 at 0, 1, 2 mod 3 gives 2, 2, 2.
        for x in 0..3i64 {
            assert_ne!((x * x * x - x - 1).rem_euclid(3), 0);
        }
        let f = FiniteField::with_modulus(PrimePower::new(3, 3).unwrap(), &[-1, -1, 0, 1]).unwrap();
        assert_eq!(f.modulus(), field(3, 3).modulus());
    }

    #[test]
    fn reducible_modulus_rejected() {
        let pp = PrimePower::new(3, 2).unwrap();
        assert_eq!(FiniteField::with_modulus(pp, &[-1, 0, 1]), Err(Error::ReducibleModulus));
        // (x^2 + 1)^2 has no roots mod 3 but is reducible.
        let pp4 = PrimePower::new(3, 4).unwrap();
        assert_eq!(
            FiniteField::with_modulus(pp4, &[1, 0, 2, 0, 1]),
            Err(Error::ReducibleModulus)
        );
        assert!(matches!(
            FiniteField::with_modulus(pp, &[1, 0, 2]),
            Err(Error::BadModulus(_))
        ));
        assert!(matches!(FiniteField::with_modulus(pp, &[1, 1]), Err(Error::BadModulus(_))));
    }

    #[test]
    fn default_moduli() {
        assert_eq!(field(3, 2).modulus(), &[1, 0, 1]);
        assert_eq!(field(3, 3).modulus(), &[2, 2, 0, 1]);
        for (p, n) in [(5, 2), (5, 3), (7, 2), (7, 3), (3, 4), (3, 5), (2, 4)] {
            let f = field(p, n);
            assert!(is_irreducible(f.modulus(), p), "p={p} n={n}");
        }
    }

    #[test]
    fn prime_field_character_is_legendre() {
        let f = field(3, 1);
        assert_eq!(f.quadratic_character(&f.from_int(1)), 1);
        assert_eq!(f.quadratic_character(&f.from_int(2)), -1);
        assert_eq!(f.quadratic_character(&f.zero()), 0);
        let f7 = field(7, 1);
        for a in 0..7 {
            let chi = f7.quadratic_character(&f7.from_int(a));
            assert_eq!(chi, crate::exactmath::legendre(a, 7));
        }
    }

    #[test]
    fn inverses_exhaustive() {
        for (p, n) in [(3, 1), (3, 2), (3, 3), (5, 2)] {
            let f = field(p, n);
            let one = f.one();
            for a in f.elements().filter(|a| !a.is_zero()) {
                let inv = f.inv(&a).unwrap();
                assert_eq!(f.mul(&a, &inv), one, "q={} a={a}", f.q());
            }
            assert_eq!(f.inv(&f.zero()), None);
        }
    }

    #[test]
    fn half_the_units_are_squares() {
        for (p, n) in [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 3)] {
            let f = field(p, n);
            let squares = f.elements().filter(|a| f.quadratic_character(a) == 1).count() as u64;
            assert_eq!(squares, (f.q() - 1) / 2);
            // Cross-check against the set of actual squares.
            let mut seen = alloc::collections::BTreeSet::new();
            for a in f.elements().filter(|a| !a.is_zero()) {
                seen.insert(f.mul(&a, &a));
            }
            assert_eq!(seen.len() as u64, squares);
            for s in &seen {
                assert_eq!(f.quadratic_character(s), 1);
            }
        }
    }

    #[test]
    fn index_roundtrip_and_distributivity() {
        let f = field(3, 3);
        for i in 0..f.q() {
            assert_eq!(f.index_of(&f.from_index(i)), i);
        }
        let elems: Vec<_> = f.elements().collect();
        for a in elems.iter().step_by(5) {
            for b in elems.iter().step_by(3) {
                for c in elems.iter().step_by(7) {
                    let lhs = f.mul(a, &f.add(b, c));
                    let rhs = f.add(&f.mul(a, b), &f.mul(a, c));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn element_reduction() {
        let f = field(3, 2);
        // x^2 = -1 in F_3[x]/(x^2 + 1)
        assert_eq!(f.element(&[0, 0, 1]), f.from_int(-1));
        assert_eq!(format!("{}", f.element(&[1, 2])), "2x+1");
    }
}
