//! Integer helpers: trial-division factorization, exact square roots,
//! prime powers and the arithmetic functions used by the level formulas.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Roots;

use crate::error::{Error, Result};

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d <= n / d {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Odd primes `p` with `3 <= p <= limit`, ascending.
pub fn odd_primes_up_to(limit: u64) -> Vec<u64> {
    (3..=limit).step_by(2).filter(|&p| is_prime(p)).collect()
}

/// Floor of the square root: the `s` with `s^2 <= n < (s+1)^2`.
pub fn isqrt(n: u64) -> u64 {
    n.sqrt()
}

/// Floor square root of an arbitrary-precision integer.
pub fn isqrt_big(n: &BigUint) -> BigUint {
    n.sqrt()
}

/// Prime factorization `n = q_1^{e_1} ... q_k^{e_k}` with `q_1 < ... < q_k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(q, _)| q)
    }

    /// The maximal prime powers `q_j^{e_j}` exactly dividing `n`.
    pub fn prime_powers(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(q, e)| q.pow(e))
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// True for `n = 1`.
    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> u64 {
        self.prime_powers().product()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(q, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{q}")?;
            } else {
                write!(f, "{q}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factor `n >= 1` by trial division. `factorize(1)` is the empty product.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize needs n >= 1");
    let mut factors = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d <= m / d {
        if m % d == 0 {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Factorization { factors }
}

/// A prime power `q = p^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    p: u64,
    n: u32,
    q: u64,
}

impl PrimePower {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::ZeroExponent);
        }
        let q = p.checked_pow(n).ok_or(Error::PrimePowerTooLarge { p, n })?;
        Ok(PrimePower { p, n, q })
    }

    /// Recover `(p, n)` from `q`.
    pub fn from_order(q: u64) -> Result<Self> {
        let f = factorize(q.max(1));
        match f.factors() {
            [(p, n)] => PrimePower::new(*p, *n),
            _ => Err(Error::NotPrimePower(q)),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.n)
        }
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// `a^e` as an arbitrary-precision integer.
pub fn big_pow(a: u64, e: u32) -> BigUint {
    BigUint::from(a).pow(e)
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .factors()
        .iter()
        .map(|&(q, e)| (q - 1) * q.pow(e - 1))
        .product()
}

/// `psi(N) = N * prod_{p | N} (1 + 1/p)`, the size of `P^1(Z/NZ)`.
pub fn dedekind_psi(n: u64) -> u64 {
    factorize(n)
        .factors()
        .iter()
        .map(|&(q, e)| (q + 1) * q.pow(e - 1))
        .product()
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d <= n / d {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Kronecker-style symbol `(a / p)` for an odd prime `p`, in `{-1, 0, 1}`.
pub fn legendre(a: i64, p: u64) -> i8 {
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    let mut result = 1u64;
    let mut base = r % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if result == 1 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(169).factors(), &[(13, 2)]);
        assert_eq!(factorize(143).factors(), &[(11, 1), (13, 1)]);
        assert!(factorize(1).is_empty());
        assert_eq!(factorize(40).factors(), &[(2, 3), (5, 1)]);
        assert_eq!(factorize(97).factors(), &[(97, 1)]);
    }

    #[test]
    fn factorization_reconstructs() {
        for n in 1..5000u64 {
            let f = factorize(n);
            assert_eq!(f.product(), n);
            assert!(f.primes().all(is_prime));
            assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
        }
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(27), 5);
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(125), 11);
        assert_eq!(isqrt(u64::MAX), 4_294_967_295);
    }

    #[test]
    fn isqrt_exhaustive_to_a_million() {
        for n in 0..=1_000_000u64 {
            let s = isqrt(n);
            assert!(s * s <= n && n < (s + 1) * (s + 1), "n = {n}");
        }
    }

    #[test]
    fn prime_power_checks() {
        let pp = PrimePower::new(3, 3).unwrap();
        assert_eq!(pp.q(), 27);
        assert_eq!(PrimePower::new(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(PrimePower::new(3, 0), Err(Error::ZeroExponent));
        assert_eq!(PrimePower::from_order(25).unwrap(), PrimePower::new(5, 2).unwrap());
        assert_eq!(PrimePower::from_order(12), Err(Error::NotPrimePower(12)));
        assert!(PrimePower::new(97, 20).is_err());
    }

    #[test]
    fn arithmetic_functions() {
        assert_eq!(dedekind_psi(169), 182);
        assert_eq!(dedekind_psi(22), 36);
        assert_eq!(dedekind_psi(1), 1);
        assert_eq!(euler_phi(169), 156);
        assert_eq!(divisors(40), [1, 2, 4, 5, 8, 10, 20, 40]);
        assert_eq!(mod_inverse(2, 169), Some(85));
        assert_eq!(mod_inverse(13, 169), None);
        assert_eq!(legendre(-1, 3), -1);
        assert_eq!(legendre(-1, 5), 1);
        assert_eq!(legendre(-3, 7), 1);
        assert_eq!(odd_primes_up_to(20), [3, 5, 7, 11, 13, 17, 19]);
    }
}
