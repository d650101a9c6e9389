//! Classical invariants of `X_0(N)` (and the genus of `X_1(N)`).
//!
//! `12 g = 12 + mu - 3 nu_2 - 4 nu_3 - 6 nu_inf` is evaluated in integers.

use crate::exactmath::{dedekind_psi, divisors, euler_phi, factorize, gcd, legendre};

/// Index of `Gamma_0(N)` in `SL_2(Z)`.
pub fn index_x0(n: u64) -> u64 {
    dedekind_psi(n)
}

/// Number of elliptic points of order 2.
pub fn elliptic_points_2(n: u64) -> u64 {
    if n % 4 == 0 {
        return 0;
    }
    factorize(n)
        .primes()
        .map(|p| if p == 2 { 1 } else { (1 + legendre(-1, p)) as u64 })
        .product()
}

/// Number of elliptic points of order 3.
pub fn elliptic_points_3(n: u64) -> u64 {
    if n % 9 == 0 {
        return 0;
    }
    factorize(n)
        .primes()
        .map(|p| match p {
            // -3 is 5 mod 8, a non-residue at 2
            2 => 0,
            3 => 1,
            _ => (1 + legendre(-3, p)) as u64,
        })
        .product()
}

/// `sum_{d | N} phi(gcd(d, N/d))`.
pub fn cusp_count_x0(n: u64) -> u64 {
    divisors(n).into_iter().map(|d| euler_phi(gcd(d, n / d))).sum()
}

pub fn genus_x0(n: u64) -> u64 {
    let twelve_g = 12 + index_x0(n) as i64
        - 3 * elliptic_points_2(n) as i64
        - 4 * elliptic_points_3(n) as i64
        - 6 * cusp_count_x0(n) as i64;
    debug_assert!(twelve_g >= 0 && twelve_g % 12 == 0);
    (twelve_g / 12) as u64
}

/// Genus of `X_1(N)`; zero for `N <= 4`.
pub fn genus_x1(n: u64) -> u64 {
    if n <= 4 {
        return 0;
    }
    // index of +-Gamma_1(N): (N^2 / 2) prod (1 - 1/p^2)
    let twice_mu: u64 = factorize(n)
        .factors()
        .iter()
        .map(|&(p, e)| (p * p - 1) * p.pow(2 * (e - 1)))
        .product();
    let twice_cusps: u64 = divisors(n).into_iter().map(|d| euler_phi(d) * euler_phi(n / d)).sum();
    // 12 g = 12 + mu - 6 * cusps, with mu and cusps both halved above
    let twelve_g = 12 + (twice_mu / 2) as i64 - 3 * twice_cusps as i64;
    debug_assert!(twelve_g % 12 == 0);
    (twelve_g / 12) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_examples() {
        assert_eq!(genus_x0(40), 3);
        assert_eq!(genus_x0(71), 6);
        assert_eq!(genus_x0(11), 1);
        assert_eq!(genus_x0(22), 2);
        assert_eq!(genus_x0(1), 0);
        assert_eq!(cusp_count_x0(169), 14);
        assert_eq!(2 * genus_x0(169) + cusp_count_x0(169) - 1, 29);
        assert_eq!(cusp_count_x0(22), 4);
        assert_eq!(cusp_count_x0(40), 8);
    }

    #[test]
    fn genus_zero_levels() {
        let zero: Vec<u64> = (1..=60).filter(|&n| genus_x0(n) == 0).collect();
        assert_eq!(zero, [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25]);
        let zero1: Vec<u64> = (1..=60).filter(|&n| genus_x1(n) == 0).collect();
        assert_eq!(zero1, [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12]);
    }

    #[test]
    fn x1_genus_values() {
        assert_eq!(genus_x1(11), 1);
        assert_eq!(genus_x1(13), 2);
        assert_eq!(genus_x1(20), 3);
        assert_eq!(genus_x1(49), 69);
        assert_eq!(genus_x1(25), 12);
    }
}
