//! Exact integer and finite-field arithmetic. No floating point anywhere.

mod arith;
mod field;

pub use arith::{
    big_pow, dedekind_psi, divisors, euler_phi, factorize, gcd, is_prime, isqrt, isqrt_big,
    legendre, mod_inverse, odd_primes_up_to, Factorization, PrimePower,
};
pub use field::{FieldElement, FiniteField, MAX_CHARACTERISTIC};
