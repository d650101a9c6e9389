//! Exact arithmetic for ruling out cyclic torsion `Z/NZ` on elliptic curves
//! over number fields of small degree.
//!
//! Two independent routes are implemented. The Hecke route builds the
//! Manin-symbol presentation of `H_1(X_0(N), cusps; Z)`, applies Hecke
//! operators to the winding symbol `(0,1)` and tests linear independence
//! modulo a prime `p`, together with the gonality and arithmetic side
//! conditions. The reduction route shows that no elliptic curve over
//! `F_{p^i}` (`i <= d`) can carry an `N`-torsion point, using the Hasse
//! bound and the classification of admissible Frobenius traces, backed by
//! an exhaustive point-count oracle.
//!
//! The crate is `no_std` (it needs `alloc`); IO lives in `torsion-gate`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod exactmath;
pub mod gate;
pub mod hecke;
pub mod maninspace;
pub mod redux;

pub use error::{Error, Result};
