//! The Manin-symbol presentation of the homology of `X_0(N)` relative to
//! its cusps, with exact rank computations and the classical level formulas
//! used to cross-check it.

mod gamma0;
pub mod linalg;
mod p1;
mod space;
mod vector;

pub use gamma0::{
    cusp_count_x0, elliptic_points_2, elliptic_points_3, genus_x0, genus_x1, index_x0,
};
pub use p1::{p1_list, p1_normalize, Level, ManinSymbol, MAX_LEVEL};
pub use space::{build_space, right_act, Matrix2, SymbolSpace, SIGMA, TAU};
pub use vector::FreeVector;

pub(crate) use vector::write_term;

use crate::error::Result;

/// `rank_p([R; V]) - rank_p(R)`: the dimension spanned by the images of
/// `vectors` in the quotient tensored with `F_p`.
pub fn quotient_rank_mod_p(space: &SymbolSpace, vectors: &[FreeVector], p: u64) -> Result<usize> {
    space.quotient_rank_mod_p(vectors, p)
}
