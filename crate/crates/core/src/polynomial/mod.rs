//! Sparse polynomials over `Z[β]`, the divided-difference operators and the
//! polynomial families built from them.

mod families;
mod operators;
mod poly;

pub use families::{
    demazure, flagged_grothendieck, grassmannian_g, grothendieck, grothendieck_with, lascoux,
    lascoux_with, schubert, symmetrize, ChainChoice,
};
pub use operators::{apply, apply_perm, apply_word, divided_difference, OpKind};
pub use poly::{BetaMode, Monomial, Polynomial};
