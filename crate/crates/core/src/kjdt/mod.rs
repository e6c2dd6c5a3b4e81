//! K-theoretic jeu de taquin on increasing and decreasing tableaux, built
//! from switches of successive rook strips.

mod chain;
mod rectify;
mod strip;

pub use chain::{infusion, jdt_backward, jdt_forward, jdt_forward_traced, StripChain};
pub use rectify::{
    anti_rectify, anti_rectify_frames, anti_rectify_with, flat, flat_alt, random_order, rectify,
    rectify_with, sharp, sharp_alt, Monotonicity,
};
pub use strip::{switch, RookStrip};
