//! Exact computation of β-Grothendieck, Lascoux, Schubert and Demazure
//! polynomials, together with the tableau machinery that relates them:
//! Hecke insertion with set-valued recording, K-jeu-de-taquin, and left and
//! right keys of decreasing, increasing and reverse semistandard tableaux.
//!
//! The crate is organised bottom-up:
//!
//! * [`combinatorics`]: permutations, words, the 0-Hecke action, compositions,
//!   flags and key tableaux.
//! * [`polynomial`]: sparse polynomials over `Z[β]`, divided differences and
//!   the polynomial families built from them.
//! * [`tableau`]: shapes, tableaux, validation predicates and enumerators.
//! * [`kjdt`]: rook-strip switching, infusion, rectification and the `♯`/`♭`
//!   bijections between decreasing and increasing tableaux.
//! * [`keys`]: the `★` action and the left/right key algorithms.
//! * [`insertion`]: column Hecke insertion and the `Insert`/`RevInsert`
//!   bijection between compatible pairs and tableau pairs.
//! * [`expansions`]: tableau and compatible-pair generating functions and the
//!   Grothendieck-to-Lascoux expansions.
//! * [`verify`]: the identity-checking harness behind `grothlab verify`.

pub mod combinatorics;
pub mod error;
pub mod expansions;
pub mod insertion;
pub mod keys;
pub mod kjdt;
pub mod polynomial;
pub mod tableau;
pub mod verify;

pub use combinatorics::{Composition, FlagVector, KeyTableau, Permutation, Word};
pub use error::{Error, Result};
pub use polynomial::{BetaMode, Polynomial};
pub use tableau::{CellSet, Partition, SetTableau, SkewShape, Tableau};
