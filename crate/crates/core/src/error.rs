use thiserror::Error;

/// Errors raised by the combinatorial and polynomial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation in one-line notation: {0:?}")]
    InvalidPermutation(Vec<u32>),

    #[error("invalid flag {0:?}: entries must weakly increase, satisfy f_i >= i, and end with f_n = n")]
    InvalidFlag(Vec<u32>),

    #[error("flag of length {flag} is too short for a permutation of size {perm}")]
    FlagTooShort { flag: usize, perm: usize },

    #[error("not a partition: {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("shape {inner:?} is not contained in {outer:?}")]
    NotContained { outer: Vec<u32>, inner: Vec<u32> },

    #[error("letters and entries must be positive integers")]
    ZeroLetter,

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid key tableau: {0}")]
    InvalidKey(String),

    #[error("not a rook strip: {0:?}")]
    NotRookStrip(Vec<(usize, usize)>),

    #[error("strips are not successive: {0}")]
    NotSuccessive(String),

    #[error("shape is not thin")]
    NotThin,

    #[error("shape is not normal")]
    NotNormal,

    #[error("shape is not antinormal")]
    NotAntinormal,

    #[error("box ({0}, {1}) is not at the end of its row and column")]
    NotRemovable(usize, usize),

    #[error("invalid compatible pair: {0}")]
    InvalidPair(String),

    #[error("dividing by x{0} - x{1} left a nonzero remainder")]
    InexactDivision(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
