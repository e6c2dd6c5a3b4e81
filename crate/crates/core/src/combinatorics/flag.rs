use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{Permutation, Word};
use crate::{Error, Result};

/// A flag `(f_1, ..., f_n)`: weakly increasing, `f_i >= i` and `f_n = n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct FlagVector {
    entries: Vec<u32>,
}

impl FlagVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len() as u32;
        let ok = entries.windows(2).all(|w| w[0] <= w[1])
            && entries.iter().zip(1..).all(|(&f, i)| f >= i)
            && entries.last().is_none_or(|&l| l == n);
        if ok {
            Ok(Self { entries })
        } else {
            Err(Error::InvalidFlag(entries))
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(super::parse_int_list(s)?)
    }

    pub fn f_min(n: usize) -> Self {
        Self { entries: (1..=n as u32).collect() }
    }

    pub fn f_max(n: usize) -> Self {
        Self { entries: vec![n as u32; n] }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// All flags of length `n`.
    pub fn all(n: usize) -> Vec<FlagVector> {
        if n <= 1 {
            return vec![Self::f_min(n)];
        }
        (1..n)
            .map(|i| i as u32..=n as u32)
            .multi_cartesian_product()
            .map(|mut v| {
                v.push(n as u32);
                v
            })
            .filter_map(|v| Self::new(v).ok())
            .collect()
    }

    /// The word `(i_1, i_2, ...)` with `σ_f = s_{i_1} s_{i_2} ...`, unrolling
    /// `σ_f = s_i σ_{f'}` where `j` is minimal with `f_j > j`, `i + 1 = f_j`
    /// and `f'` lowers `f_j` by one.
    pub fn sigma_word(&self) -> Word {
        let mut f = self.entries.clone();
        let mut letters = Vec::new();
        while let Some(j) = (0..f.len()).find(|&j| f[j] as usize > j + 1) {
            letters.push(f[j] - 1);
            f[j] -= 1;
        }
        Word::new(letters).expect("letters are positive")
    }

    /// `σ_f`.
    pub fn sigma(&self) -> Permutation {
        self.sigma_word()
            .letters()
            .iter()
            .fold(Permutation::identity(), |acc, &i| acc.compose(&Permutation::simple(i)))
    }
}

impl TryFrom<Vec<u32>> for FlagVector {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<FlagVector> for Vec<u32> {
    fn from(f: FlagVector) -> Self {
        f.entries
    }
}

impl fmt::Display for FlagVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entries.iter().join(","))
    }
}

impl fmt::Debug for FlagVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FlagVector{self}")
    }
}
