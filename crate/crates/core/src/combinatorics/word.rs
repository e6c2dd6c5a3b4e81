use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::{Error, Result};

/// A finite word over the positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Self { letters })
    }

    pub(crate) fn from_letters(letters: Vec<u32>) -> Self {
        debug_assert!(!letters.contains(&0));
        Self { letters }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(super::parse_int_list(s)?)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn reverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().copied().collect() }
    }

    pub fn max_letter(&self) -> u32 {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    /// The associated permutation `u_1 * (u_2 * (... * id))` in the 0-Hecke
    /// monoid, where `i * w = s_i w` if that is longer and `w` otherwise.
    pub fn hecke_product(&self) -> Permutation {
        let n = self.max_letter() as usize + 1;
        // position of each value, so the left action is a swap of two entries
        let mut w: Vec<u32> = (1..=n as u32).collect();
        let mut pos: Vec<usize> = (0..=n).collect();
        for &i in self.letters.iter().rev() {
            let (a, b) = (i as usize, i as usize + 1);
            if pos[a] < pos[b] {
                w.swap(pos[a] - 1, pos[b] - 1);
                pos.swap(a, b);
            }
        }
        Permutation::new(w).expect("hecke product yields a permutation")
    }

    /// Length minus the Coxeter length of the associated permutation.
    pub fn excess(&self) -> usize {
        self.len() - self.hecke_product().length()
    }

    pub fn is_reduced(&self) -> bool {
        self.excess() == 0
    }

    /// Multiplicity of each letter, as a composition.
    pub fn weight(&self) -> super::Composition {
        let mut wt = vec![0; self.max_letter() as usize];
        for &l in &self.letters {
            wt[l as usize - 1] += 1;
        }
        super::Composition::new(wt)
    }
}

impl TryFrom<Vec<u32>> for Word {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Word> for Vec<u32> {
    fn from(w: Word) -> Self {
        w.letters
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.letters.iter().join(","))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{self}")
    }
}
