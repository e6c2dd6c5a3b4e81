use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{KeyTableau, Permutation, Word};
use crate::tableau::Partition;
use crate::Result;

/// A weak composition, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self { parts }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(Self::new(super::parse_int_list(s)?))
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Parts zero-padded to length `n` (at least the canonical length).
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// Position of the last nonzero part.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|α|`, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `α_i` (1-based), zero past the end.
    pub fn get(&self, i: usize) -> u32 {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `α⁺`, the parts sorted decreasingly.
    pub fn sorted(&self) -> Partition {
        let mut v: Vec<u32> = self.parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).expect("sorted parts form a partition")
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// `s_i α`, exchanging parts `i` and `i + 1`.
    pub fn swap(&self, i: usize) -> Self {
        let mut v = self.padded(i + 1);
        v.swap(i - 1, i);
        Self::new(v)
    }

    /// The Demazure action `s_i ∘ α`: swap only when `α_i > α_{i+1}`.
    pub fn demazure_compose(&self, i: usize) -> Self {
        if self.get(i) > self.get(i + 1) {
            self.swap(i)
        } else {
            self.clone()
        }
    }

    /// `s_{a_1} ∘ (... (s_{a_k} ∘ α))`.
    pub fn demazure_compose_word(&self, word: &Word) -> Self {
        word.letters()
            .iter()
            .rev()
            .fold(self.clone(), |acc, &i| acc.demazure_compose(i as usize))
    }

    /// `σ ∘ α`, through a reduced word of `σ`.
    pub fn demazure_compose_perm(&self, sigma: &Permutation) -> Self {
        self.demazure_compose_word(&sigma.reduced_word())
    }

    /// All compositions with `len <= max_len` and parts `<= max_part`.
    pub fn all_bounded(max_len: usize, max_part: u32) -> impl Iterator<Item = Composition> {
        itertools::repeat_n(0..=max_part, max_len)
            .multi_cartesian_product()
            .map(Composition::new)
            .filter({
                let mut seen = std::collections::HashSet::new();
                move |c| seen.insert(c.clone())
            })
    }
}

impl From<Vec<u32>> for Composition {
    fn from(v: Vec<u32>) -> Self {
        Self::new(v)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{self}")
    }
}

/// Bruhat order on the orbit `S·α`: same sorted parts and `key(α) <= key(γ)`
/// entrywise.
pub fn bruhat_le_orbit(alpha: &Composition, gamma: &Composition) -> bool {
    alpha.sorted() == gamma.sorted()
        && KeyTableau::from_composition(alpha).le(&KeyTableau::from_composition(gamma))
}
