use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{Composition, Word};
use crate::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// Trailing fixed points are dropped, so a permutation compares equal to its
/// image under the standard embedding `S_n -> S_{n+1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    oneline: Vec<u32>,
}

impl Permutation {
    pub fn new(oneline: Vec<u32>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(oneline));
            }
            seen[v] = true;
        }
        Ok(Self::from_raw(oneline))
    }

    fn from_raw(mut oneline: Vec<u32>) -> Self {
        while oneline.last().is_some_and(|&v| v as usize == oneline.len()) {
            oneline.pop();
        }
        Self { oneline }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// The longest element `w_0` of `S_n`.
    pub fn longest(n: usize) -> Self {
        Self::from_raw((1..=n as u32).rev().collect())
    }

    /// The simple transposition `s_i`.
    pub fn simple(i: u32) -> Self {
        assert!(i >= 1, "simple transpositions are indexed from 1");
        Self::identity().right_mul_simple(i)
    }

    /// Parses `"2413"` (single digits) or `"2,4,1,3"`.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(super::parse_int_list(s)?)
    }

    /// All permutations of `S_n`, in lexicographic order of one-line notation.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n as u32)
            .permutations(n)
            .map(Self::from_raw)
    }

    /// Smallest `n` with `self` in `S_n`.
    pub fn size(&self) -> usize {
        self.oneline.len()
    }

    pub fn oneline(&self) -> &[u32] {
        &self.oneline
    }

    /// One-line notation as an element of `S_n`; `n` must be at least `size()`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.oneline.clone();
        v.extend(self.oneline.len() as u32 + 1..=n.max(self.oneline.len()) as u32);
        v
    }

    /// `w(i)`, with `w(i) = i` beyond the stored prefix.
    pub fn apply(&self, i: u32) -> u32 {
        self.oneline.get(i as usize - 1).copied().unwrap_or(i)
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.is_empty()
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.oneline;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// Lehmer code: `c_i = #{k > i : w(k) < w(i)}`.
    pub fn code(&self) -> Composition {
        let w = &self.oneline;
        Composition::new(
            (0..w.len())
                .map(|i| (i + 1..w.len()).filter(|&j| w[j] < w[i]).count() as u32)
                .collect(),
        )
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.oneline.len()];
        for (i, &v) in self.oneline.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Self::from_raw(inv)
    }

    /// The product `self ∘ other`, i.e. `other` applied first.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.size().max(other.size());
        Self::from_raw((1..=n as u32).map(|i| self.apply(other.apply(i))).collect())
    }

    /// `s_i w`: exchanges the values `i` and `i + 1`.
    pub fn left_mul_simple(&self, i: u32) -> Self {
        let mut w = self.padded(i as usize + 1);
        for v in w.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
        Self::from_raw(w)
    }

    /// `w s_i`: exchanges the positions `i` and `i + 1`.
    pub fn right_mul_simple(&self, i: u32) -> Self {
        let mut w = self.padded(i as usize + 1);
        w.swap(i as usize - 1, i as usize);
        Self::from_raw(w)
    }

    /// `w * i` in the 0-Hecke monoid: `w s_i` if that is longer, else `w`.
    pub fn hecke_right_mul(&self, i: u32) -> Self {
        if self.apply(i) < self.apply(i + 1) {
            self.right_mul_simple(i)
        } else {
            self.clone()
        }
    }

    /// Bruhat order, by comparing `#{k <= i : w(k) >= j}` for all `i, j`.
    pub fn bruhat_le(&self, other: &Self) -> bool {
        let n = self.size().max(other.size());
        let (u, w) = (self.padded(n), other.padded(n));
        (1..=n as u32).all(|j| {
            let (mut cu, mut cw) = (0, 0);
            (0..n).all(|i| {
                cu += (u[i] >= j) as u32;
                cw += (w[i] >= j) as u32;
                cu <= cw
            })
        })
    }

    /// `s_i w > w`, i.e. `i` appears to the left of `i + 1`.
    pub fn is_left_ascent(&self, i: u32) -> bool {
        let inv = self.inverse();
        inv.apply(i) < inv.apply(i + 1)
    }

    /// `w s_i < w`, i.e. `w(i) > w(i + 1)`.
    pub fn is_right_descent(&self, i: u32) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    /// A reduced word `a` with `w = s_{a_1} s_{a_2} ... s_{a_k}`.
    pub fn reduced_word(&self) -> Word {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.size() as u32).find(|&i| w.is_right_descent(i)) {
            rev.push(i);
            w = w.right_mul_simple(i);
        }
        rev.reverse();
        Word::from_letters(rev)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.oneline
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.oneline.is_empty() {
            return write!(f, "1");
        }
        if self.oneline.len() <= 9 {
            write!(f, "{}", self.oneline.iter().join(""))
        } else {
            write!(f, "{}", self.oneline.iter().join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Length, code and inverse of `w`.
pub fn perm_basics(w: &Permutation) -> (usize, Composition, Permutation) {
    (w.length(), w.code(), w.inverse())
}
