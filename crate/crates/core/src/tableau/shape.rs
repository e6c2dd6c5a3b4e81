use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An integer partition, stored without zero parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(crate::combinatorics::parse_int_list(s)?)
    }

    /// The partition with the given column lengths.
    pub fn from_conjugate(cols: &[u32]) -> Self {
        let rows = cols.first().copied().unwrap_or(0);
        Self {
            parts: (1..=rows)
                .map(|r| cols.iter().filter(|&&c| c >= r).count() as u32)
                .collect(),
        }
    }

    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::default();
        }
        Self { parts: vec![cols as u32; rows] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Length of row `r` (1-based), zero past the end.
    pub fn row(&self, r: usize) -> usize {
        self.parts.get(r.wrapping_sub(1)).copied().unwrap_or(0) as usize
    }

    pub fn first_part(&self) -> usize {
        self.row(1)
    }

    pub fn conjugate(&self) -> Self {
        Self::from_conjugate(&self.parts)
    }

    pub fn contains(&self, other: &Self) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn has_box(&self, r: usize, c: usize) -> bool {
        r >= 1 && c >= 1 && c <= self.row(r)
    }

    /// Boxes `(row, col)` in row-major order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &l)| (1..=l as usize).map(move |c| (r + 1, c)))
            .collect()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// A skew shape `outer / inner`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer: outer.parts, inner: inner.parts });
        }
        Ok(Self { outer, inner })
    }

    pub fn normal(shape: Partition) -> Self {
        Self { outer: shape, inner: Partition::default() }
    }

    /// Infers the shape from a set of boxes, which must form a skew shape.
    pub fn from_boxes<'a>(boxes: impl IntoIterator<Item = &'a (usize, usize)>) -> Result<Self> {
        let boxes: Vec<(usize, usize)> = boxes.into_iter().copied().collect();
        let nrows = boxes.iter().map(|b| b.0).max().unwrap_or(0);
        let mut lo = vec![usize::MAX; nrows + 1];
        let mut hi = vec![0; nrows + 1];
        for &(r, c) in &boxes {
            if r == 0 || c == 0 {
                return Err(Error::InvalidTableau(format!("box ({r},{c}) is not 1-based")));
            }
            lo[r] = lo[r].min(c);
            hi[r] = hi[r].max(c);
        }
        let mut outer = vec![0u32; nrows];
        let mut inner = vec![0u32; nrows];
        let mut below = 0;
        for r in (1..=nrows).rev() {
            if hi[r] == 0 {
                outer[r - 1] = below as u32;
                inner[r - 1] = below as u32;
            } else {
                outer[r - 1] = hi[r] as u32;
                inner[r - 1] = lo[r] as u32 - 1;
                below = below.max(hi[r]);
            }
        }
        let bad = || Error::InvalidTableau(format!("boxes {boxes:?} do not form a skew shape"));
        let shape = Self::new(
            Partition::new(outer).map_err(|_| bad())?,
            Partition::new(inner).map_err(|_| bad())?,
        )
        .map_err(|_| bad())?;
        if shape.size() != boxes.len() {
            return Err(bad());
        }
        Ok(shape)
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        (self.outer.size() - self.inner.size()) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn has_box(&self, r: usize, c: usize) -> bool {
        self.outer.has_box(r, c) && !self.inner.has_box(r, c)
    }

    /// Boxes `(row, col)` in row-major order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.outer
            .boxes()
            .into_iter()
            .filter(|&(r, c)| !self.inner.has_box(r, c))
            .collect()
    }

    /// A unique northwestmost box.
    pub fn is_normal(&self) -> bool {
        let boxes = self.boxes();
        match (boxes.iter().map(|b| b.0).min(), boxes.iter().map(|b| b.1).min()) {
            (Some(r), Some(c)) => self.has_box(r, c),
            _ => true,
        }
    }

    /// A unique southeastmost box.
    pub fn is_antinormal(&self) -> bool {
        let boxes = self.boxes();
        match (boxes.iter().map(|b| b.0).max(), boxes.iter().map(|b| b.1).max()) {
            (Some(r), Some(c)) => self.has_box(r, c),
            _ => true,
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}
