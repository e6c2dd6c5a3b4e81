use std::fmt;

use itertools::Itertools;

use super::Composition;
use crate::tableau::{Partition, Tableau};
use crate::{Error, Result};

/// A key tableau, stored as its columns (each sorted increasingly) with
/// column `j` containing column `j + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct KeyTableau {
    columns: Vec<Vec<u32>>,
}

impl KeyTableau {
    /// Builds a key from column sets given in any order.
    pub fn from_columns(columns: Vec<Vec<u32>>) -> Result<Self> {
        let mut columns: Vec<Vec<u32>> = columns
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        while columns.last().is_some_and(|c| c.is_empty()) {
            columns.pop();
        }
        for c in &columns {
            if c.is_empty() || c.contains(&0) || c.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidKey(format!("bad column {c:?}")));
            }
        }
        for w in columns.windows(2) {
            if !w[1].iter().all(|v| w[0].binary_search(v).is_ok()) {
                return Err(Error::InvalidKey(format!("{:?} does not contain {:?}", w[0], w[1])));
            }
        }
        Ok(Self { columns })
    }

    /// `key(α)`: column `j` is `{i : α_i >= j}`.
    pub fn from_composition(alpha: &Composition) -> Self {
        let max = alpha.parts().iter().copied().max().unwrap_or(0);
        let columns = (1..=max)
            .map(|j| {
                alpha
                    .parts()
                    .iter()
                    .zip(1..)
                    .filter(|&(&a, _)| a >= j)
                    .map(|(_, i)| i)
                    .collect()
            })
            .collect();
        Self { columns }
    }

    /// Reads the columns of a singleton-valued tableau of normal shape.
    pub fn from_tableau(t: &Tableau<u32>) -> Result<Self> {
        if !t.shape().inner().is_empty() {
            return Err(Error::NotNormal);
        }
        Self::from_columns(t.columns())
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    pub fn shape(&self) -> Partition {
        Partition::from_conjugate(&self.columns.iter().map(|c| c.len() as u32).collect_vec())
    }

    /// The composition whose key this is.
    pub fn weight(&self) -> Composition {
        let n = self.columns.first().and_then(|c| c.last()).copied().unwrap_or(0) as usize;
        let mut wt = vec![0; n];
        for c in &self.columns {
            for &v in c {
                wt[v as usize - 1] += 1;
            }
        }
        Composition::new(wt)
    }

    /// Entrywise comparison of columns as sorted sets; false if shapes differ.
    pub fn le(&self, other: &Self) -> bool {
        self.columns.len() == other.columns.len()
            && self.columns.iter().zip(&other.columns).all(|(a, b)| {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
            })
    }

    /// Presentation with columns decreasing top to bottom.
    pub fn to_rssyt(&self) -> Tableau<u32> {
        Tableau::from_columns(self.columns.iter().map(|c| c.iter().rev().copied().collect()).collect())
            .expect("key columns form a normal shape")
    }

    /// Presentation with columns increasing top to bottom.
    pub fn to_ssyt(&self) -> Tableau<u32> {
        Tableau::from_columns(self.columns.clone()).expect("key columns form a normal shape")
    }
}

impl fmt::Display for KeyTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rssyt())
    }
}

impl fmt::Debug for KeyTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KeyTableau{:?}", self.columns)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn key_examples() {
        assert!(KeyTableau::from_composition(&c(&[])).columns().is_empty());
        let k = KeyTableau::from_composition(&c(&[1, 0, 2]));
        assert_eq!(k.columns(), &[vec![1, 3], vec![3]]);
        assert_eq!(k.shape().parts(), &[2, 1]);
        let k = KeyTableau::from_composition(&c(&[2, 2]));
        assert_eq!(k.columns(), &[vec![1, 2], vec![1, 2]]);
    }

    #[test]
    fn key_is_unique_ssyt_of_its_weight() {
        // oracle: brute force SSYT of shape (2,1) with entries <= 3, weight (1,0,2)
        let mut found = Vec::new();
        for a in 1..=3u32 {
            for b in a..=3 {
                for d in a + 1..=3 {
                    let mut wt = [0; 3];
                    for v in [a, b, d] {
                        wt[v as usize - 1] += 1;
                    }
                    if wt == [1, 0, 2] {
                        found.push((a, b, d));
                    }
                }
            }
        }
        assert_eq!(found, vec![(1, 3, 3)]);
        let k = KeyTableau::from_composition(&c(&[1, 0, 2])).to_ssyt();
        assert_eq!(k.rows_u32(), vec![vec![1, 3], vec![3]]);
    }

    #[test]
    fn weight_and_key_are_inverse() {
        for alpha in Composition::all_bounded(4, 3) {
            let k = KeyTableau::from_composition(&alpha);
            assert_eq!(k.weight(), alpha);
            assert_eq!(KeyTableau::from_columns(k.columns().to_vec()).unwrap(), k);
            assert_eq!(KeyTableau::from_tableau(&k.to_rssyt()).unwrap(), k);
            assert_eq!(KeyTableau::from_tableau(&k.to_ssyt()).unwrap(), k);
        }
    }

    #[test]
    fn rejects_non_nested_columns() {
        assert!(KeyTableau::from_columns(vec![vec![1], vec![2]]).is_err());
        assert!(KeyTableau::from_columns(vec![vec![1, 1]]).is_err());
    }
}
