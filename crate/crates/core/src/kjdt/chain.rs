use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::strip::{switch, switch_unchecked, RookStrip};
use super::Monotonicity;
use crate::tableau::{SkewShape, Tableau};
use crate::{Error, Result};

/// A sequence of successive rook strips, innermost first, each carrying the
/// value of its boxes.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct StripChain {
    strips: Vec<RookStrip>,
    labels: Vec<u32>,
}

impl StripChain {
    /// Reads the strips of an increasing tableau (values ascending) or a
    /// decreasing tableau (values descending).
    pub fn from_tableau(t: &Tableau<u32>, order: Monotonicity) -> Result<Self> {
        let ok = match order {
            Monotonicity::Increasing => t.is_increasing(),
            Monotonicity::Decreasing => t.is_decreasing(),
        };
        if !ok {
            return Err(Error::InvalidTableau(format!("not {order:?}: {t:?}")));
        }
        let mut by_value: BTreeMap<u32, BTreeSet<(usize, usize)>> = BTreeMap::new();
        for (&b, &v) in t.cells() {
            by_value.entry(v).or_default().insert(b);
        }
        let mut pairs: Vec<(u32, RookStrip)> =
            by_value.into_iter().map(|(v, s)| (v, RookStrip::from_set(s))).collect();
        if order == Monotonicity::Decreasing {
            pairs.reverse();
        }
        let (labels, strips) = pairs.into_iter().unzip();
        Ok(Self { strips, labels })
    }

    pub fn new(strips: Vec<RookStrip>, labels: Vec<u32>) -> Result<Self> {
        if strips.len() != labels.len() {
            return Err(Error::NotSuccessive("one label per strip is required".into()));
        }
        let c = Self { strips, labels };
        for (k, s) in c.strips.iter().enumerate() {
            let inner: BTreeSet<_> = c.strips[..k].iter().flat_map(|s| s.boxes().iter().copied()).collect();
            check_extends(&inner, s.boxes())?;
        }
        Ok(c)
    }

    pub fn strips(&self) -> &[RookStrip] {
        &self.strips
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.strips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strips.is_empty()
    }

    pub fn boxes(&self) -> BTreeSet<(usize, usize)> {
        self.strips.iter().flat_map(|s| s.boxes().iter().copied()).collect()
    }

    pub fn to_tableau(&self) -> Tableau<u32> {
        Tableau::from_map_unchecked(
            self.strips
                .iter()
                .zip(&self.labels)
                .flat_map(|(s, &l)| s.boxes().iter().map(move |&b| (b, l)))
                .collect(),
        )
    }
}

/// Checks that `outer` extends `inner`: both together form a skew shape and
/// no box of `outer` lies above or to the left of a box of `inner`.
fn check_extends(inner: &BTreeSet<(usize, usize)>, outer: &BTreeSet<(usize, usize)>) -> Result<()> {
    if let Some(b) = inner.intersection(outer).next() {
        return Err(Error::NotSuccessive(format!("box {b:?} is used twice")));
    }
    let all: BTreeSet<_> = inner.union(outer).copied().collect();
    SkewShape::from_boxes(&all).map_err(|_| Error::NotSuccessive("union is not a skew shape".into()))?;
    for &(r, c) in inner {
        if outer.contains(&(r.wrapping_sub(1), c)) || outer.contains(&(r, c.wrapping_sub(1))) {
            return Err(Error::NotSuccessive(format!("({r},{c}) has an outer box above or to its left")));
        }
    }
    Ok(())
}

fn sw(d: &RookStrip, e: &RookStrip) -> (RookStrip, RookStrip) {
    if cfg!(debug_assertions) {
        switch(d, e).expect("switch of successive rook strips")
    } else {
        switch_unchecked(d, e)
    }
}

/// One frame of a traced forward slide: the moving tableau, the strips
/// vacated so far, and the strips not yet passed.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Frame {
    pub moving: StripChain,
    pub vacated: StripChain,
    pub pending: StripChain,
}

/// `(J^↘_U(T), V^↘_U(T))`: `T` slides southeast through the strips of `U`.
pub fn jdt_forward(t: &StripChain, u: &StripChain) -> Result<(StripChain, StripChain)> {
    let frames = jdt_forward_traced(t, u)?;
    let last = frames.into_iter().last().expect("at least one frame");
    Ok((last.moving, last.vacated))
}

/// Forward slide, recording a frame before the first and after every strip
/// of `U`.
pub fn jdt_forward_traced(t: &StripChain, u: &StripChain) -> Result<Vec<Frame>> {
    check_extends(&t.boxes(), &u.boxes())?;
    let mut d = t.strips.clone();
    let mut vacated = Vec::with_capacity(u.len());
    let frame = |d: &[RookStrip], vacated: &[RookStrip], j: usize| Frame {
        moving: StripChain { strips: d.to_vec(), labels: t.labels.clone() },
        vacated: StripChain { strips: vacated.to_vec(), labels: u.labels[..j].to_vec() },
        pending: StripChain { strips: u.strips[j..].to_vec(), labels: u.labels[j..].to_vec() },
    };
    let mut frames = vec![frame(&d, &vacated, 0)];
    for (j, e) in u.strips.iter().enumerate() {
        let mut e = e.clone();
        for di in d.iter_mut().rev() {
            let (e2, d2) = sw(di, &e);
            *di = d2;
            e = e2;
        }
        vacated.push(e);
        frames.push(frame(&d, &vacated, j + 1));
    }
    Ok(frames)
}

/// `(J^↖_T(U), V^↖_T(U))`: `U` slides northwest through the strips of `T`,
/// last strip first.
pub fn jdt_backward(t: &StripChain, u: &StripChain) -> Result<(StripChain, StripChain)> {
    check_extends(&t.boxes(), &u.boxes())?;
    let mut e = u.strips.clone();
    let mut vacated = vec![RookStrip::default(); t.len()];
    for (k, d) in t.strips.iter().enumerate().rev() {
        let mut d = d.clone();
        for ej in e.iter_mut() {
            let (e2, d2) = sw(&d, ej);
            *ej = e2;
            d = d2;
        }
        vacated[k] = d;
    }
    Ok((
        StripChain { strips: e, labels: u.labels.clone() },
        StripChain { strips: vacated, labels: t.labels.clone() },
    ))
}

/// The infusion `(V^↘_U(T), J^↘_U(T))`.
pub fn infusion(t: &StripChain, u: &StripChain) -> Result<(StripChain, StripChain)> {
    let (j, v) = jdt_forward(t, u)?;
    Ok((v, j))
}
