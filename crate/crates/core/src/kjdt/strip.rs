use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A skew shape with at most one box in each row and each column.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<(usize, usize)>", into = "Vec<(usize, usize)>")]
pub struct RookStrip {
    boxes: BTreeSet<(usize, usize)>,
}

impl RookStrip {
    pub fn new(boxes: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let boxes: BTreeSet<_> = boxes.into_iter().collect();
        let rows: BTreeSet<_> = boxes.iter().map(|b| b.0).collect();
        let cols: BTreeSet<_> = boxes.iter().map(|b| b.1).collect();
        if rows.len() != boxes.len() || cols.len() != boxes.len() || boxes.iter().any(|b| b.0 == 0 || b.1 == 0) {
            return Err(Error::NotRookStrip(boxes.into_iter().collect()));
        }
        Ok(Self { boxes })
    }

    pub(crate) fn from_set(boxes: BTreeSet<(usize, usize)>) -> Self {
        Self { boxes }
    }

    pub fn boxes(&self) -> &BTreeSet<(usize, usize)> {
        &self.boxes
    }

    pub fn contains(&self, b: (usize, usize)) -> bool {
        self.boxes.contains(&b)
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }
}

impl TryFrom<Vec<(usize, usize)>> for RookStrip {
    type Error = Error;
    fn try_from(v: Vec<(usize, usize)>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<RookStrip> for Vec<(usize, usize)> {
    fn from(s: RookStrip) -> Self {
        s.boxes.into_iter().collect()
    }
}

fn neighbours((r, c): (usize, usize)) -> [(usize, usize); 4] {
    [(r.wrapping_sub(1), c), (r + 1, c), (r, c.wrapping_sub(1)), (r, c + 1)]
}

fn check_pair(d: &RookStrip, e: &RookStrip) -> Result<()> {
    if let Some(b) = d.boxes.intersection(&e.boxes).next() {
        return Err(Error::NotSuccessive(format!("box {b:?} lies in both strips")));
    }
    for &(r, c) in &d.boxes {
        if e.contains((r.wrapping_sub(1), c)) || e.contains((r, c.wrapping_sub(1))) {
            return Err(Error::NotSuccessive(format!("box ({r},{c}) of the inner strip lies outside the outer strip")));
        }
    }
    let all: BTreeSet<_> = d.boxes.union(&e.boxes).copied().collect();
    let mut per_row: BTreeMap<usize, usize> = BTreeMap::new();
    let mut per_col: BTreeMap<usize, usize> = BTreeMap::new();
    for &(r, c) in &all {
        *per_row.entry(r).or_default() += 1;
        *per_col.entry(c).or_default() += 1;
        if all.contains(&(r + 1, c)) && all.contains(&(r, c + 1)) && all.contains(&(r + 1, c + 1)) {
            return Err(Error::NotThin);
        }
    }
    if per_row.values().chain(per_col.values()).any(|&n| n > 2) {
        return Err(Error::NotThin);
    }
    Ok(())
}

/// The switch `(D, E) -> (E', D')`: a box moves to the other strip exactly
/// when it has an edge neighbour in `D + E`.
pub fn switch(d: &RookStrip, e: &RookStrip) -> Result<(RookStrip, RookStrip)> {
    check_pair(d, e)?;
    Ok(switch_unchecked(d, e))
}

pub(crate) fn switch_unchecked(d: &RookStrip, e: &RookStrip) -> (RookStrip, RookStrip) {
    let touches = |b: (usize, usize), other: &RookStrip| neighbours(b).iter().any(|&n| other.contains(n));
    let mut d2 = BTreeSet::new();
    let mut e2 = BTreeSet::new();
    for &b in &d.boxes {
        if touches(b, e) {
            e2.insert(b);
        } else {
            d2.insert(b);
        }
    }
    for &b in &e.boxes {
        if touches(b, d) {
            d2.insert(b);
        } else {
            e2.insert(b);
        }
    }
    (RookStrip { boxes: e2 }, RookStrip { boxes: d2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{partitions_inside, Partition};

    fn strip(v: &[(usize, usize)]) -> RookStrip {
        RookStrip::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn worked_switch() {
        let d = strip(&[(2, 4), (3, 3), (4, 2), (5, 1)]);
        let e = strip(&[(1, 5), (3, 4), (4, 3)]);
        let (e2, d2) = switch(&d, &e).unwrap();
        assert_eq!(e2, strip(&[(1, 5), (2, 4), (3, 3), (4, 2)]));
        assert_eq!(d2, strip(&[(3, 4), (4, 3), (5, 1)]));
        assert_eq!(switch(&e2, &d2).unwrap(), (d, e));
    }

    #[test]
    fn trivial_switch() {
        let d = strip(&[(1, 1)]);
        let (e2, d2) = switch(&d, &RookStrip::default()).unwrap();
        assert!(e2.is_empty());
        assert_eq!(d2, d);
    }

    #[test]
    fn invalid_inputs() {
        assert!(RookStrip::new([(1, 1), (1, 2)]).is_err());
        assert!(RookStrip::new([(1, 1), (2, 1)]).is_err());
        // outer box to the left of an inner box
        assert!(switch(&strip(&[(1, 2)]), &strip(&[(1, 1)])).is_err());
        assert!(switch(&strip(&[(1, 1)]), &strip(&[(1, 1)])).is_err());
    }

    fn rook_strip_between(outer: &Partition, inner: &Partition) -> Option<RookStrip> {
        if !outer.contains(inner) {
            return None;
        }
        let boxes: Vec<_> = outer.boxes().into_iter().filter(|&(r, c)| !inner.has_box(r, c)).collect();
        RookStrip::new(boxes).ok()
    }

    #[test]
    fn switch_is_an_involution_in_a_4x4_box() {
        let all = partitions_inside(&Partition::rectangle(4, 4));
        let mut checked = 0;
        for nu in &all {
            for mu in &all {
                let Some(d) = rook_strip_between(mu, nu) else { continue };
                for la in &all {
                    let Some(e) = rook_strip_between(la, mu) else { continue };
                    if check_pair(&d, &e).is_err() {
                        continue;
                    }
                    let (e2, d2) = switch(&d, &e).unwrap();
                    assert!(RookStrip::new(e2.boxes.iter().copied()).is_ok());
                    assert!(RookStrip::new(d2.boxes.iter().copied()).is_ok());
                    assert_eq!(switch(&e2, &d2).unwrap(), (d.clone(), e.clone()));
                    checked += 1;
                }
            }
        }
        assert!(checked > 1000, "{checked}");
    }
}
