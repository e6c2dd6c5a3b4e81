//! Column Hecke insertion into decreasing tableaux and the `Insert` /
//! `RevInsert` bijection between compatible pairs and pairs `(P, Q)` of a
//! decreasing tableau and a reverse set-valued tableau of the same shape.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Permutation, Word};
use crate::tableau::{CellSet, SetTableau, Tableau};
use crate::{Error, Result};

type Cells = BTreeMap<(usize, usize), u32>;

/// Result of inserting one value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionOutcome {
    pub tableau: Tableau<u32>,
    pub end_box: (usize, usize),
    /// False for a contraction, where the shape is unchanged.
    pub grew: bool,
}

/// Whether `v` may sit at `b` with the current neighbours, keeping rows and
/// columns strictly decreasing.
fn fits(cells: &Cells, (r, c): (usize, usize), v: u32) -> bool {
    let above = r > 1 && cells.get(&(r - 1, c)).is_some_and(|&u| u <= v);
    let left = c > 1 && cells.get(&(r, c - 1)).is_some_and(|&u| u <= v);
    let below = cells.get(&(r + 1, c)).is_some_and(|&u| u >= v);
    let right = cells.get(&(r, c + 1)).is_some_and(|&u| u >= v);
    !(above || left || below || right)
}

fn column_height(cells: &Cells, c: usize) -> usize {
    (1..).take_while(|&r| cells.contains_key(&(r, c))).count()
}

fn row_length(cells: &Cells, r: usize) -> usize {
    (1..).take_while(|&c| cells.contains_key(&(r, c))).count()
}

fn check_decreasing_normal(t: &Tableau<u32>) -> Result<()> {
    if !t.shape().inner().is_empty() {
        return Err(Error::NotNormal);
    }
    if !t.is_decreasing() {
        return Err(Error::InvalidTableau("expected a decreasing tableau".into()));
    }
    Ok(())
}

/// Hecke column insertion `x -> T`.
pub fn hecke_insert_one(t: &Tableau<u32>, x: u32) -> Result<InsertionOutcome> {
    if x == 0 {
        return Err(Error::ZeroLetter);
    }
    check_decreasing_normal(t)?;
    let mut cells = t.cells().clone();
    let mut x = x;
    for c in 1.. {
        let h = column_height(&cells, c);
        let bump = (1..=h).find(|&r| cells[&(r, c)] < x);
        match bump {
            None => {
                let b = (h + 1, c);
                if fits(&cells, b, x) && (c == 1 || cells.contains_key(&(h + 1, c - 1))) {
                    cells.insert(b, x);
                    return Ok(InsertionOutcome { tableau: Tableau::from_map_unchecked(cells), end_box: b, grew: true });
                }
                if h == 0 {
                    return Err(Error::Internal(format!("cannot start column {c} with {x}")));
                }
                let end_box = (h, row_length(&cells, h));
                return Ok(InsertionOutcome { tableau: Tableau::from_map_unchecked(cells), end_box, grew: false });
            }
            Some(r) => {
                let y = cells[&(r, c)];
                if fits(&cells, (r, c), x) {
                    cells.insert((r, c), x);
                }
                x = y;
            }
        }
    }
    unreachable!()
}

/// Reverse Hecke insertion starting from the corner `end_box`. Returns the
/// smaller tableau and the ejected value.
pub fn reverse_hecke_insert_one(p: &Tableau<u32>, end_box: (usize, usize), grew: bool) -> Result<(Tableau<u32>, u32)> {
    check_decreasing_normal(p)?;
    let mut cells = p.cells().clone();
    let (r0, c0) = end_box;
    let Some(&first) = cells.get(&end_box) else {
        return Err(Error::NotRemovable(r0, c0));
    };
    if cells.contains_key(&(r0 + 1, c0)) || cells.contains_key(&(r0, c0 + 1)) {
        return Err(Error::NotRemovable(r0, c0));
    }
    if grew {
        cells.remove(&end_box);
    }
    let mut y = first;
    for c in (1..c0).rev() {
        let h = column_height(&cells, c);
        let Some(r) = (1..=h).rev().find(|&r| cells[&(r, c)] > y) else {
            return Err(Error::InvalidPair(format!("no entry of column {c} exceeds {y}")));
        };
        let z = cells[&(r, c)];
        if fits(&cells, (r, c), y) {
            cells.insert((r, c), y);
        }
        y = z;
    }
    Ok((Tableau::from_map_unchecked(cells), y))
}

/// A compatible pair: `i` weakly decreasing, and `a` strictly increasing on
/// every run of equal `i` values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct CompatiblePair {
    a: Word,
    i: Word,
}

#[derive(Deserialize)]
struct RawPair {
    a: Word,
    i: Word,
}

impl TryFrom<RawPair> for CompatiblePair {
    type Error = Error;
    fn try_from(raw: RawPair) -> Result<Self> {
        Self::new(raw.a, raw.i)
    }
}

impl CompatiblePair {
    pub fn new(a: Word, i: Word) -> Result<Self> {
        if a.len() != i.len() {
            return Err(Error::InvalidPair(format!("lengths {} and {} differ", a.len(), i.len())));
        }
        for j in 1..a.len() {
            let (i0, i1) = (i.letters()[j - 1], i.letters()[j]);
            if i1 > i0 {
                return Err(Error::InvalidPair(format!("i increases at position {}", j + 1)));
            }
            if i1 == i0 && a.letters()[j - 1] >= a.letters()[j] {
                return Err(Error::InvalidPair(format!("a does not increase at position {}", j + 1)));
            }
        }
        Ok(Self { a, i })
    }

    pub fn empty() -> Self {
        Self { a: Word::default(), i: Word::default() }
    }

    pub fn a(&self) -> &Word {
        &self.a
    }

    pub fn i(&self) -> &Word {
        &self.i
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// `i_j <= a_j` for every position.
    pub fn is_bounded(&self) -> bool {
        self.a.letters().iter().zip(self.i.letters()).all(|(a, i)| i <= a)
    }
}

/// A decreasing tableau `P` with a reverse set-valued tableau `Q` of the same
/// normal shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawRecorded")]
pub struct RecordedPair {
    #[serde(rename = "P")]
    p: Tableau<u32>,
    #[serde(rename = "Q")]
    q: SetTableau,
}

#[derive(Deserialize)]
struct RawRecorded {
    #[serde(rename = "P")]
    p: Tableau<u32>,
    #[serde(rename = "Q")]
    q: SetTableau,
}

impl TryFrom<RawRecorded> for RecordedPair {
    type Error = Error;
    fn try_from(raw: RawRecorded) -> Result<Self> {
        Self::new(raw.p, raw.q)
    }
}

impl RecordedPair {
    pub fn new(p: Tableau<u32>, q: SetTableau) -> Result<Self> {
        check_decreasing_normal(&p)?;
        if !q.is_rsvt() {
            return Err(Error::InvalidTableau("recording tableau is not reverse set-valued".into()));
        }
        if !p.cells().keys().eq(q.cells().keys()) {
            return Err(Error::InvalidPair("P and Q have different shapes".into()));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> &Tableau<u32> {
        &self.p
    }

    pub fn q(&self) -> &SetTableau {
        &self.q
    }
}

/// One step of `Insert`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionStep {
    pub letter: u32,
    pub record: u32,
    pub outcome: InsertionOutcome,
}

/// `Insert(a, i)`.
pub fn insert_pair(pair: &CompatiblePair) -> RecordedPair {
    insert_pair_traced(pair).0
}

pub fn insert_pair_traced(pair: &CompatiblePair) -> (RecordedPair, Vec<InsertionStep>) {
    let mut p = Tableau::empty();
    let mut q: BTreeMap<(usize, usize), CellSet> = BTreeMap::new();
    let mut steps = Vec::with_capacity(pair.len());
    for (&x, &y) in pair.a.letters().iter().zip(pair.i.letters()) {
        let outcome = hecke_insert_one(&p, x).expect("insertion into a decreasing tableau");
        q.entry(outcome.end_box).or_default().insert(y);
        p = outcome.tableau.clone();
        steps.push(InsertionStep { letter: x, record: y, outcome });
    }
    let rp = RecordedPair { p, q: Tableau::from_map_unchecked(q) };
    debug_assert!(rp.q.is_rsvt(), "recording tableau {:?}", rp.q);
    (rp, steps)
}

/// `RevInsert(P, Q)`: repeatedly removes the rightmost occurrence of the
/// smallest value of `Q` and reverse inserts from that box.
pub fn rev_insert(rp: &RecordedPair) -> Result<CompatiblePair> {
    let mut p = rp.p.clone();
    let mut q = rp.q.cells().clone();
    let mut a = Vec::with_capacity(rp.q.weight().size() as usize);
    let mut i = Vec::with_capacity(a.capacity());
    while let Some(y) = q.values().map(|s| *s.first().expect("nonempty")).min() {
        let b = *q
            .iter()
            .filter(|(_, s)| s.contains(&y))
            .map(|(b, _)| b)
            .max_by_key(|&&(r, c)| (c, std::cmp::Reverse(r)))
            .expect("value present");
        let cell = q.get_mut(&b).expect("box present");
        cell.remove(&y);
        let grew = cell.is_empty();
        if grew {
            q.remove(&b);
        }
        let (p2, x) = reverse_hecke_insert_one(&p, b, grew)?;
        p = p2;
        a.push(x);
        i.push(y);
    }
    if !p.is_empty() {
        return Err(Error::InvalidPair("P and Q have different shapes".into()));
    }
    a.reverse();
    i.reverse();
    CompatiblePair::new(Word::from_letters(a), Word::from_letters(i))
}

/// Restrictions applied by [`enumerate_compatible`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairFilter {
    /// Keep only bounded pairs.
    pub bounded: bool,
    /// Keep only pairs whose `a` has this Hecke product.
    pub permutation: Option<Permutation>,
    /// Keep only bounded pairs inserting to this `P` tableau.
    pub tableau: Option<Tableau<u32>>,
}

impl PairFilter {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn bounded() -> Self {
        Self { bounded: true, ..Self::default() }
    }

    pub fn permutation(w: Permutation) -> Self {
        Self { permutation: Some(w), ..Self::default() }
    }

    pub fn tableau(p: Tableau<u32>) -> Self {
        Self { bounded: true, tableau: Some(p), ..Self::default() }
    }
}

/// All compatible pairs of length `<= max_len` with letters `<= max_letter`
/// passing `filter`. A pair is a choice, for each value `v` of `i` from
/// `max_letter` down to 1, of the strictly increasing run of `a` letters
/// recorded by `v`.
pub fn enumerate_compatible(max_len: usize, max_letter: u32, filter: &PairFilter) -> Vec<CompatiblePair> {
    struct Search<'a> {
        max_len: usize,
        max_letter: u32,
        bounded: bool,
        // the product of a prefix is below the product of the whole word
        target: Option<&'a Permutation>,
        a: Vec<u32>,
        i: Vec<u32>,
        out: Vec<CompatiblePair>,
    }

    impl Search<'_> {
        fn go(&mut self, v: u32, prod: &Permutation) {
            if v == 0 {
                if self.target.is_none_or(|w| prod == w) {
                    let (a, i) = (Word::from_letters(self.a.clone()), Word::from_letters(self.i.clone()));
                    self.out.push(CompatiblePair { a, i });
                }
                return;
            }
            let lo = if self.bounded { v } else { 1 };
            self.run(v, lo, prod);
        }

        /// Extends the run of `v`-records with letters `>= from`.
        fn run(&mut self, v: u32, from: u32, prod: &Permutation) {
            self.go(v - 1, prod);
            if self.a.len() == self.max_len {
                return;
            }
            for l in from..=self.max_letter {
                let next = prod.hecke_right_mul(l);
                if self.target.is_some_and(|w| !next.bruhat_le(w)) {
                    continue;
                }
                self.a.push(l);
                self.i.push(v);
                self.run(v, l + 1, &next);
                self.a.pop();
                self.i.pop();
            }
        }
    }

    let mut search = Search {
        max_len,
        max_letter,
        bounded: filter.bounded || filter.tableau.is_some(),
        target: filter.permutation.as_ref(),
        a: Vec::new(),
        i: Vec::new(),
        out: Vec::new(),
    };
    search.go(max_letter, &Permutation::identity());
    let mut out = search.out;
    out.retain(|pair| filter.tableau.as_ref().is_none_or(|p| insert_pair(pair).p == *p));
    out.sort();
    out
}
