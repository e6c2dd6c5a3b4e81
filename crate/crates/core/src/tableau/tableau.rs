use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Partition, SkewShape};
use crate::combinatorics::{Composition, Word};
use crate::{Error, Result};

/// Contents of one box: a single value or a nonempty set of values.
pub trait Cell: Clone + Eq + Ord + fmt::Debug + Send + Sync {
    fn min_value(&self) -> u32;
    fn max_value(&self) -> u32;
    /// Values in increasing order.
    fn values(&self) -> Vec<u32>;
    fn count(&self) -> usize;
    fn from_values(values: &[u32]) -> Result<Self>;
    fn render(&self) -> String;
}

pub type CellSet = BTreeSet<u32>;

impl Cell for u32 {
    fn min_value(&self) -> u32 {
        *self
    }
    fn max_value(&self) -> u32 {
        *self
    }
    fn values(&self) -> Vec<u32> {
        vec![*self]
    }
    fn count(&self) -> usize {
        1
    }
    fn from_values(values: &[u32]) -> Result<Self> {
        match values {
            [v] if *v > 0 => Ok(*v),
            _ => Err(Error::InvalidTableau(format!("expected one positive value, got {values:?}"))),
        }
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Cell for CellSet {
    fn min_value(&self) -> u32 {
        *self.first().expect("cells are nonempty")
    }
    fn max_value(&self) -> u32 {
        *self.last().expect("cells are nonempty")
    }
    fn values(&self) -> Vec<u32> {
        self.iter().copied().collect()
    }
    fn count(&self) -> usize {
        self.len()
    }
    fn from_values(values: &[u32]) -> Result<Self> {
        if values.is_empty() || values.contains(&0) {
            return Err(Error::InvalidTableau(format!("bad cell {values:?}")));
        }
        Ok(values.iter().copied().collect())
    }
    fn render(&self) -> String {
        if self.len() == 1 {
            self.min_value().to_string()
        } else {
            format!("{{{}}}", self.iter().rev().join(","))
        }
    }
}

/// A filling of a skew shape. Coordinates are 1-based `(row, col)`, row 1 on
/// top. The shape is determined by the set of filled boxes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau<C = u32> {
    cells: BTreeMap<(usize, usize), C>,
}

pub type SetTableau = Tableau<CellSet>;

impl<C: Cell> Default for Tableau<C> {
    fn default() -> Self {
        Self { cells: BTreeMap::new() }
    }
}

impl<C: Cell> Tableau<C> {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a tableau from its boxes; they must form a skew shape.
    pub fn from_map(cells: BTreeMap<(usize, usize), C>) -> Result<Self> {
        SkewShape::from_boxes(cells.keys())?;
        Ok(Self { cells })
    }

    /// Builds a tableau of the given shape, checking the boxes match.
    pub fn with_shape(shape: &SkewShape, cells: BTreeMap<(usize, usize), C>) -> Result<Self> {
        if !cells.keys().copied().eq(shape.boxes()) {
            return Err(Error::InvalidTableau(format!("cells do not fill the shape {shape}")));
        }
        Ok(Self { cells })
    }

    pub(crate) fn from_map_unchecked(cells: BTreeMap<(usize, usize), C>) -> Self {
        Self { cells }
    }

    /// Normal shape, rows listed top to bottom.
    pub fn from_rows(rows: Vec<Vec<C>>) -> Result<Self> {
        Self::from_map(
            rows.into_iter()
                .enumerate()
                .flat_map(|(r, row)| {
                    row.into_iter().enumerate().map(move |(c, v)| ((r + 1, c + 1), v))
                })
                .collect(),
        )
    }

    /// Skew shape, with `None` marking boxes of the inner shape.
    pub fn from_skew_rows(rows: Vec<Vec<Option<C>>>) -> Result<Self> {
        Self::from_map(
            rows.into_iter()
                .enumerate()
                .flat_map(|(r, row)| {
                    row.into_iter()
                        .enumerate()
                        .filter_map(move |(c, v)| v.map(|v| ((r + 1, c + 1), v)))
                })
                .collect(),
        )
    }

    /// Normal shape, columns listed left to right, each top to bottom.
    pub fn from_columns(cols: Vec<Vec<C>>) -> Result<Self> {
        Self::from_map(
            cols.into_iter()
                .enumerate()
                .flat_map(|(c, col)| {
                    col.into_iter().enumerate().map(move |(r, v)| ((r + 1, c + 1), v))
                })
                .collect(),
        )
    }

    pub fn cells(&self) -> &BTreeMap<(usize, usize), C> {
        &self.cells
    }

    pub fn into_cells(self) -> BTreeMap<(usize, usize), C> {
        self.cells
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&C> {
        self.cells.get(&(r, c))
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::from_boxes(self.cells.keys()).expect("cells form a skew shape")
    }

    /// Number of boxes.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn is_normal_shape(&self) -> bool {
        self.shape().is_normal()
    }

    pub fn num_rows(&self) -> usize {
        self.cells.keys().map(|b| b.0).max().unwrap_or(0)
    }

    pub fn num_cols(&self) -> usize {
        self.cells.keys().map(|b| b.1).max().unwrap_or(0)
    }

    /// Normal shape of a tableau that fills a straight shape from `(1, 1)`.
    pub fn partition(&self) -> Result<Partition> {
        let s = self.shape();
        if !s.inner().is_empty() {
            return Err(Error::NotNormal);
        }
        Ok(s.outer().clone())
    }

    /// Rows top to bottom, `None` for the inner boxes.
    pub fn rows(&self) -> Vec<Vec<Option<C>>> {
        let mut rows = vec![Vec::new(); self.num_rows()];
        for (&(r, c), v) in &self.cells {
            let row = &mut rows[r - 1];
            row.resize(c - 1, None);
            row.push(Some(v.clone()));
        }
        rows
    }

    /// Column contents, left to right, each top to bottom.
    pub fn columns(&self) -> Vec<Vec<C>> {
        let mut cols = vec![Vec::new(); self.num_cols()];
        for (&(_, c), v) in &self.cells {
            cols[c - 1].push(v.clone());
        }
        cols
    }

    pub fn map<D: Cell>(&self, f: impl Fn(&C) -> D) -> Tableau<D> {
        Tableau { cells: self.cells.iter().map(|(&k, v)| (k, f(v))).collect() }
    }

    /// Letter multiplicities over all cells.
    pub fn weight(&self) -> Composition {
        let mut wt = Vec::new();
        for v in self.cells.values().flat_map(|c| c.values()) {
            let i = v as usize;
            if wt.len() < i {
                wt.resize(i, 0);
            }
            wt[i - 1] += 1;
        }
        Composition::new(wt)
    }

    /// Total number of entries minus the number of boxes.
    pub fn excess(&self) -> usize {
        self.cells.values().map(|c| c.count()).sum::<usize>() - self.cells.len()
    }

    pub fn weight_excess(&self) -> (Composition, usize) {
        (self.weight(), self.excess())
    }

    pub fn max_entry(&self) -> u32 {
        self.cells.values().map(|c| c.max_value()).max().unwrap_or(0)
    }

    fn check(&self, ok_right: impl Fn(&C, &C) -> bool, ok_below: impl Fn(&C, &C) -> bool) -> bool {
        self.cells.iter().all(|(&(r, c), v)| {
            self.get(r, c + 1).is_none_or(|w| ok_right(v, w))
                && self.get(r + 1, c).is_none_or(|w| ok_below(v, w))
        })
    }

    /// Reverse set-valued: `min T(s) >= max` of the right neighbour and
    /// `min T(s) > max` of the neighbour below.
    pub fn is_rsvt(&self) -> bool {
        self.check(|v, w| v.min_value() >= w.max_value(), |v, w| v.min_value() > w.max_value())
    }

    fn singletons(&self) -> bool {
        self.cells.values().all(|c| c.count() == 1)
    }

    /// Rows weakly decrease and columns strictly decrease.
    pub fn is_rssyt(&self) -> bool {
        self.singletons() && self.is_rsvt()
    }

    /// Rows and columns strictly decrease.
    pub fn is_decreasing(&self) -> bool {
        self.singletons()
            && self.check(|v, w| v.min_value() > w.min_value(), |v, w| v.min_value() > w.min_value())
    }

    /// Rows and columns strictly increase.
    pub fn is_increasing(&self) -> bool {
        self.singletons()
            && self.check(|v, w| v.min_value() < w.min_value(), |v, w| v.min_value() < w.min_value())
    }

    /// A reverse semistandard tableau whose columns are nested as sets,
    /// column `j` containing column `j + 1`.
    pub fn is_key(&self) -> bool {
        self.is_rssyt()
            && self.shape().inner().is_empty()
            && crate::combinatorics::KeyTableau::from_columns(
                self.columns().iter().map(|c| c.iter().map(|v| v.min_value()).collect()).collect(),
            )
            .is_ok()
    }

    /// Rotation by 180 degrees inside the `rows x cols` rectangle.
    pub fn rotate(&self, rows: usize, cols: usize) -> Self {
        Self {
            cells: self
                .cells
                .iter()
                .map(|(&(r, c), v)| ((rows + 1 - r, cols + 1 - c), v.clone()))
                .collect(),
        }
    }

    /// `T*`: rotation inside the smallest rectangle containing the outer shape.
    pub fn rotate_tight(&self) -> Self {
        self.rotate(self.num_rows(), self.num_cols())
    }

    pub fn transpose(&self) -> Self {
        Self { cells: self.cells.iter().map(|(&(r, c), v)| ((c, r), v.clone())).collect() }
    }

    /// Boxes in columns `lo..=hi`, with coordinates unchanged.
    pub fn restrict_cols(&self, lo: usize, hi: usize) -> Self {
        Self {
            cells: self
                .cells
                .iter()
                .filter(|(&(_, c), _)| lo <= c && c <= hi)
                .map(|(&k, v)| (k, v.clone()))
                .collect(),
        }
    }

    /// `T_{>=j}`.
    pub fn cols_from(&self, j: usize) -> Self {
        self.restrict_cols(j, usize::MAX)
    }

    /// `T_{<=j}`.
    pub fn cols_to(&self, j: usize) -> Self {
        self.restrict_cols(1, j)
    }

    /// Moves the tableau up and left so that some box lies in row 1 and some
    /// box in column 1.
    pub fn strip_empty_margins(&self) -> Self {
        let r0 = self.cells.keys().map(|b| b.0).min().unwrap_or(1);
        let c0 = self.cells.keys().map(|b| b.1).min().unwrap_or(1);
        Self {
            cells: self
                .cells
                .iter()
                .map(|(&(r, c), v)| ((r + 1 - r0, c + 1 - c0), v.clone()))
                .collect(),
        }
    }
}

impl Tableau<u32> {
    /// Columns left to right, each read bottom to top.
    pub fn column_word(&self) -> Word {
        Word::new(self.columns().into_iter().flat_map(|c| c.into_iter().rev()).collect())
            .expect("tableau entries are positive")
    }

    /// Rows of a normal-shape tableau, for display and tests.
    pub fn rows_u32(&self) -> Vec<Vec<u32>> {
        self.rows()
            .into_iter()
            .map(|r| r.into_iter().map(|v| v.unwrap_or(0)).collect())
            .collect()
    }

    /// Replaces every value `v` by `n + 1 - v`.
    pub fn complement(&self, n: u32) -> Self {
        self.map(|&v| n + 1 - v)
    }

    pub fn to_set_tableau(&self) -> SetTableau {
        self.map(|&v| CellSet::from([v]))
    }
}

impl SetTableau {
    /// `L(T)`: every cell replaced by its largest value.
    pub fn lmap(&self) -> Tableau<u32> {
        self.map(|c| c.max_value())
    }

    pub fn to_singletons(&self) -> Result<Tableau<u32>> {
        if self.cells.values().any(|c| c.len() != 1) {
            return Err(Error::InvalidTableau("set-valued cell".into()));
        }
        Ok(self.lmap())
    }
}

impl<C: Cell> fmt::Display for Tableau<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        let rendered: Vec<Vec<String>> = rows
            .iter()
            .map(|r| r.iter().map(|v| v.as_ref().map_or(".".into(), Cell::render)).collect())
            .collect();
        let width = rendered.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for (i, row) in rendered.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", row.iter().map(|s| format!("{s:>width$}")).join(" "))?;
        }
        Ok(())
    }
}

impl<C: Cell> fmt::Debug for Tableau<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                format!(
                    "[{}]",
                    r.iter().map(|v| v.as_ref().map_or("_".into(), Cell::render)).join(",")
                )
            })
            .collect();
        write!(f, "Tableau[{}]", rows.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape_outer: Vec<u32>,
    shape_inner: Vec<u32>,
    cells: Vec<(usize, usize, Vec<u32>)>,
}

impl<C: Cell> Serialize for Tableau<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let shape = self.shape();
        TableauJson {
            shape_outer: shape.outer().parts().to_vec(),
            shape_inner: shape.inner().parts().to_vec(),
            cells: self
                .cells
                .iter()
                .map(|(&(r, c), v)| (r, c, v.values().into_iter().rev().collect()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Cell> Deserialize<'de> for Tableau<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TableauJson::deserialize(d)?;
        let shape = SkewShape::new(
            Partition::new(raw.shape_outer).map_err(D::Error::custom)?,
            Partition::new(raw.shape_inner).map_err(D::Error::custom)?,
        )
        .map_err(D::Error::custom)?;
        let mut cells = BTreeMap::new();
        for (r, c, vals) in raw.cells {
            let cell = C::from_values(&vals).map_err(D::Error::custom)?;
            if cells.insert((r, c), cell).is_some() {
                return Err(D::Error::custom(format!("duplicate cell ({r},{c})")));
            }
        }
        Self::with_shape(&shape, cells).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[u32]]) -> Tableau<u32> {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn set(vals: &[u32]) -> CellSet {
        vals.iter().copied().collect()
    }

    #[test]
    fn column_word_examples() {
        assert!(Tableau::<u32>::empty().column_word().is_empty());
        assert_eq!(t(&[&[2, 1], &[1]]).column_word().letters(), &[1, 2, 1]);
        let cr = t(&[&[1, 2, 4, 7], &[3, 5, 8], &[6, 9]]);
        assert_eq!(cr.column_word().letters(), &[6, 3, 1, 9, 5, 2, 8, 4, 7]);
    }

    #[test]
    fn lmap_and_weight() {
        let rsvt = SetTableau::from_rows(vec![vec![set(&[3, 2]), set(&[2, 1])], vec![set(&[1])]])
            .unwrap();
        assert!(rsvt.is_rsvt());
        let l = rsvt.lmap();
        assert_eq!(l.rows_u32(), vec![vec![3, 2], vec![1]]);
        assert!(l.is_rssyt());
        assert_eq!(rsvt.weight_excess(), (Composition::new(vec![2, 2, 1]), 2));
        assert_eq!(l.excess() + rsvt.excess(), 2);
        assert_eq!(rsvt.weight().size(), l.weight().size() + rsvt.excess() as u32);
        let single = SetTableau::from_rows(vec![vec![set(&[2, 1])]]).unwrap();
        assert_eq!(single.lmap().rows_u32(), vec![vec![2]]);
        assert_eq!(Tableau::<u32>::empty().weight_excess(), (Composition::default(), 0));
        assert_eq!(t(&[&[2, 1]]).weight_excess(), (Composition::new(vec![1, 1]), 0));
    }

    #[test]
    fn predicates() {
        let d = t(&[&[3, 1], &[2]]);
        assert!(d.is_decreasing() && d.is_rssyt() && !d.is_increasing());
        let r = t(&[&[2, 2], &[1]]);
        assert!(!r.is_decreasing() && r.is_rssyt());
        let i = t(&[&[1, 2], &[2]]);
        assert!(i.is_increasing() && !i.is_rssyt());
        assert!(t(&[&[3, 3], &[1]]).is_key());
        assert!(!t(&[&[3, 2], &[1]]).is_key());
        let bad = SetTableau::from_rows(vec![vec![set(&[2, 1]), set(&[2])]]).unwrap();
        assert!(!bad.is_rsvt());
    }

    #[test]
    fn skew_rows_and_rotation() {
        let s = Tableau::from_skew_rows(vec![vec![None, None, Some(1u32)], vec![None, Some(2), Some(3)]])
            .unwrap();
        assert_eq!(s.shape().inner().parts(), &[2, 1]);
        let rot = s.rotate_tight();
        assert_eq!(rot.rows_u32(), vec![vec![3, 2], vec![1]]);
        assert_eq!(rot.rotate(2, 3), s);
        assert!(Tableau::from_rows(vec![vec![1u32], vec![2, 3]]).is_err());
    }

    #[test]
    fn column_restrictions() {
        let d = t(&[&[5, 3, 1], &[4, 2], &[1]]);
        assert_eq!(d.cols_from(2).strip_empty_margins().rows_u32(), vec![vec![3, 1], vec![2]]);
        assert_eq!(d.cols_to(1).rows_u32(), vec![vec![5], vec![4], vec![1]]);
        assert_eq!(d.transpose().rows_u32(), vec![vec![5, 4, 1], vec![3, 2], vec![1]]);
    }

    #[test]
    fn json_roundtrip() {
        let s = Tableau::from_skew_rows(vec![vec![None, Some(2u32)], vec![Some(1)]]).unwrap();
        let js = serde_json::to_value(&s).unwrap();
        assert_eq!(
            js,
            serde_json::json!({"shape_outer":[2,1],"shape_inner":[1],"cells":[[1,2,[2]],[2,1,[1]]]})
        );
        let back: Tableau<u32> = serde_json::from_value(js).unwrap();
        assert_eq!(back, s);
        let sv: SetTableau = serde_json::from_str(
            r#"{"shape_outer":[1],"shape_inner":[],"cells":[[1,1,[2,1]]]}"#,
        )
        .unwrap();
        assert_eq!(sv.excess(), 1);
        assert!(serde_json::from_str::<Tableau<u32>>(
            r#"{"shape_outer":[1],"shape_inner":[],"cells":[[1,1,[2,1]]]}"#
        )
        .is_err());
        assert!(serde_json::from_str::<Tableau<u32>>(
            r#"{"shape_outer":[2],"shape_inner":[],"cells":[[1,1,[2]]]}"#
        )
        .is_err());
    }
}
