use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Cell, CellSet, Partition, SetTableau, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableauKind {
    Decreasing,
    Increasing,
    Rssyt,
    Rsvt,
    Key,
}

/// All tableaux of the given kind and shape with entries `<= max_entry`.
/// `max_excess` bounds the total excess of RSVTs and is ignored otherwise.
/// Cells are scanned row by row and tried in increasing order.
pub fn enumerate(
    kind: TableauKind,
    shape: &Partition,
    max_entry: u32,
    max_excess: Option<usize>,
) -> Vec<SetTableau> {
    match kind {
        TableauKind::Rsvt => enumerate_rsvt(shape, max_entry, max_excess.unwrap_or(usize::MAX)),
        _ => enumerate_u32(kind, shape, max_entry).iter().map(Tableau::to_set_tableau).collect(),
    }
}

/// Singleton-valued enumeration; `kind` must not be `Rsvt`.
pub fn enumerate_u32(kind: TableauKind, shape: &Partition, max_entry: u32) -> Vec<Tableau<u32>> {
    let allowed: fn(u32, Option<u32>, Option<u32>) -> bool = match kind {
        TableauKind::Decreasing => |v, l, u| l.is_none_or(|l| v < l) && u.is_none_or(|u| v < u),
        TableauKind::Increasing => |v, l, u| l.is_none_or(|l| v > l) && u.is_none_or(|u| v > u),
        TableauKind::Rssyt | TableauKind::Key => {
            |v, l, u| l.is_none_or(|l| v <= l) && u.is_none_or(|u| v < u)
        }
        TableauKind::Rsvt => panic!("use enumerate_rsvt for set-valued tableaux"),
    };
    let boxes = shape.boxes();
    let mut out = Vec::new();
    let mut cells = BTreeMap::new();
    fill(&boxes, 0, max_entry, allowed, &mut cells, &mut out);
    if kind == TableauKind::Key {
        out.retain(|t| t.is_key());
    }
    out
}

fn fill(
    boxes: &[(usize, usize)],
    k: usize,
    max: u32,
    allowed: fn(u32, Option<u32>, Option<u32>) -> bool,
    cells: &mut BTreeMap<(usize, usize), u32>,
    out: &mut Vec<Tableau<u32>>,
) {
    let Some(&(r, c)) = boxes.get(k) else {
        out.push(Tableau::from_map_unchecked(cells.clone()));
        return;
    };
    let left = cells.get(&(r, c.wrapping_sub(1))).copied();
    let up = cells.get(&(r.wrapping_sub(1), c)).copied();
    for v in 1..=max {
        if allowed(v, left, up) {
            cells.insert((r, c), v);
            fill(boxes, k + 1, max, allowed, cells, out);
        }
    }
    cells.remove(&(r, c));
}

/// Reverse set-valued tableaux of shape `shape` with entries `<= max_entry`
/// and excess `<= max_excess`.
pub fn enumerate_rsvt(shape: &Partition, max_entry: u32, max_excess: usize) -> Vec<SetTableau> {
    fn go(
        boxes: &[(usize, usize)],
        k: usize,
        max: u32,
        excess_left: usize,
        cells: &mut BTreeMap<(usize, usize), CellSet>,
        out: &mut Vec<SetTableau>,
    ) {
        let Some(&(r, c)) = boxes.get(k) else {
            out.push(Tableau::from_map_unchecked(cells.clone()));
            return;
        };
        let mut bound = max;
        if let Some(l) = cells.get(&(r, c.wrapping_sub(1))) {
            bound = bound.min(l.min_value());
        }
        if let Some(u) = cells.get(&(r.wrapping_sub(1), c)) {
            bound = bound.min(u.min_value() - 1);
        }
        let mut subsets: Vec<CellSet> = (1u64..1 << bound)
            .filter(|m| (m.count_ones() as usize) <= excess_left.saturating_add(1))
            .map(|m| (1..=bound).filter(|&v| m >> (v - 1) & 1 == 1).collect())
            .collect();
        subsets.sort();
        for s in subsets {
            let used = s.len() - 1;
            cells.insert((r, c), s);
            go(boxes, k + 1, max, excess_left - used, cells, out);
        }
        cells.remove(&(r, c));
    }
    assert!(max_entry < 64, "entry bound too large for set enumeration");
    let mut out = Vec::new();
    go(&shape.boxes(), 0, max_entry, max_excess, &mut BTreeMap::new(), &mut out);
    out
}

/// All partitions contained in `outer`, in lexicographic order.
pub fn partitions_inside(outer: &Partition) -> Vec<Partition> {
    fn go(outer: &[u32], prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(prefix.clone()).expect("weakly decreasing"));
        let r = prefix.len();
        if r == outer.len() {
            return;
        }
        let cap = prefix.last().map_or(outer[r], |&p| p.min(outer[r]));
        for v in 1..=cap {
            prefix.push(v);
            go(outer, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(outer.parts(), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All partitions inside the staircase `(m, m-1, ..., 1)`.
pub fn partitions_in_staircase(m: u32) -> Vec<Partition> {
    partitions_inside(&Partition::new((1..=m).rev().collect()).expect("staircase"))
}

/// Decreasing tableaux of every shape with entries `<= m`.
pub fn all_decreasing(m: u32) -> Vec<Tableau<u32>> {
    partitions_in_staircase(m)
        .iter()
        .flat_map(|l| enumerate_u32(TableauKind::Decreasing, l, m))
        .collect()
}

/// Increasing tableaux of every shape with entries `<= m`.
pub fn all_increasing(m: u32) -> Vec<Tableau<u32>> {
    partitions_in_staircase(m)
        .iter()
        .flat_map(|l| enumerate_u32(TableauKind::Increasing, l, m))
        .collect()
}
