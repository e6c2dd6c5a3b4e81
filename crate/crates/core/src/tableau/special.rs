use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{SkewShape, Tableau};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpecialKind {
    /// Column superstandard: columns filled left to right, each top to bottom.
    Css,
    /// Column reading.
    Cr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Order {
    Increasing,
    Decreasing,
}

/// The increasing (or, complemented, decreasing) CSS or CR filling of a
/// shape. CR is defined for normal and antinormal shapes.
pub fn special_tableau(kind: SpecialKind, shape: &SkewShape, order: Order) -> Result<Tableau<u32>> {
    let t = match kind {
        SpecialKind::Css => css(shape),
        SpecialKind::Cr if shape.is_antinormal() => cr_antinormal(shape),
        SpecialKind::Cr if shape.is_normal() => {
            let rows = shape.outer().len();
            let cols = shape.outer().first_part();
            let rotated = Tableau::from_map_unchecked(
                shape.boxes().into_iter().map(|(r, c)| ((rows + 1 - r, cols + 1 - c), 0u32)).collect(),
            )
            .shape();
            cr_antinormal(&rotated).rotate(rows, cols).complement(shape.size() as u32)
        }
        SpecialKind::Cr => return Err(Error::NotNormal),
    };
    Ok(match order {
        Order::Increasing => t,
        Order::Decreasing => t.complement(shape.size() as u32),
    })
}

fn css(shape: &SkewShape) -> Tableau<u32> {
    let mut boxes = shape.boxes();
    boxes.sort_by_key(|&(r, c)| (c, r));
    Tableau::from_map_unchecked(boxes.into_iter().zip(1..).collect())
}

/// Rounds: each round takes the leftmost unfilled box of every row, rows
/// top to bottom.
fn cr_antinormal(shape: &SkewShape) -> Tableau<u32> {
    let mut rows: Vec<Vec<(usize, usize)>> = vec![Vec::new(); shape.outer().len()];
    for b in shape.boxes() {
        rows[b.0 - 1].push(b);
    }
    let mut cells = BTreeMap::new();
    let mut next = 1;
    for round in 0.. {
        let mut any = false;
        for row in &rows {
            if let Some(&b) = row.get(round) {
                cells.insert(b, next);
                next += 1;
                any = true;
            }
        }
        if !any {
            break;
        }
    }
    Tableau::from_map_unchecked(cells)
}
