//! Shapes, tableaux with singleton or set-valued cells, validation
//! predicates, the column superstandard and column reading tableaux, and
//! exhaustive enumerators.

mod enumerate;
mod shape;
mod special;
#[allow(clippy::module_inception)]
mod tableau;

pub use enumerate::{
    all_decreasing, all_increasing, enumerate, enumerate_rsvt, enumerate_u32, partitions_in_staircase,
    partitions_inside,
    TableauKind,
};
pub use shape::{Partition, SkewShape};
pub use special::{special_tableau, Order, SpecialKind};
pub use tableau::{Cell, CellSet, SetTableau, Tableau};
