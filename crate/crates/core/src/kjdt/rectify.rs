use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::chain::{jdt_backward, jdt_forward, StripChain};
use crate::tableau::{special_tableau, Order, Partition, SkewShape, SpecialKind, Tableau};
use crate::{Error, Result};

/// Whether a tableau's values increase or decrease along rows and columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
}

impl Monotonicity {
    /// Tableaux with at most one box are reported as increasing.
    pub fn of(t: &Tableau<u32>) -> Result<Self> {
        if t.is_increasing() {
            Ok(Self::Increasing)
        } else if t.is_decreasing() {
            Ok(Self::Decreasing)
        } else {
            Err(Error::InvalidTableau("neither increasing nor decreasing".into()))
        }
    }
}

fn normalized(t: &Tableau<u32>) -> Result<(Tableau<u32>, Partition)> {
    if !t.shape().is_normal() {
        return Err(Error::NotNormal);
    }
    let t = t.strip_empty_margins();
    let lambda = t.partition()?;
    Ok((t, lambda))
}

fn outer_complement(lambda: &Partition) -> SkewShape {
    let rect = Partition::rectangle(lambda.len(), lambda.first_part());
    SkewShape::new(rect, lambda.clone()).expect("a partition fits its tight rectangle")
}

/// `J^↘(T)`: slides a normal-shape tableau into the far corner of its tight
/// rectangle, using `CSS(R/λ)` for increasing and `CR(R/λ)` for decreasing
/// tableaux.
pub fn anti_rectify(t: &Tableau<u32>) -> Result<Tableau<u32>> {
    let mono = Monotonicity::of(t)?;
    let (t, lambda) = normalized(t)?;
    let kind = match mono {
        Monotonicity::Increasing => SpecialKind::Css,
        Monotonicity::Decreasing => SpecialKind::Cr,
    };
    let order = special_tableau(kind, &outer_complement(&lambda), Order::Increasing)?;
    anti_rectify_with(&t, &order)
}

/// `J^↘_U(T)` for an arbitrary increasing rectification order `U` whose
/// shape extends that of `T`.
pub fn anti_rectify_with(t: &Tableau<u32>, order: &Tableau<u32>) -> Result<Tableau<u32>> {
    let tc = StripChain::from_tableau(t, Monotonicity::of(t)?)?;
    let uc = StripChain::from_tableau(order, Monotonicity::Increasing)?;
    Ok(jdt_forward(&tc, &uc)?.0.to_tableau())
}

/// The decreasing anti-rectification one round at a time: each round slides
/// into the leftmost unused box of every row of `R/λ`, rows top to bottom.
/// Returns the tableau before the first round and after each round.
pub fn anti_rectify_frames(t: &Tableau<u32>) -> Result<Vec<Tableau<u32>>> {
    if !t.is_decreasing() {
        return Err(Error::InvalidTableau("expected a decreasing tableau".into()));
    }
    let (t, lambda) = normalized(t)?;
    let mut free: BTreeSet<(usize, usize)> = outer_complement(&lambda).boxes().into_iter().collect();
    let mut current = StripChain::from_tableau(&t, Monotonicity::Decreasing)?;
    let mut frames = vec![t];
    while !free.is_empty() {
        for r in 1..=lambda.len() {
            let Some(&b) = free.iter().find(|b| b.0 == r) else { continue };
            free.remove(&b);
            let e = StripChain::from_tableau(
                &Tableau::from_map_unchecked(BTreeMap::from([(b, 1)])),
                Monotonicity::Increasing,
            )?;
            current = jdt_forward(&current, &e)?.0;
        }
        frames.push(current.to_tableau());
    }
    Ok(frames)
}

/// `J^↖(T)`: slides a skew tableau to normal shape, using `CR(μ)` for
/// increasing and `CSS(μ)` for decreasing tableaux. Empty rows above and
/// columns left of the boxes are discarded first.
pub fn rectify(t: &Tableau<u32>) -> Result<Tableau<u32>> {
    let mono = Monotonicity::of(t)?;
    let t = t.strip_empty_margins();
    let mu = t.shape().inner().clone();
    let kind = match mono {
        Monotonicity::Increasing => SpecialKind::Cr,
        Monotonicity::Decreasing => SpecialKind::Css,
    };
    let order = special_tableau(kind, &SkewShape::normal(mu), Order::Increasing)?;
    rectify_with(&t, &order)
}

/// `J^↖_S(T)` for an increasing rectification order `S` of the inner shape.
pub fn rectify_with(t: &Tableau<u32>, order: &Tableau<u32>) -> Result<Tableau<u32>> {
    let sc = StripChain::from_tableau(order, Monotonicity::Increasing)?;
    let tc = StripChain::from_tableau(t, Monotonicity::of(t)?)?;
    Ok(jdt_backward(&sc, &tc)?.0.to_tableau())
}

fn partition_shape(t: &Tableau<u32>) -> Result<Partition> {
    t.partition()
}

/// `T♯ = J^↘(T)*` for a decreasing tableau of partition shape.
pub fn sharp(t: &Tableau<u32>) -> Result<Tableau<u32>> {
    if !t.is_decreasing() {
        return Err(Error::InvalidTableau("expected a decreasing tableau".into()));
    }
    let lambda = partition_shape(t)?;
    Ok(anti_rectify(t)?.rotate(lambda.len(), lambda.first_part()))
}

/// `T♭ = J^↖(T*)` for an increasing tableau of partition shape.
pub fn flat(t: &Tableau<u32>) -> Result<Tableau<u32>> {
    if !t.is_increasing() {
        return Err(Error::InvalidTableau("expected an increasing tableau".into()));
    }
    let lambda = partition_shape(t)?;
    rectify(&t.rotate(lambda.len(), lambda.first_part()))
}

/// `T♯` computed as `J^↖(T*)`.
pub fn sharp_alt(t: &Tableau<u32>) -> Result<Tableau<u32>> {
    if !t.is_decreasing() {
        return Err(Error::InvalidTableau("expected a decreasing tableau".into()));
    }
    let lambda = partition_shape(t)?;
    rectify(&t.rotate(lambda.len(), lambda.first_part()))
}

/// `T♭` computed as `J^↘(T)*`.
pub fn flat_alt(t: &Tableau<u32>) -> Result<Tableau<u32>> {
    if !t.is_increasing() {
        return Err(Error::InvalidTableau("expected an increasing tableau".into()));
    }
    let lambda = partition_shape(t)?;
    Ok(anti_rectify(t)?.rotate(lambda.len(), lambda.first_part()))
}

/// A random increasing filling of a set of boxes forming a skew shape: a
/// uniformly chosen linear extension, with consecutive labels randomly merged
/// whenever their boxes share no row or column.
pub fn random_order(boxes: &[(usize, usize)], rng: &mut impl Rng) -> Tableau<u32> {
    let set: BTreeSet<_> = boxes.iter().copied().collect();
    let mut done = BTreeSet::new();
    let mut order = Vec::with_capacity(set.len());
    while done.len() < set.len() {
        let avail: Vec<_> = set
            .iter()
            .filter(|&&(r, c)| {
                !done.contains(&(r, c))
                    && (!set.contains(&(r.wrapping_sub(1), c)) || done.contains(&(r - 1, c)))
                    && (!set.contains(&(r, c.wrapping_sub(1))) || done.contains(&(r, c - 1)))
            })
            .copied()
            .collect();
        let b = avail[rng.gen_range(0..avail.len())];
        done.insert(b);
        order.push(b);
    }
    let mut cells = BTreeMap::new();
    let mut label = 0;
    let mut group: Vec<(usize, usize)> = Vec::new();
    for b in order {
        let fits = !group.is_empty() && group.iter().all(|g| g.0 != b.0 && g.1 != b.1);
        if !(fits && rng.gen_bool(0.5)) {
            label += 1;
            group.clear();
        }
        group.push(b);
        cells.insert(b, label);
    }
    Tableau::from_map_unchecked(cells)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::tableau::{enumerate_u32, partitions_inside, TableauKind};

    fn t(rows: &[&[u32]]) -> Tableau<u32> {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn skew(rows: &[&[u32]]) -> Tableau<u32> {
        Tableau::from_skew_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| (v != 0).then_some(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    pub(crate) fn worked_t() -> Tableau<u32> {
        t(&[&[9, 8, 7, 5, 3], &[7, 5, 4, 3], &[4, 2, 1], &[3], &[1]])
    }

    fn worked_anti() -> Tableau<u32> {
        skew(&[&[0, 0, 0, 0, 7], &[0, 0, 0, 0, 5], &[0, 0, 8, 7, 3], &[0, 9, 5, 4, 2], &[9, 7, 3, 2, 1]])
    }

    #[test]
    fn worked_anti_rectification() {
        assert_eq!(anti_rectify(&worked_t()).unwrap(), worked_anti());
    }

    #[test]
    fn worked_sharp_and_flat() {
        let s = sharp(&worked_t()).unwrap();
        assert_eq!(
            s.rows_u32(),
            vec![vec![1, 2, 3, 7, 9], vec![2, 4, 5, 9], vec![3, 7, 8], vec![5], vec![7]]
        );
        assert_eq!(flat(&s).unwrap(), worked_t());
        assert_eq!(sharp_alt(&worked_t()).unwrap(), s);
        assert_eq!(flat_alt(&s).unwrap(), worked_t());
        // rectifying (T♯)* with CSS of its inner shape recovers T
        let rotated = s.rotate(5, 5);
        assert_eq!(rotated, worked_anti());
        let css = special_tableau(
            SpecialKind::Css,
            &SkewShape::normal(Partition::new(vec![4, 4, 2, 1]).unwrap()),
            Order::Increasing,
        )
        .unwrap();
        assert_eq!(css.rows_u32(), vec![vec![1, 5, 8, 10], vec![2, 6, 9, 11], vec![3, 7], vec![4]]);
        assert_eq!(rectify_with(&rotated, &css).unwrap(), worked_t());
    }

    #[test]
    fn worked_iterations() {
        let frames = anti_rectify_frames(&worked_t()).unwrap();
        assert_eq!(frames.len(), 5);
        assert_eq!(frames[0], worked_t());
        assert_eq!(
            frames[1],
            skew(&[&[0, 9, 8, 7, 5], &[0, 7, 5, 4, 3], &[0, 4, 2, 1], &[0, 3], &[9, 1]])
        );
        assert_eq!(
            frames[2],
            skew(&[&[0, 0, 8, 7, 5], &[0, 0, 5, 4, 3], &[0, 0, 4, 2, 1], &[0, 9, 3], &[9, 7, 1]])
        );
        assert_eq!(
            frames[3],
            skew(&[&[0, 0, 0, 7, 5], &[0, 0, 0, 5, 3], &[0, 0, 8, 4, 1], &[0, 9, 5, 2], &[9, 7, 3, 1]])
        );
        assert_eq!(frames[4], worked_anti());
    }

    #[test]
    fn trivial_cases() {
        let one = t(&[&[4]]);
        assert_eq!(anti_rectify(&one).unwrap(), one);
        assert_eq!(sharp(&one).unwrap(), one);
        assert_eq!(flat(&one).unwrap(), one);
        assert_eq!(rectify(&worked_t()).unwrap(), worked_t());
        assert_eq!(rectify(&skew(&[&[0, 5]])).unwrap(), t(&[&[5]]));
        assert!(anti_rectify(&skew(&[&[0, 2], &[1]])).is_err());
        assert!(sharp(&t(&[&[1, 2]])).is_err());
    }

    #[test]
    fn sharp_and_flat_are_inverse_bijections() {
        for shape in partitions_inside(&Partition::rectangle(3, 3)) {
            let decs = enumerate_u32(TableauKind::Decreasing, &shape, 4);
            let mut images = BTreeSet::new();
            for d in &decs {
                let s = sharp(d).unwrap();
                assert!(s.is_increasing(), "{d:?}");
                assert_eq!(s.partition().unwrap(), shape);
                assert_eq!(flat(&s).unwrap(), *d);
                assert_eq!(sharp_alt(d).unwrap(), s);
                assert_eq!(
                    s.column_word().hecke_product(),
                    d.column_word().reverse().hecke_product()
                );
                images.insert(s);
            }
            let incs = enumerate_u32(TableauKind::Increasing, &shape, 4);
            assert_eq!(images.len(), incs.len());
            for i in &incs {
                assert_eq!(flat_alt(i).unwrap(), flat(i).unwrap());
            }
        }
    }

    #[test]
    fn frames_end_at_the_cr_anti_rectification() {
        for shape in partitions_inside(&Partition::rectangle(3, 3)) {
            for d in enumerate_u32(TableauKind::Decreasing, &shape, 4) {
                let frames = anti_rectify_frames(&d).unwrap();
                assert_eq!(frames.last().unwrap(), &anti_rectify(&d).unwrap());
            }
        }
    }

    #[test]
    fn random_orders_are_increasing() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let shape = outer_complement(&Partition::new(vec![3, 1]).unwrap());
        for _ in 0..50 {
            let o = random_order(&shape.boxes(), &mut rng);
            assert!(o.is_increasing());
            assert_eq!(o.shape(), shape);
        }
    }
}
