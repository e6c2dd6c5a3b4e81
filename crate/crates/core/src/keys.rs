//! The `★` action of words on sets, right keys of decreasing tableaux
//! (by `★`, by K-jeu-de-taquin and by reverse Hecke insertion), left keys
//! of reverse semistandard tableaux (the `◁` rule) and left keys of
//! increasing tableaux.
//!
//! Keys are returned as [`KeyTableau`]s, whose columns are sets.

use std::collections::BTreeSet;

use rand::Rng;

use crate::combinatorics::{KeyTableau, Word};
use crate::insertion::reverse_hecke_insert_one;
use crate::kjdt::{anti_rectify, anti_rectify_with, random_order};
use crate::tableau::{SkewShape, Tableau};
use crate::{Error, Result};

pub type ColumnSet = BTreeSet<u32>;

/// `S ★ m`: `m` replaces the smallest element `>= m`, or is added if there
/// is none.
pub fn star_letter(s: &mut ColumnSet, m: u32) {
    if let Some(&big) = s.range(m..).next() {
        s.remove(&big);
    }
    s.insert(m);
}

/// `S ★ w`, reading `w` left to right.
pub fn star(s: &ColumnSet, w: &Word) -> ColumnSet {
    let mut out = s.clone();
    for &m in w.letters() {
        star_letter(&mut out, m);
    }
    out
}

fn require_decreasing(t: &Tableau<u32>) -> Result<()> {
    if t.is_decreasing() {
        Ok(())
    } else {
        Err(Error::InvalidTableau("expected a decreasing tableau".into()))
    }
}

fn require_normal(t: &Tableau<u32>) -> Result<()> {
    if t.shape().inner().is_empty() {
        Ok(())
    } else {
        Err(Error::NotNormal)
    }
}

fn key_from_sets(columns: Vec<ColumnSet>) -> Result<KeyTableau> {
    KeyTableau::from_columns(columns.into_iter().map(|c| c.into_iter().collect()).collect())
}

/// `K₊(T)`: column `j` is `∅ ★ word(T_{>=j})`. Skew shapes are allowed.
pub fn right_key(t: &Tableau<u32>) -> Result<KeyTableau> {
    require_decreasing(t)?;
    let cols = (1..=t.num_cols())
        .map(|j| star(&ColumnSet::new(), &t.cols_from(j).column_word()))
        .collect();
    key_from_sets(cols)
}

fn last_column(t: &Tableau<u32>) -> ColumnSet {
    let c = t.num_cols();
    t.cells().iter().filter(|(b, _)| b.1 == c).map(|(_, &v)| v).collect()
}

fn first_column(t: &Tableau<u32>) -> ColumnSet {
    let c = t.cells().keys().map(|b| b.1).min().unwrap_or(1);
    t.cells().iter().filter(|(b, _)| b.1 == c).map(|(_, &v)| v).collect()
}

/// `K₊(T)` with column `j` the last column of the CR anti-rectification of
/// `T_{>=j}`.
pub fn right_key_via_kjdt(t: &Tableau<u32>) -> Result<KeyTableau> {
    require_decreasing(t)?;
    require_normal(t)?;
    let cols = (1..=t.num_cols())
        .map(|j| Ok(last_column(&anti_rectify(&t.cols_from(j))?)))
        .collect::<Result<_>>()?;
    key_from_sets(cols)
}

/// As [`right_key_via_kjdt`], with an independently drawn random
/// rectification order for every column.
pub fn right_key_via_kjdt_random(t: &Tableau<u32>, rng: &mut impl Rng) -> Result<KeyTableau> {
    require_decreasing(t)?;
    require_normal(t)?;
    let mut cols = Vec::new();
    for j in 1..=t.num_cols() {
        let tj = t.cols_from(j).strip_empty_margins();
        let lambda = tj.partition()?;
        let rect = crate::tableau::Partition::rectangle(lambda.len(), lambda.first_part());
        let order = random_order(&SkewShape::new(rect, lambda)?.boxes(), rng);
        cols.push(last_column(&anti_rectify_with(&tj, &order)?));
    }
    key_from_sets(cols)
}

/// The values ejected when reverse inserting, with growth, at the bottom of
/// columns `m, ..., 1` of the transpose of `T`, where `m` is the length of
/// the first column of `T`. They come out strictly decreasing.
pub fn reverse_insertion_column(t: &Tableau<u32>) -> Result<Vec<u32>> {
    require_decreasing(t)?;
    require_normal(t)?;
    let mut cur = t.transpose();
    let m = t.cells().keys().filter(|b| b.1 == 1).count();
    let mut out = Vec::with_capacity(m);
    for k in (1..=m).rev() {
        let h = cur.cells().keys().filter(|b| b.1 == k).count();
        let (next, x) = reverse_hecke_insert_one(&cur, (h, k), true)?;
        cur = next;
        out.push(x);
    }
    Ok(out)
}

/// `K₊(T)` with column `j` read off by reverse insertion into the transpose
/// of `T_{>=j}`.
pub fn right_key_via_reverse_insertion(t: &Tableau<u32>) -> Result<KeyTableau> {
    require_decreasing(t)?;
    require_normal(t)?;
    let cols = (1..=t.num_cols())
        .map(|j| Ok(reverse_insertion_column(&t.cols_from(j).strip_empty_margins())?.into_iter().collect()))
        .collect::<Result<_>>()?;
    key_from_sets(cols)
}

/// `C1 ◁ C2`: for each `a` of `C2` in increasing order, the smallest unused
/// `b` of `C1` with `b >= a` and `b` above the previous choice.
pub fn triangle(c1: &ColumnSet, c2: &ColumnSet) -> Result<ColumnSet> {
    let mut out = ColumnSet::new();
    let mut prev = 0;
    for &a in c2 {
        let Some(&b) = c1.range(a.max(prev + 1)..).next() else {
            return Err(Error::InvalidTableau(format!("{c1:?} ◁ {c2:?} is undefined")));
        };
        out.insert(b);
        prev = b;
    }
    Ok(out)
}

/// `K₋(T)` of a reverse semistandard tableau: column `k` is
/// `C1 ◁ ... ◁ Ck`.
pub fn left_key_rssyt(t: &Tableau<u32>) -> Result<KeyTableau> {
    if !t.is_rssyt() {
        return Err(Error::InvalidTableau("expected a reverse semistandard tableau".into()));
    }
    require_normal(t)?;
    let cols: Vec<ColumnSet> = t.columns().into_iter().map(|c| c.into_iter().collect()).collect();
    let mut key = Vec::with_capacity(cols.len());
    for k in 0..cols.len() {
        let mut acc = cols[k].clone();
        for j in (0..k).rev() {
            acc = triangle(&cols[j], &acc)?;
        }
        key.push(acc);
    }
    key_from_sets(key)
}

/// `K₋(T)` of an increasing tableau: column `j` is the first column of the
/// CSS anti-rectification of `T_{<=j}`.
pub fn left_key_increasing(t: &Tableau<u32>) -> Result<KeyTableau> {
    if !t.is_increasing() {
        return Err(Error::InvalidTableau("expected an increasing tableau".into()));
    }
    require_normal(t)?;
    let cols = (1..=t.num_cols())
        .map(|j| Ok(first_column(&anti_rectify(&t.cols_to(j))?)))
        .collect::<Result<_>>()?;
    key_from_sets(cols)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::combinatorics::Composition;
    use crate::insertion::hecke_insert_one;
    use crate::kjdt::{anti_rectify_frames, sharp};
    use crate::tableau::{all_decreasing, enumerate_u32, partitions_inside, Partition, TableauKind};

    fn set(v: &[u32]) -> ColumnSet {
        v.iter().copied().collect()
    }

    fn word(v: &[u32]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    fn t(rows: &[&[u32]]) -> Tableau<u32> {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn key_rows(k: &KeyTableau) -> Vec<Vec<u32>> {
        k.to_rssyt().rows_u32()
    }

    fn worked() -> Tableau<u32> {
        t(&[&[9, 8, 7, 5, 3], &[7, 5, 4, 3], &[4, 2, 1], &[3], &[1]])
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&set(&[]), &word(&[3, 4, 1, 4])), set(&[1, 4]));
        for w in [[3, 4, 1, 4], [3, 1, 4, 1], [3, 4, 1, 1]] {
            assert_eq!(star(&set(&[3, 4, 7]), &word(&w)), set(&[1, 4, 7]));
        }
        assert_eq!(star(&set(&[2, 5]), &Word::default()), set(&[2, 5]));
    }

    /// Words reachable from `w` by one K-Knuth relation in either direction.
    fn k_knuth_neighbours(w: &[u32]) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let splice = |at: usize, len: usize, new: &[u32]| {
            let mut v = w[..at].to_vec();
            v.extend_from_slice(new);
            v.extend_from_slice(&w[at + len..]);
            v
        };
        for k in 0..w.len() {
            out.push(splice(k, 1, &[w[k], w[k]]));
            if k + 1 < w.len() && w[k] == w[k + 1] {
                out.push(splice(k, 2, &[w[k]]));
            }
            if k + 2 < w.len() {
                let (x, y, z) = (w[k], w[k + 1], w[k + 2]);
                if x == z && x != y {
                    out.push(splice(k, 3, &[y, x, y]));
                }
                // bac <-> bca and acb <-> cab, with a < b < c
                if y < x && x < z || z < x && x < y {
                    out.push(splice(k, 3, &[x, z, y]));
                }
                if x < z && z < y || y < z && z < x {
                    out.push(splice(k, 3, &[y, x, z]));
                }
            }
        }
        out
    }

    proptest! {
        #[test]
        fn star_is_constant_on_k_knuth_classes(
            w in prop::collection::vec(1u32..=5, 0..=6),
            s in prop::collection::btree_set(1u32..=6, 0..=3),
        ) {
            let base = star(&s, &word(&w));
            for v in k_knuth_neighbours(&w) {
                prop_assert_eq!(star(&s, &word(&v)), base.clone(), "{:?} vs {:?}", w, v);
            }
        }

        #[test]
        fn star_grows_under_left_multiplication(
            w in prop::collection::vec(1u32..=5, 0..=6),
            v in prop::collection::vec(1u32..=5, 0..=6),
        ) {
            let wv: Vec<u32> = w.iter().chain(&v).copied().collect();
            prop_assert!(star(&set(&[]), &word(&v)).is_subset(&star(&set(&[]), &word(&wv))));
        }
    }

    #[test]
    fn worked_right_key() {
        let k = right_key(&worked()).unwrap();
        assert_eq!(
            key_rows(&k),
            vec![vec![7, 5, 5, 5, 3], vec![5, 3, 3, 3], vec![3, 1, 1], vec![2], vec![1]]
        );
        assert_eq!(k.weight(), Composition::new(vec![3, 1, 5, 0, 4, 0, 1]));
        assert_eq!(right_key_via_kjdt(&worked()).unwrap(), k);
        assert_eq!(right_key_via_reverse_insertion(&worked()).unwrap(), k);
        let s = sharp(&worked()).unwrap();
        assert_eq!(left_key_increasing(&s).unwrap(), k);
    }

    #[test]
    fn skew_right_keys_of_the_iteration_frames() {
        let frames = anti_rectify_frames(&worked()).unwrap();
        let expected: [[&[u32]; 5]; 4] = [
            [&[7, 7, 5, 5, 5], &[5, 5, 3, 3, 3], &[3, 3, 1, 1], &[2, 2], &[1, 1]],
            [&[7, 7, 7, 5, 5], &[5, 5, 5, 3, 3], &[3, 3, 3, 1, 1], &[2, 2, 2], &[1, 1, 1]],
            [&[7, 7, 7, 7, 5], &[5, 5, 5, 5, 3], &[3, 3, 3, 3, 1], &[2, 2, 2, 2], &[1, 1, 1, 1]],
            [&[7; 5], &[5; 5], &[3; 5], &[2; 5], &[1; 5]],
        ];
        for (frame, rows) in frames[1..].iter().zip(expected) {
            let k = right_key(frame).unwrap();
            assert_eq!(key_rows(&k), rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
            assert_eq!(k.columns().last().unwrap(), &last_column(frame).into_iter().collect::<Vec<_>>());
        }
    }

    #[test]
    fn trivial_keys() {
        let one = t(&[&[4]]);
        let k = KeyTableau::from_columns(vec![vec![4]]).unwrap();
        assert_eq!(right_key(&one).unwrap(), k);
        assert_eq!(right_key_via_kjdt(&one).unwrap(), k);
        assert_eq!(right_key_via_reverse_insertion(&one).unwrap(), k);
        assert_eq!(left_key_increasing(&one).unwrap(), k);
        assert_eq!(left_key_rssyt(&one).unwrap(), k);
        let col = t(&[&[5], &[3], &[2]]);
        assert_eq!(right_key_via_kjdt(&col).unwrap().to_rssyt(), col);
        assert_eq!(right_key(&Tableau::empty()).unwrap(), KeyTableau::default());
    }

    #[test]
    fn left_key_rssyt_examples() {
        assert_eq!(triangle(&set(&[2]), &set(&[1])).unwrap(), set(&[2]));
        let k = left_key_rssyt(&t(&[&[2, 1]])).unwrap();
        assert_eq!(key_rows(&k), vec![vec![2, 2]]);
        assert_eq!(k.weight(), Composition::new(vec![0, 2]));
        let col = t(&[&[2], &[1]]);
        assert_eq!(left_key_rssyt(&col).unwrap().to_rssyt(), col);
        for shape in partitions_inside(&Partition::rectangle(3, 3)) {
            for key in enumerate_u32(TableauKind::Key, &shape, 4) {
                assert_eq!(left_key_rssyt(&key).unwrap().to_rssyt(), key);
                assert_eq!(right_key(&key).ok().map(|k| k.to_rssyt()), key.is_decreasing().then(|| key.clone()));
            }
        }
        assert!(left_key_rssyt(&t(&[&[1, 2]])).is_err());
    }

    #[test]
    fn right_key_procedures_agree_in_a_3x3_box() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut count = 0;
        for shape in partitions_inside(&Partition::rectangle(3, 3)) {
            for d in enumerate_u32(TableauKind::Decreasing, &shape, 4) {
                let k = right_key(&d).unwrap();
                assert_eq!(k.shape(), shape);
                assert_eq!(right_key_via_kjdt(&d).unwrap(), k, "{d:?}");
                assert_eq!(right_key_via_reverse_insertion(&d).unwrap(), k, "{d:?}");
                assert_eq!(right_key_via_kjdt_random(&d, &mut rng).unwrap(), k, "{d:?}");
                let xs = reverse_insertion_column(&d).unwrap();
                assert!(xs.windows(2).all(|w| w[0] > w[1]));
                assert_eq!(left_key_increasing(&sharp(&d).unwrap()).unwrap(), k);
                count += 1;
            }
        }
        assert!(count > 100);
    }

    fn column_or_empty(k: &KeyTableau, c: usize) -> Vec<u32> {
        k.columns().get(c - 1).cloned().unwrap_or_default()
    }

    #[test]
    fn insertion_changes_the_right_key_only_in_the_end_column() {
        for p in all_decreasing(4) {
            let before = right_key(&p).unwrap();
            for x in 1..=4 {
                let out = hecke_insert_one(&p, x).unwrap();
                let after = right_key(&out.tableau).unwrap();
                if !out.grew {
                    assert_eq!(after, before);
                }
                for c in 1..=out.tableau.num_cols() {
                    if c != out.end_box.1 {
                        assert_eq!(column_or_empty(&after, c), column_or_empty(&before, c));
                    }
                }
            }
        }
    }

    #[test]
    fn recorded_insertion_changes_the_left_key_only_in_the_end_column() {
        use crate::insertion::{enumerate_compatible, insert_pair_traced, PairFilter};
        for pair in enumerate_compatible(5, 3, &PairFilter::none()) {
            if pair.is_empty() {
                continue;
            }
            let (rp, steps) = insert_pair_traced(&pair);
            let last = steps.last().unwrap();
            let n = pair.len() - 1;
            let prefix = crate::insertion::CompatiblePair::new(
                Word::new(pair.a().letters()[..n].to_vec()).unwrap(),
                Word::new(pair.i().letters()[..n].to_vec()).unwrap(),
            )
            .unwrap();
            let before = left_key_rssyt(&crate::insertion::insert_pair(&prefix).q().lmap()).unwrap();
            let after = left_key_rssyt(&rp.q().lmap()).unwrap();
            let c = last.outcome.end_box.1;
            if !last.outcome.grew {
                assert_eq!(after, before);
                continue;
            }
            for col in 1..=after.columns().len().max(before.columns().len()) {
                if col != c {
                    assert_eq!(column_or_empty(&after, col), column_or_empty(&before, col));
                }
            }
            let new: ColumnSet = column_or_empty(&after, c).into_iter().collect();
            let old: ColumnSet = column_or_empty(&before, c).into_iter().collect();
            let e = if c == 1 {
                last.record
            } else {
                *column_or_empty(&after, c - 1).iter().find(|v| !old.contains(v)).unwrap()
            };
            let mut expected = old.clone();
            expected.insert(e);
            assert_eq!(new, expected, "{pair:?}");
        }
    }
}
