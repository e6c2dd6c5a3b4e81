use std::collections::BTreeSet;

use grothlab::combinatorics::Word;
use grothlab::insertion::{insert_pair, rev_insert, CompatiblePair};
use grothlab::keys::{left_key_increasing, right_key};
use grothlab::kjdt::{flat, sharp};
use grothlab::polynomial::{grothendieck, lascoux};
use grothlab::expansions::{groth_to_lascoux, lascoux_rsvt};
use grothlab::{BetaMode, Composition, Permutation};
use proptest::prelude::*;

/// Distinct `(i, a)` records sorted by decreasing `i`, then increasing `a`,
/// always form a compatible pair.
fn pair_strategy() -> impl Strategy<Value = CompatiblePair> {
    prop::collection::btree_set((1..=4u32, 1..=5u32), 0..8).prop_map(|set: BTreeSet<(u32, u32)>| {
        let mut recs: Vec<_> = set.into_iter().collect();
        recs.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        let a = Word::new(recs.iter().map(|r| r.1).collect()).unwrap();
        let i = Word::new(recs.iter().map(|r| r.0).collect()).unwrap();
        CompatiblePair::new(a, i).unwrap()
    })
}

proptest! {
    #[test]
    fn insert_then_reverse(pair in pair_strategy()) {
        let rp = insert_pair(&pair);
        prop_assert_eq!(rev_insert(&rp).unwrap(), pair.clone());
        prop_assert_eq!(rp.p().column_word().hecke_product(), pair.a().reverse().hecke_product());
        prop_assert_eq!(rp.q().weight(), pair.i().weight());
    }

    #[test]
    fn sharp_flat_and_keys(pair in pair_strategy()) {
        let p = insert_pair(&pair).p().clone();
        let s = sharp(&p).unwrap();
        prop_assert!(s.is_increasing());
        prop_assert_eq!(flat(&s).unwrap(), p.clone());
        prop_assert_eq!(right_key(&p).unwrap(), left_key_increasing(&s).unwrap());
    }
}

#[test]
fn public_api_round_trip() {
    let w = Permutation::parse("2143").unwrap();
    assert_eq!(groth_to_lascoux(&w).sum(), grothendieck(&w, BetaMode::Symbolic));
    let alpha = Composition::parse("0,2,1").unwrap();
    assert_eq!(lascoux_rsvt(&alpha), lascoux(&alpha, BetaMode::Symbolic));
}
