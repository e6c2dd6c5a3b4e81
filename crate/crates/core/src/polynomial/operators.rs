use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Monomial, Polynomial};
use crate::combinatorics::{Permutation, Word};
use crate::{Error, Result};

/// The four operator families `∂_i`, `π_i`, `∂^(β)_i` and `π^(β)_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OpKind {
    Partial,
    Pi,
    PartialBeta,
    PiBeta,
}

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`.
pub fn try_divided_difference(i: usize, f: &Polynomial) -> Result<Polynomial> {
    divide_by_difference(i, &(f - &f.swap_vars(i)))
}

/// Exact quotient `g / (x_i - x_{i+1})` by synthetic division.
fn divide_by_difference(i: usize, diff: &Polynomial) -> Result<Polynomial> {
    // group by everything except the exponents of x_i and x_{i+1}; each
    // group is a polynomial in x = x_i whose coefficients are polynomials
    // in y = x_{i+1}
    type InY = BTreeMap<u32, BigInt>;
    let mut groups: BTreeMap<Monomial, BTreeMap<u32, InY>> = BTreeMap::new();
    for (m, c) in diff.terms() {
        let mut rest = m.padded(i + 1);
        let (a, b) = (rest[i - 1], rest[i]);
        rest[i - 1] = 0;
        rest[i] = 0;
        groups
            .entry(Monomial::new(m.beta, rest))
            .or_default()
            .entry(a)
            .or_default()
            .insert(b, c.clone());
    }
    let mut out = Polynomial::zero();
    for (rest, by_x) in groups {
        let top = *by_x.keys().next_back().expect("groups are nonempty");
        // Horner: q_{D-1} = P_D, q_{k-1} = P_k + y q_k, remainder P_0 + y q_0
        let mut q: InY = InY::new();
        for k in (0..=top).rev() {
            let mut next: InY = by_x.get(&k).cloned().unwrap_or_default();
            for (&e, c) in &q {
                *next.entry(e + 1).or_insert_with(BigInt::zero) += c;
            }
            next.retain(|_, c| !c.is_zero());
            if k == 0 {
                if !next.is_empty() {
                    return Err(Error::InexactDivision(i, i + 1));
                }
                break;
            }
            for (&e, c) in &next {
                let mut exps = rest.padded(i + 1);
                exps[i - 1] = k - 1;
                exps[i] = e;
                out.add_term(Monomial::new(rest.beta, exps), c.clone());
            }
            q = next;
        }
    }
    Ok(out)
}

/// `∂_i f`. The division is always exact.
pub fn divided_difference(i: usize, f: &Polynomial) -> Polynomial {
    try_divided_difference(i, f).expect("f - s_i f is divisible by x_i - x_{i+1}")
}

fn one_plus_beta_x(i: usize) -> Polynomial {
    &Polynomial::one() + &(&Polynomial::beta() * &Polynomial::x(i))
}

/// Applies one operator of the given family.
pub fn apply(kind: OpKind, i: usize, f: &Polynomial) -> Polynomial {
    assert!(i >= 1, "operators are indexed from 1");
    match kind {
        OpKind::Partial => divided_difference(i, f),
        OpKind::Pi => divided_difference(i, &(&Polynomial::x(i) * f)),
        OpKind::PartialBeta => divided_difference(i, &(&one_plus_beta_x(i + 1) * f)),
        OpKind::PiBeta => {
            divided_difference(i, &(&(&one_plus_beta_x(i + 1) * &Polynomial::x(i)) * f))
        }
    }
}

/// `O_{a_1} O_{a_2} ... O_{a_k} f`, the last letter acting first.
pub fn apply_word(kind: OpKind, word: &Word, f: &Polynomial) -> Polynomial {
    word.letters()
        .iter()
        .rev()
        .fold(f.clone(), |acc, &i| apply(kind, i as usize, &acc))
}

/// `O_w f` through a reduced word of `w`.
pub fn apply_perm(kind: OpKind, w: &Permutation, f: &Polynomial) -> Polynomial {
    apply_word(kind, &w.reduced_word(), f)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::x(i)
    }

    fn b() -> Polynomial {
        Polynomial::beta()
    }

    /// Oracle: the closed form for `∂_i(x_i^a x_{i+1}^c)`.
    fn termwise(i: usize, f: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in f.terms() {
            let (a, d) = (m.exp(i), m.exp(i + 1));
            let (hi, lo, sign) = if a >= d { (a, d, c.clone()) } else { (d, a, -c) };
            for k in 0..hi - lo {
                let mut e = m.padded(i + 1);
                e[i - 1] = hi - 1 - k;
                e[i] = lo + k;
                out.add_term(Monomial::new(m.beta, e), sign.clone());
            }
        }
        out
    }

    fn poly_strategy() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(
            (-3i64..=3, 0u32..=2, proptest::collection::vec(0u32..=2, 4)),
            0..6,
        )
        .prop_map(|ts| {
            ts.into_iter()
                .filter(|(_, _, e)| e.iter().sum::<u32>() <= 5)
                .map(|(c, be, e)| Polynomial::term(c, be, e))
                .sum()
        })
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(divided_difference(1, &x(1)), Polynomial::one());
        assert_eq!(divided_difference(1, &(&x(1) * &x(2))), Polynomial::zero());
        let f = &(&x(1) * &x(1)) * &x(2);
        assert_eq!(divided_difference(1, &f), &x(1) * &x(2));
    }

    #[test]
    fn operator_examples() {
        let g = &(&x(1) + &x(2)) + &(&b() * &(&x(1) * &x(2)));
        assert_eq!(apply(OpKind::PiBeta, 1, &x(1)), g);
        assert_eq!(apply(OpKind::Pi, 1, &x(1)), &x(1) + &x(2));
        assert_eq!(apply(OpKind::PartialBeta, 1, &x(1)), Polynomial::one());
        // X_i = x_i (1 + β x_{i+1}) satisfies ∂_i X_i = 1
        let big_x = &x(2) * &(&Polynomial::one() + &(&b() * &x(3)));
        assert_eq!(divided_difference(2, &big_x), Polynomial::one());
    }

    #[test]
    fn inexact_division_is_reported() {
        assert!(matches!(divide_by_difference(1, &x(1)), Err(Error::InexactDivision(1, 2))));
        let sq = &(&x(1) * &x(1)) - &(&x(2) * &x(2));
        assert_eq!(divide_by_difference(1, &sq).unwrap(), &x(1) + &x(2));
    }

    fn braid_ok(kind: OpKind, f: &Polynomial, i: usize) -> bool {
        let a = apply(kind, i, &apply(kind, i + 1, &apply(kind, i, f)));
        let c = apply(kind, i + 1, &apply(kind, i, &apply(kind, i + 1, f)));
        a == c
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn matches_closed_form(f in poly_strategy(), i in 1usize..=3) {
            prop_assert_eq!(divided_difference(i, &f), termwise(i, &f));
        }

        #[test]
        fn quadratic_relations(f in poly_strategy(), i in 1usize..=3) {
            let d = |g: &Polynomial| apply(OpKind::Partial, i, g);
            prop_assert!(d(&d(&f)).is_zero());
            let p = |g: &Polynomial| apply(OpKind::Pi, i, g);
            prop_assert_eq!(p(&p(&f)), p(&f));
            let db = |g: &Polynomial| apply(OpKind::PartialBeta, i, g);
            prop_assert_eq!(db(&db(&f)), -&(&b() * &db(&f)));
            let pb = |g: &Polynomial| apply(OpKind::PiBeta, i, g);
            prop_assert_eq!(pb(&pb(&f)), pb(&f));
        }

        #[test]
        fn braid_relations(f in poly_strategy()) {
            for kind in [OpKind::Partial, OpKind::Pi, OpKind::PartialBeta, OpKind::PiBeta] {
                for i in 1..=2 {
                    prop_assert!(braid_ok(kind, &f, i));
                }
                let far = apply(kind, 1, &apply(kind, 3, &f));
                prop_assert_eq!(far, apply(kind, 3, &apply(kind, 1, &f)));
            }
        }

        #[test]
        fn leibniz(f in poly_strategy(), g in poly_strategy(), i in 1usize..=3) {
            let lhs = divided_difference(i, &(&f * &g));
            let rhs = &(&divided_difference(i, &f) * &g) + &(&f.swap_vars(i) * &divided_difference(i, &g));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
