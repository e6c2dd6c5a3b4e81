use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{apply, apply_perm, BetaMode, OpKind, Polynomial};
use crate::combinatorics::{Composition, FlagVector, Permutation};
use crate::tableau::{enumerate_rsvt, Partition};
use crate::{Error, Result};

/// Which index to recurse on when several are available.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainChoice {
    First,
    Last,
    Random(u64),
}

impl ChainChoice {
    fn pick(&self, options: &[usize], rng: &mut Option<ChaCha8Rng>) -> usize {
        match self {
            ChainChoice::First => options[0],
            ChainChoice::Last => *options.last().expect("nonempty"),
            ChainChoice::Random(seed) => *options
                .choose(rng.get_or_insert_with(|| ChaCha8Rng::seed_from_u64(*seed)))
                .expect("nonempty"),
        }
    }
}

/// `𝔊_w`, with `β` handled per `mode`.
pub fn grothendieck(w: &Permutation, mode: BetaMode) -> Polynomial {
    grothendieck_with(w, w.size(), ChainChoice::First).specialize(mode)
}

/// `𝔊_w` computed from `x^ρ` for `w_0` in `S_n` along a chosen chain of
/// `𝔊_w = ∂^(β)_i 𝔊_{w s_i}` steps, where `w(i) < w(i+1)`.
pub fn grothendieck_with(w: &Permutation, n: usize, choice: ChainChoice) -> Polynomial {
    assert!(n >= w.size(), "{w} is not in S_{n}");
    let mut rng = None;
    let mut steps = Vec::new();
    let mut v = w.clone();
    let w0 = Permutation::longest(n);
    while v != w0 {
        let ascents: Vec<usize> =
            (1..n).filter(|&i| v.apply(i as u32) < v.apply(i as u32 + 1)).collect();
        let i = choice.pick(&ascents, &mut rng);
        steps.push(i);
        v = v.right_mul_simple(i as u32);
    }
    let rho: Vec<u32> = (0..n as u32).rev().collect();
    steps
        .iter()
        .rev()
        .fold(Polynomial::x_pow(&rho), |acc, &i| apply(OpKind::PartialBeta, i, &acc))
}

/// The Schubert polynomial `𝔖_w`.
pub fn schubert(w: &Permutation) -> Polynomial {
    grothendieck(w, BetaMode::Zero)
}

/// `𝔏_α`, with `β` handled per `mode`.
pub fn lascoux(alpha: &Composition, mode: BetaMode) -> Polynomial {
    lascoux_with(alpha, ChainChoice::First).specialize(mode)
}

/// `𝔏_α` from `x^{α⁺}` along a chosen chain of `𝔏_α = π^(β)_i 𝔏_{s_i α}`
/// steps, where `α_i < α_{i+1}`.
pub fn lascoux_with(alpha: &Composition, choice: ChainChoice) -> Polynomial {
    let mut rng = None;
    let mut steps = Vec::new();
    let mut a = alpha.clone();
    while !a.is_partition() {
        let ascents: Vec<usize> = (1..a.len()).filter(|&i| a.get(i) < a.get(i + 1)).collect();
        let i = choice.pick(&ascents, &mut rng);
        steps.push(i);
        a = a.swap(i);
    }
    steps
        .iter()
        .rev()
        .fold(Polynomial::x_pow(a.parts()), |acc, &i| apply(OpKind::PiBeta, i, &acc))
}

/// The Demazure character `κ_α`.
pub fn demazure(alpha: &Composition) -> Polynomial {
    lascoux(alpha, BetaMode::Zero)
}

/// `π^(β)_{σ_f} 𝔊_w`.
pub fn flagged_grothendieck(w: &Permutation, f: &FlagVector) -> Result<Polynomial> {
    if f.len() < w.size() {
        return Err(Error::FlagTooShort { flag: f.len(), perm: w.size() });
    }
    Ok(apply_perm(OpKind::PiBeta, &f.sigma(), &grothendieck(w, BetaMode::Symbolic)))
}

/// `π_{w_0} f` (or `π^(β)_{w_0} f`) for the longest element of `S_n`.
pub fn symmetrize(f: &Polynomial, n: usize, kind: OpKind) -> Polynomial {
    apply_perm(kind, &Permutation::longest(n), f)
}

/// `G^(β)_λ(x_1, ..., x_n)` as a sum over reverse set-valued tableaux.
pub fn grassmannian_g(lambda: &Partition, n: usize) -> Polynomial {
    if lambda.len() > n {
        return Polynomial::zero();
    }
    enumerate_rsvt(lambda, n as u32, usize::MAX)
        .iter()
        .map(|t| Polynomial::term(1, t.excess() as u32, t.weight().parts().to_vec()))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::partitions_inside;

    fn x(i: usize) -> Polynomial {
        Polynomial::x(i)
    }

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    fn g1() -> Polynomial {
        &(&x(1) + &x(2)) + &(&Polynomial::beta() * &(&x(1) * &x(2)))
    }

    /// The polynomial displayed for α = (1,0,2).
    pub(crate) fn expected_l102() -> Polynomial {
        let t = |co: i64, be: u32, e: &[u32]| Polynomial::term(co, be, e.to_vec());
        [
            t(1, 0, &[2, 1]),
            t(1, 0, &[1, 2]),
            t(1, 0, &[2, 0, 1]),
            t(1, 0, &[1, 1, 1]),
            t(1, 0, &[1, 0, 2]),
            t(1, 1, &[2, 2]),
            t(2, 1, &[2, 1, 1]),
            t(1, 1, &[1, 2, 1]),
            t(1, 1, &[2, 0, 2]),
            t(1, 1, &[1, 1, 2]),
            t(1, 2, &[2, 2, 1]),
            t(1, 2, &[2, 1, 2]),
        ]
        .into_iter()
        .sum()
    }

    #[test]
    fn grothendieck_examples() {
        assert_eq!(grothendieck(&Permutation::identity(), BetaMode::Symbolic), Polynomial::one());
        assert_eq!(grothendieck(&p("21"), BetaMode::Symbolic), x(1));
        assert_eq!(grothendieck(&p("132"), BetaMode::Symbolic), g1());
        assert_eq!(schubert(&p("132")), &x(1) + &x(2));
        assert_eq!(
            grothendieck(&p("132"), BetaMode::MinusOne),
            &(&x(1) + &x(2)) - &(&x(1) * &x(2))
        );
    }

    #[test]
    fn grothendieck_is_chain_and_embedding_independent() {
        for w in Permutation::all(4) {
            let base = grothendieck_with(&w, 4, ChainChoice::First);
            assert_eq!(grothendieck_with(&w, 4, ChainChoice::Last), base);
            assert_eq!(grothendieck_with(&w, 4, ChainChoice::Random(7)), base);
            assert_eq!(grothendieck_with(&w, 5, ChainChoice::First), base);
            assert_eq!(grothendieck_with(&w, w.size(), ChainChoice::Last), base);
        }
    }

    #[test]
    fn lascoux_examples() {
        assert_eq!(lascoux(&c(&[2, 1]), BetaMode::Symbolic), &(&x(1) * &x(1)) * &x(2));
        assert_eq!(lascoux(&c(&[0, 1]), BetaMode::Symbolic), g1());
        assert_eq!(lascoux(&c(&[1, 0, 2]), BetaMode::Symbolic), expected_l102());
        assert_eq!(demazure(&c(&[0, 1])), &x(1) + &x(2));
    }

    #[test]
    fn lascoux_is_chain_independent() {
        for alpha in Composition::all_bounded(4, 3) {
            if !Partition::new(vec![3, 2, 1]).unwrap().contains(&alpha.sorted()) {
                continue;
            }
            let a = lascoux_with(&alpha, ChainChoice::First);
            assert_eq!(lascoux_with(&alpha, ChainChoice::Last), a, "{alpha}");
            assert_eq!(lascoux_with(&alpha, ChainChoice::Random(3)), a, "{alpha}");
        }
    }

    #[test]
    fn flagged_examples() {
        let w = p("132");
        let fmin = FlagVector::f_min(3);
        assert_eq!(flagged_grothendieck(&w, &fmin).unwrap(), g1());
        let f = FlagVector::new(vec![2, 2, 3]).unwrap();
        assert_eq!(flagged_grothendieck(&w, &f).unwrap(), g1());
        assert!(flagged_grothendieck(&p("1432"), &fmin).is_err());
    }

    #[test]
    fn symmetrize_examples() {
        assert_eq!(symmetrize(&lascoux(&c(&[0, 1]), BetaMode::Symbolic), 2, OpKind::PiBeta), g1());
        let f = &(&x(1) * &x(1)) * &x(2);
        assert_eq!(
            symmetrize(&f, 2, OpKind::Pi),
            &f + &(&x(1) * &(&x(2) * &x(2)))
        );
        assert_eq!(symmetrize(&Polynomial::one(), 3, OpKind::PiBeta), Polynomial::one());
    }

    #[test]
    fn grassmannian_examples() {
        assert_eq!(grassmannian_g(&Partition::default(), 3), Polynomial::one());
        let one = Partition::new(vec![1]).unwrap();
        assert_eq!(grassmannian_g(&one, 2), g1());
        assert_eq!(
            grassmannian_g(&one, 3).specialize(BetaMode::Zero),
            &(&x(1) + &x(2)) + &x(3)
        );
    }

    #[test]
    fn lascoux_symmetrizes_to_grassmannian() {
        for alpha in Composition::all_bounded(3, 3) {
            let n = 3;
            let lhs = symmetrize(&lascoux(&alpha, BetaMode::Symbolic), n, OpKind::PiBeta);
            assert_eq!(lhs, grassmannian_g(&alpha.sorted(), n), "{alpha}");
        }
    }

    #[test]
    fn grothendieck_symmetrizes_to_full_flag() {
        for w in Permutation::all(4) {
            let lhs = symmetrize(&grothendieck(&w, BetaMode::Symbolic), 4, OpKind::PiBeta);
            assert_eq!(lhs, flagged_grothendieck(&w, &FlagVector::f_max(4)).unwrap());
        }
    }

    #[test]
    fn schur_count_matches_rssyt_count() {
        use crate::tableau::{enumerate_u32, TableauKind};
        for lambda in partitions_inside(&Partition::new(vec![2, 2]).unwrap()) {
            for n in 1..=3 {
                let s = grassmannian_g(&lambda, n).specialize(BetaMode::Zero);
                let count = enumerate_u32(TableauKind::Rssyt, &lambda, n as u32).len();
                assert_eq!(s.evaluate(&[1; 3], 0), count.into());
            }
        }
    }
}
