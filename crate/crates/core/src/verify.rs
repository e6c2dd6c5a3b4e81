//! Identity checks over exhaustive and seeded-random families, grouped into
//! numbered criteria and run at a chosen scale.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Composition, FlagVector, KeyTableau, Permutation};
use crate::expansions::{
    decreasing_for, fk_flagged, fk_grothendieck, flagged_expansion, groth_to_lascoux, lascoux_rsvt,
    lascoux_rsvt_bounded, lascoux_rsvt_count, lascoux_rssyt, reiner_yong_form, stable_expansion,
};
use crate::insertion::{enumerate_compatible, insert_pair, rev_insert, PairFilter};
use crate::keys::{left_key_increasing, left_key_rssyt, right_key, right_key_via_kjdt, right_key_via_kjdt_random, right_key_via_reverse_insertion};
use crate::kjdt::sharp;
use crate::polynomial::{
    apply, flagged_grothendieck, grassmannian_g, grothendieck, lascoux, schubert, symmetrize, BetaMode, OpKind,
    Polynomial,
};
use crate::tableau::{enumerate_u32, partitions_inside, Partition, Tableau, TableauKind};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Scale {
    #[serde(rename = "s3")]
    S3,
    #[serde(rename = "s4")]
    S4,
    #[serde(rename = "s5spot")]
    S5Spot,
}

impl FromStr for Scale {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "s3" => Ok(Scale::S3),
            "s4" => Ok(Scale::S4),
            "s5spot" | "s5-spot" => Ok(Scale::S5Spot),
            _ => Err(Error::Parse(format!("unknown scale {s:?} (expected s3, s4 or s5spot)"))),
        }
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scale::S3 => "s3",
            Scale::S4 => "s4",
            Scale::S5Spot => "s5spot",
        })
    }
}

/// Outcome of one family of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Check {
    pub checked: usize,
    pub counterexample: Option<String>,
}

impl Check {
    fn run<T>(items: impl IntoIterator<Item = T>, mut f: impl FnMut(&T) -> Option<String>) -> Self {
        let mut checked = 0;
        for item in items {
            checked += 1;
            if let Some(c) = f(&item) {
                return Self { checked, counterexample: Some(c) };
            }
        }
        Self { checked, counterexample: None }
    }

    fn par_run<T: Sync>(items: &[T], f: impl Fn(&T) -> Option<String> + Sync + Send) -> Self {
        let counterexample = items.par_iter().find_map_first(f);
        Self { checked: items.len(), counterexample }
    }

    pub fn and(self, other: impl FnOnce() -> Check) -> Self {
        if self.counterexample.is_some() {
            return self;
        }
        let o = other();
        Self { checked: self.checked + o.checked, counterexample: o.counterexample }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn mismatch(what: impl fmt::Display, lhs: &Polynomial, rhs: &Polynomial) -> Option<String> {
    (lhs != rhs).then(|| format!("{what}: {lhs} != {rhs}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub criterion: String,
    pub scale: Scale,
    pub status: Status,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub entries: Vec<CriterionReport>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }
}

/// `𝔏_(1,0,2)` written out term by term.
pub fn l102_expected() -> Polynomial {
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

/// `𝔏_(1,0,2)` by recursion, RSVTs and RSSYTs, with 13 RSVT contributors.
pub fn check_lascoux_example() -> Check {
    let alpha = Composition::new(vec![1, 0, 2]);
    let expected = l102_expected();
    type Method = fn(&Composition) -> Polynomial;
    let methods: [(&str, Method); 3] = [
        ("recursion", |a| lascoux(a, BetaMode::Symbolic)),
        ("rsvt", lascoux_rsvt),
        ("rssyt", lascoux_rssyt),
    ];
    Check::run(methods, |(name, f)| mismatch(name, &f(&alpha), &expected)).and(|| {
        Check::run([lascoux_rsvt_count(&alpha)], |&n| (n != 13).then(|| format!("{n} contributing RSVTs")))
    })
}

/// Compatible-pair formula against divided differences.
pub fn check_fk(perms: &[Permutation]) -> Check {
    Check::run(perms, |w| mismatch(w, &fk_grothendieck(w, w.size()), &grothendieck(w, BetaMode::Symbolic)))
}

/// All compositions of length `<= max_len` whose sorted parts fit in `outer`.
pub fn compositions_in(outer: &Partition, max_len: usize) -> Vec<Composition> {
    Composition::all_bounded(max_len, outer.first_part() as u32)
        .filter(|a| outer.contains(&a.sorted()))
        .collect()
}

/// Both tableau formulas for `𝔏_α` against the recursion.
pub fn check_lascoux_formulas(alphas: &[Composition]) -> Check {
    Check::par_run(alphas, |a| {
        let rec = lascoux(a, BetaMode::Symbolic);
        mismatch(format!("rsvt {a:?}"), &lascoux_rsvt(a), &rec)
            .or_else(|| mismatch(format!("rssyt {a:?}"), &lascoux_rssyt(a), &rec))
    })
}

/// Raising the RSVT entry bound by two adds no terms.
pub fn check_rsvt_bound(alphas: &[Composition]) -> Check {
    Check::par_run(alphas, |a| {
        let bound = a.len() as u32;
        mismatch(format!("{a:?}"), &lascoux_rsvt_bounded(a, bound + 2), &lascoux_rsvt_bounded(a, bound))
    })
}

pub fn check_groth_to_lascoux(perms: &[Permutation]) -> Check {
    Check::run(perms, |w| mismatch(w, &groth_to_lascoux(w).sum(), &grothendieck(w, BetaMode::Symbolic)))
}

/// The increasing-tableau form equals the decreasing one, and
/// `K₊(P) = K₋(P♯)` for every `P ∈ Dec^w`.
pub fn check_reiner_yong(perms: &[Permutation]) -> Check {
    Check::run(perms, |w| {
        if reiner_yong_form(w) != groth_to_lascoux(w) {
            return Some(format!("{w}: multisets differ"));
        }
        decreasing_for(w).into_iter().find_map(|p| {
            let s = sharp(&p).ok()?;
            (right_key(&p).ok()? != left_key_increasing(&s).ok()?).then(|| format!("{w}: keys differ on {p:?}"))
        })
    })
}

/// Roundtrips of `Insert` and the bounded restriction: a pair is bounded
/// exactly when `K₊(P)` dominates `K₋(L(Q))`.
pub fn check_restricting_insert(max_len: usize, max_letter: u32) -> Check {
    let pairs = enumerate_compatible(max_len, max_letter, &PairFilter::none());
    Check::run(pairs, |pair| {
        let rp = insert_pair(pair);
        match rev_insert(&rp) {
            Ok(back) if back == *pair => {}
            other => return Some(format!("{pair:?}: RevInsert gave {other:?}")),
        }
        let kp = right_key(rp.p()).ok()?;
        let kq = left_key_rssyt(&rp.q().lmap()).ok()?;
        (pair.is_bounded() != kq.le(&kp))
            .then(|| format!("{pair:?}: bounded = {}, K+(P) = {kp:?}, K-(L(Q)) = {kq:?}", pair.is_bounded()))
    })
}

fn worked_tableau() -> Tableau<u32> {
    Tableau::from_rows(vec![vec![9, 8, 7, 5, 3], vec![7, 5, 4, 3], vec![4, 2, 1], vec![3], vec![1]])
        .expect("decreasing")
}

/// The three right key procedures (plus random rectification orders) on
/// all decreasing tableaux inside `outer` with entries `<= max_entry`, and
/// the worked example's key weight.
pub fn check_right_keys(outer: &Partition, max_entry: u32, seed: u64) -> Check {
    let t = worked_tableau();
    let expected = Composition::new(vec![3, 1, 5, 0, 4, 0, 1]);
    let worked = Check::run([&t], |t| {
        let k = right_key(t).ok()?;
        (k.weight() != expected).then(|| format!("worked example weight {:?}", k.weight()))
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<Tableau<u32>> = partitions_inside(outer)
        .iter()
        .flat_map(|s| enumerate_u32(TableauKind::Decreasing, s, max_entry))
        .chain([t])
        .collect();
    worked.and(|| {
        Check::run(all, |d| {
            let keys: [(&str, Result<KeyTableau, Error>); 4] = [
                ("star", right_key(d)),
                ("kjdt", right_key_via_kjdt(d)),
                ("reverse insertion", right_key_via_reverse_insertion(d)),
                ("random order", right_key_via_kjdt_random(d, &mut rng)),
            ];
            let base = &keys[0].1;
            keys.iter()
                .find(|(_, k)| k != base || k.is_err())
                .map(|(name, k)| format!("{d:?}: {name} gave {k:?}, star gave {base:?}"))
        })
    })
}

fn random_poly(rng: &mut ChaCha8Rng, nvars: usize) -> Polynomial {
    (0..rng.gen_range(0..6))
        .map(|_| {
            let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=2)).collect();
            Polynomial::term(rng.gen_range(-3i64..=3), rng.gen_range(0..=2), exps)
        })
        .sum()
}

/// Quadratic, braid, commutation and Leibniz relations on `count` random
/// polynomials each.
pub fn check_operator_algebra(count: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kinds = [OpKind::Partial, OpKind::Pi, OpKind::PartialBeta, OpKind::PiBeta];
    let beta = Polynomial::beta();
    let quad = Check::run((0..count).map(|_| (random_poly(&mut rng, 4), rng.gen_range(1..=3))), |(f, i)| {
        let op = |k, g: &Polynomial| apply(k, *i, g);
        let d = op(OpKind::Partial, f);
        if !op(OpKind::Partial, &d).is_zero() {
            return Some(format!("∂{i}∂{i} on {f}"));
        }
        for k in [OpKind::Pi, OpKind::PiBeta] {
            if op(k, &op(k, f)) != op(k, f) {
                return Some(format!("{k:?}{i} squared on {f}"));
            }
        }
        let db = op(OpKind::PartialBeta, f);
        (op(OpKind::PartialBeta, &db) != -&(&beta * &db)).then(|| format!("∂β{i} squared on {f}"))
    });
    let braid = Check::run((0..count).map(|_| random_poly(&mut rng, 4)), |f| {
        kinds.iter().find_map(|&k| {
            for i in 1..=2 {
                let l = apply(k, i, &apply(k, i + 1, &apply(k, i, f)));
                let r = apply(k, i + 1, &apply(k, i, &apply(k, i + 1, f)));
                if l != r {
                    return Some(format!("{k:?} braid at {i} on {f}"));
                }
            }
            (apply(k, 1, &apply(k, 3, f)) != apply(k, 3, &apply(k, 1, f))).then(|| format!("{k:?} commutation on {f}"))
        })
    });
    let leibniz = Check::run(
        (0..count).map(|_| (random_poly(&mut rng, 4), random_poly(&mut rng, 4), rng.gen_range(1..=3))),
        |(f, g, i)| {
            let d = |h: &Polynomial| apply(OpKind::Partial, *i, h);
            let lhs = d(&(f * g));
            let rhs = &(&d(f) * g) + &(&f.swap_vars(*i) * &d(g));
            mismatch(format!("Leibniz at {i} for {f} and {g}"), &lhs, &rhs)
        },
    );
    quad.and(|| braid).and(|| leibniz)
}

/// Symmetrizing Lascoux and Grothendieck polynomials in `n` variables, and
/// the Grassmannian expansion of `G_w(x_1, ..., x_n)`.
pub fn check_symmetrization(alphas: &[Composition], perms: &[Permutation], n: usize) -> Check {
    let lsym = Check::run(alphas.iter().filter(|a| a.len() <= n), |a| {
        let lhs = symmetrize(&lascoux(a, BetaMode::Symbolic), n, OpKind::PiBeta);
        mismatch(format!("{a:?}"), &lhs, &grassmannian_g(&a.sorted(), n))
    });
    lsym.and(|| {
        Check::run(perms, |w| {
            let sym = symmetrize(&grothendieck(w, BetaMode::Symbolic), n, OpKind::PiBeta);
            let fmax = fk_flagged(w, &FlagVector::f_max(n)).ok()?;
            mismatch(format!("{w} against compatible pairs"), &sym, &fmax)
                .or_else(|| mismatch(format!("{w} stable expansion"), &stable_expansion(w, n).sum(), &sym))
        })
    })
}

/// `𝔏_(0^N, rev λ) = G_λ(x_1, ..., x_{ℓ(λ)+N})` for `N <= 2`.
pub fn check_stable_limit(outer: &Partition) -> Check {
    let cases = partitions_inside(outer).into_iter().flat_map(|l| (0..=2).map(move |z| (l.clone(), z)));
    Check::run(cases, |(lambda, zeros)| {
        let mut parts = vec![0; *zeros];
        parts.extend(lambda.parts().iter().rev());
        let n = parts.len();
        mismatch(format!("{lambda:?} with {zeros} zeros"), &lascoux(&Composition::new(parts), BetaMode::Symbolic), &grassmannian_g(lambda, n))
    })
}

pub fn check_flagged(cases: &[(Permutation, FlagVector)]) -> Check {
    Check::run(cases, |(w, f)| {
        let rhs = flagged_grothendieck(w, f).ok()?;
        mismatch(format!("{w} with flag {:?}", f.entries()), &flagged_expansion(w, f).ok()?.sum(), &rhs)
    })
}

/// At `β = 0`: reduced tableaux give the Schubert-to-Demazure expansion and
/// reduced compatible pairs give the Schubert polynomial.
pub fn check_beta_zero(perms: &[Permutation]) -> Check {
    Check::run(perms, |w| {
        let s = schubert(w);
        let e = groth_to_lascoux(w);
        let demazure_sum: Polynomial = e
            .terms
            .iter()
            .filter(|t| t.beta_power == 0)
            .map(|t| lascoux(&t.index, BetaMode::Zero).scale(&BigInt::from(t.multiplicity)))
            .sum();
        let n = w.size();
        let filter = PairFilter { bounded: true, permutation: Some(w.inverse()), tableau: None };
        let bjs: Polynomial = enumerate_compatible(n * n.saturating_sub(1) / 2, n.saturating_sub(1) as u32, &filter)
            .iter()
            .filter(|p| p.a().is_reduced())
            .map(|p| Polynomial::x_pow(p.i().weight().parts()))
            .sum();
        mismatch(format!("{w} Demazure"), &demazure_sum, &s)
            .or_else(|| mismatch(format!("{w} reduced pairs"), &bjs, &s))
            .or_else(|| mismatch(format!("{w} fk at β = 0"), &fk_grothendieck(w, n).specialize(BetaMode::Zero), &s))
    })
}

/// `count` distinct permutations of `S_n` chosen with a fixed seed.
pub fn random_perms(n: usize, count: usize, seed: u64) -> Vec<Permutation> {
    let mut all: Vec<Permutation> = Permutation::all(n).collect();
    all.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    all.truncate(count);
    all
}

/// `count` random pairs of a permutation of `S_n` and a flag of length `n`.
pub fn random_flag_cases(n: usize, count: usize, seed: u64) -> Vec<(Permutation, FlagVector)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let flags = FlagVector::all(n);
    (0..count)
        .map(|_| {
            (perms.choose(&mut rng).expect("nonempty").clone(), flags.choose(&mut rng).expect("nonempty").clone())
        })
        .collect()
}

pub fn all_flag_cases(n: usize) -> Vec<(Permutation, FlagVector)> {
    let flags = FlagVector::all(n);
    Permutation::all(n).flat_map(|w| flags.iter().map(move |f| (w.clone(), f.clone()))).collect()
}

struct Plan {
    perms: Vec<Permutation>,
    sym_n: usize,
    alphas: Vec<Composition>,
    sym_alphas: Vec<Composition>,
    pairs: (usize, u32),
    keys: (Partition, u32),
    ops: usize,
    flags: Vec<(Permutation, FlagVector)>,
}

fn plan(scale: Scale) -> Plan {
    let p = |v: Vec<u32>| Partition::new(v).expect("partition");
    match scale {
        Scale::S3 => Plan {
            perms: Permutation::all(3).collect(),
            sym_n: 3,
            alphas: compositions_in(&p(vec![2, 1]), 3),
            sym_alphas: compositions_in(&p(vec![2, 1]), 3),
            pairs: (4, 2),
            keys: (p(vec![2, 2]), 3),
            ops: 50,
            flags: all_flag_cases(3),
        },
        Scale::S4 => Plan {
            perms: Permutation::all(4).collect(),
            sym_n: 4,
            alphas: compositions_in(&p(vec![3, 2, 1]), 4),
            sym_alphas: compositions_in(&p(vec![3, 2, 1]), 4),
            pairs: (5, 3),
            keys: (p(vec![3, 3, 3]), 4),
            ops: 200,
            flags: [all_flag_cases(3), random_flag_cases(4, 20, 4)].concat(),
        },
        Scale::S5Spot => Plan {
            perms: random_perms(5, 10, 5),
            sym_n: 5,
            alphas: compositions_in(&p(vec![3, 2, 1]), 4),
            sym_alphas: compositions_in(&p(vec![3, 2, 1]), 4),
            pairs: (5, 4),
            keys: (p(vec![3, 3, 3]), 4),
            ops: 200,
            flags: random_flag_cases(5, 10, 5),
        },
    }
}

pub const CRITERIA: [&str; 12] = [
    "lascoux-example",
    "fomin-kirillov",
    "lascoux-tableau-formulas",
    "grothendieck-to-lascoux",
    "increasing-tableau-form",
    "bounded-insertion",
    "right-key-procedures",
    "operator-algebra",
    "symmetrization",
    "flagged-expansion",
    "beta-zero",
    "rsvt-entry-bound",
];

fn run_criterion(k: usize, plan: &Plan) -> Check {
    match k {
        0 => check_lascoux_example(),
        1 => check_fk(&plan.perms),
        2 => check_lascoux_formulas(&plan.alphas),
        3 => check_groth_to_lascoux(&plan.perms),
        4 => check_reiner_yong(&plan.perms),
        5 => check_restricting_insert(plan.pairs.0, plan.pairs.1),
        6 => check_right_keys(&plan.keys.0, plan.keys.1, 7),
        7 => check_operator_algebra(plan.ops, 8),
        8 => check_symmetrization(&plan.sym_alphas, &plan.perms, plan.sym_n)
            .and(|| check_stable_limit(&Partition::new(vec![2, 1]).expect("partition"))),
        9 => check_flagged(&plan.flags),
        10 => check_beta_zero(&plan.perms),
        11 => check_rsvt_bound(&plan.alphas),
        _ => unreachable!(),
    }
}

/// Runs every criterion at each scale, in parallel, in a fixed order.
pub fn verify_suite(scales: &[Scale]) -> VerificationReport {
    let jobs: Vec<(Scale, usize)> = scales.iter().flat_map(|&s| (0..CRITERIA.len()).map(move |k| (s, k))).collect();
    let plans: Vec<(Scale, Plan)> = scales.iter().map(|&s| (s, plan(s))).collect();
    let entries = jobs
        .par_iter()
        .map(|&(scale, k)| {
            let plan = &plans.iter().find(|(s, _)| *s == scale).expect("planned").1;
            let check = run_criterion(k, plan);
            CriterionReport {
                criterion: CRITERIA[k].to_string(),
                scale,
                status: if check.passed() { Status::Pass } else { Status::Fail },
                checked: check.checked,
                counterexample: check.counterexample,
            }
        })
        .collect();
    VerificationReport { entries }
}
