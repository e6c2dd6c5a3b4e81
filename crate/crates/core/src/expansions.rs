//! Tableau and compatible-pair generating functions, and expansions of
//! Grothendieck polynomials into Lascoux polynomials and into Grassmannian
//! Grothendieck polynomials.
//!
//! Decreasing tableaux for `w ∈ S_n` are enumerated with entries `<= n - 1`,
//! which confines their shapes to the staircase `(n-1, ..., 1)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{bruhat_le_orbit, Composition, FlagVector, Permutation};
use crate::insertion::{enumerate_compatible, PairFilter};
use crate::keys::{left_key_increasing, left_key_rssyt, right_key};
use crate::polynomial::{grassmannian_g, lascoux, BetaMode, Monomial, Polynomial};
use crate::tableau::{all_decreasing, all_increasing, enumerate_rsvt, enumerate_u32, Partition, TableauKind, Tableau};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExpansionKind {
    /// Terms are Lascoux polynomials indexed by compositions.
    Lascoux,
    /// Terms are Grassmannian Grothendieck polynomials indexed by partitions.
    Grassmannian,
}

/// One term `m · β^k · F_index`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExpansionTerm {
    pub index: Composition,
    pub beta_power: u32,
    pub multiplicity: usize,
}

/// A positive expansion, sorted by `(|index|, index)`.
///
/// A tableau with `k` more boxes than `ℓ(w)` contributes `β^k`; the power is
/// carried explicitly in every term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExpansionResult {
    pub kind: ExpansionKind,
    /// Number of variables used when summing Grassmannian terms.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nvars: Option<usize>,
    pub terms: Vec<ExpansionTerm>,
}

impl ExpansionResult {
    fn collect(kind: ExpansionKind, nvars: Option<usize>, base: usize, indices: impl IntoIterator<Item = Composition>) -> Self {
        let mut counts: BTreeMap<(u32, Composition), usize> = BTreeMap::new();
        for a in indices {
            *counts.entry((a.size(), a)).or_default() += 1;
        }
        let terms = counts
            .into_iter()
            .map(|((size, index), multiplicity)| ExpansionTerm {
                index,
                beta_power: size - base as u32,
                multiplicity,
            })
            .collect();
        Self { kind, nvars, terms }
    }

    /// Total number of tableaux counted.
    pub fn total(&self) -> usize {
        self.terms.iter().map(|t| t.multiplicity).sum()
    }

    /// The multiset as `index -> multiplicity`.
    pub fn as_map(&self) -> BTreeMap<Composition, usize> {
        self.terms.iter().map(|t| (t.index.clone(), t.multiplicity)).collect()
    }

    /// `Σ m β^k F_index`, with `F` the Lascoux or Grassmannian polynomial.
    pub fn sum(&self) -> Polynomial {
        self.terms
            .iter()
            .map(|t| {
                let f = match self.kind {
                    ExpansionKind::Lascoux => lascoux(&t.index, BetaMode::Symbolic),
                    ExpansionKind::Grassmannian => {
                        grassmannian_g(&t.index.sorted(), self.nvars.unwrap_or(t.index.len()))
                    }
                };
                f.mul_beta_pow(t.beta_power).scale(&BigInt::from(t.multiplicity))
            })
            .sum()
    }
}

fn staircase_bound(w: &Permutation) -> u32 {
    w.size().saturating_sub(1) as u32
}

/// `Dec^w`: decreasing tableaux whose column word has Hecke product `w`.
pub fn decreasing_for(w: &Permutation) -> Vec<Tableau<u32>> {
    all_decreasing(staircase_bound(w))
        .into_iter()
        .filter(|t| t.column_word().hecke_product() == *w)
        .collect()
}

/// `Inc^w`: increasing tableaux whose column word has Hecke product `w`.
pub fn increasing_for(w: &Permutation) -> Vec<Tableau<u32>> {
    all_increasing(staircase_bound(w))
        .into_iter()
        .filter(|t| t.column_word().hecke_product() == *w)
        .collect()
}

/// `Σ β^{ex(a)} x^{wt(i)}` over bounded compatible pairs with
/// `a ∈ H_{w⁻¹}`, keeping only monomials in `x_1, ..., x_nvars`.
pub fn fk_grothendieck(w: &Permutation, nvars: usize) -> Polynomial {
    let n = w.size();
    let filter = PairFilter { bounded: true, permutation: Some(w.inverse()), tableau: None };
    let mut out = Polynomial::zero();
    for p in enumerate_compatible(n * n.saturating_sub(1) / 2, staircase_bound(w), &filter) {
        if p.i().max_letter() as usize <= nvars {
            out.add_term(Monomial::new(p.a().excess() as u32, p.i().weight().parts().to_vec()), 1.into());
        }
    }
    out
}

/// `Σ β^{ex(a)} x^{wt(i)}` over compatible pairs with `a ∈ H_{w⁻¹}` and
/// `i_k <= f_{a_k}`.
pub fn fk_flagged(w: &Permutation, f: &FlagVector) -> Result<Polynomial> {
    if f.len() < w.size() {
        return Err(Error::FlagTooShort { flag: f.len(), perm: w.size() });
    }
    let n = w.size();
    let max_i = f.entries().iter().copied().max().unwrap_or(0);
    let filter = PairFilter::permutation(w.inverse());
    let flag = f.entries();
    let mut out = Polynomial::zero();
    for p in enumerate_compatible(n * n, max_i.max(staircase_bound(w)), &filter) {
        let ok = p.a().letters().iter().zip(p.i().letters()).all(|(&a, &i)| i <= flag[a as usize - 1]);
        if ok {
            out.add_term(Monomial::new(p.a().excess() as u32, p.i().weight().parts().to_vec()), 1.into());
        }
    }
    Ok(out)
}

fn key_bound_holds(t: &Tableau<u32>, alpha: &Composition) -> bool {
    let key = left_key_rssyt(t).expect("RSSYT of normal shape");
    bruhat_le_orbit(&key.weight(), alpha)
}

/// `𝔏_α` as a sum over reverse set-valued tableaux of shape `α⁺` whose
/// left key is bounded by `α`, with entries `<= len(α)`.
pub fn lascoux_rsvt(alpha: &Composition) -> Polynomial {
    lascoux_rsvt_bounded(alpha, alpha.len() as u32)
}

/// [`lascoux_rsvt`] with an explicit entry bound.
pub fn lascoux_rsvt_bounded(alpha: &Composition, max_entry: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    for t in enumerate_rsvt(&alpha.sorted(), max_entry, usize::MAX) {
        if key_bound_holds(&t.lmap(), alpha) {
            out.add_term(Monomial::new(t.excess() as u32, t.weight().parts().to_vec()), 1.into());
        }
    }
    out
}

/// The number of reverse set-valued tableaux counted by [`lascoux_rsvt`].
pub fn lascoux_rsvt_count(alpha: &Composition) -> usize {
    enumerate_rsvt(&alpha.sorted(), alpha.len() as u32, usize::MAX)
        .iter()
        .filter(|t| key_bound_holds(&t.lmap(), alpha))
        .count()
}

/// The values `k < T(s)` that may replace the entry at `s` keeping `T`
/// reverse semistandard.
pub fn replaceable_values(t: &Tableau<u32>, (r, c): (usize, usize)) -> Vec<u32> {
    let v = t.cells()[&(r, c)];
    let get = |r: usize, c: usize| t.cells().get(&(r, c)).copied();
    (1..v)
        .filter(|&k| {
            (c == 1 || get(r, c - 1).is_none_or(|l| l >= k))
                && get(r, c + 1).is_none_or(|rt| rt <= k)
                && (r == 1 || get(r - 1, c).is_none_or(|u| u > k))
                && get(r + 1, c).is_none_or(|d| d < k)
        })
        .collect()
}

/// `𝔏_α` as a sum over reverse semistandard tableaux of shape `α⁺` with
/// left key bounded by `α`, each weighted by `Π (1 + β x_k)` over the
/// replaceable values `k`.
pub fn lascoux_rssyt(alpha: &Composition) -> Polynomial {
    let mut out = Polynomial::zero();
    for t in enumerate_u32(TableauKind::Rssyt, &alpha.sorted(), alpha.len() as u32) {
        if !key_bound_holds(&t, alpha) {
            continue;
        }
        let mut term = Polynomial::x_pow(t.weight().parts());
        for &b in t.cells().keys() {
            for k in replaceable_values(&t, b) {
                term = &term * &(&Polynomial::one() + &(&Polynomial::beta() * &Polynomial::x(k as usize)));
            }
        }
        out = &out + &term;
    }
    out
}

/// `{ wt(K₊(P)) : P ∈ Dec^w }`.
pub fn groth_to_lascoux(w: &Permutation) -> ExpansionResult {
    let keys = decreasing_for(w).iter().map(|p| right_key(p).expect("decreasing").weight()).collect::<Vec<_>>();
    ExpansionResult::collect(ExpansionKind::Lascoux, None, w.length(), keys)
}

/// `{ wt(K₋(P)) : P ∈ Inc^{w⁻¹} }`.
pub fn reiner_yong_form(w: &Permutation) -> ExpansionResult {
    let keys = increasing_for(&w.inverse())
        .iter()
        .map(|p| left_key_increasing(p).expect("increasing").weight())
        .collect::<Vec<_>>();
    ExpansionResult::collect(ExpansionKind::Lascoux, None, w.length(), keys)
}

/// `{ shape(P) : P ∈ Dec^w }`, to be summed as `G_λ(x_1, ..., x_n)`.
pub fn stable_expansion(w: &Permutation, n: usize) -> ExpansionResult {
    let shapes = decreasing_for(w)
        .iter()
        .map(|p| Composition::new(p.partition().expect("normal shape").parts().to_vec()))
        .collect::<Vec<_>>();
    ExpansionResult::collect(ExpansionKind::Grassmannian, Some(n), w.length(), shapes)
}

/// `{ σ_f ∘ wt(K₊(P)) : P ∈ Dec^w }`.
pub fn flagged_expansion(w: &Permutation, f: &FlagVector) -> Result<ExpansionResult> {
    if f.len() < w.size() {
        return Err(Error::FlagTooShort { flag: f.len(), perm: w.size() });
    }
    let sigma = f.sigma();
    let keys = decreasing_for(w)
        .iter()
        .map(|p| right_key(p).expect("decreasing").weight().demazure_compose_perm(&sigma))
        .collect::<Vec<_>>();
    Ok(ExpansionResult::collect(ExpansionKind::Lascoux, None, w.length(), keys))
}

/// The partition `λ` as a composition, for Grassmannian expansion indices.
pub fn partition_index(lambda: &Partition) -> Composition {
    Composition::new(lambda.parts().to_vec())
}
