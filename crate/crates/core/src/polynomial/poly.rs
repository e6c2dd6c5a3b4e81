use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};


/// How to treat `β` when producing output.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BetaMode {
    #[default]
    Symbolic,
    Zero,
    MinusOne,
}

/// `β^beta x^exps`, with trailing zero exponents dropped.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial {
    pub beta: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(beta: u32, mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Self { beta, exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i` (1-based).
    pub fn exp(&self, i: usize) -> u32 {
        self.exps.get(i - 1).copied().unwrap_or(0)
    }

    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.exps.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        let n = self.exps.len().max(other.exps.len());
        let exps = (0..n)
            .map(|k| self.exps.get(k).unwrap_or(&0) + other.exps.get(k).unwrap_or(&0))
            .collect();
        Self::new(self.beta + other.beta, exps)
    }
}

/// An element of `Z[β][x_1, x_2, ...]` with exact integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::term(c, 0, vec![])
    }

    /// `c β^beta x^exps`.
    pub fn term(c: impl Into<BigInt>, beta: u32, exps: Vec<u32>) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::new(beta, exps), c.into());
        p
    }

    pub fn beta() -> Self {
        Self::term(1, 1, vec![])
    }

    /// The variable `x_i` (1-based).
    pub fn x(i: usize) -> Self {
        let mut e = vec![0; i];
        e[i - 1] = 1;
        Self::term(1, 0, e)
    }

    /// `x^α`.
    pub fn x_pow(alpha: &[u32]) -> Self {
        Self::term(1, 0, alpha.to_vec())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, BigInt> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of variables in use: the largest index with a nonzero exponent.
    pub fn nvars(&self) -> usize {
        self.terms.keys().map(|m| m.exps.len()).max().unwrap_or(0)
    }

    pub fn coefficient(&self, beta: u32, exps: &[u32]) -> BigInt {
        self.terms
            .get(&Monomial::new(beta, exps.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn max_beta_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.beta).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// Multiplication by `β^k`.
    pub fn mul_beta_pow(&self, k: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (Monomial { beta: m.beta + k, exps: m.exps.clone() }, v.clone()))
                .collect(),
        }
    }

    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// `s_i f`: exchanges `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Self {
        self.map_monomials(|m| {
            let mut e = m.padded(i + 1);
            e.swap(i - 1, i);
            Monomial::new(m.beta, e)
        })
    }

    pub fn is_symmetric_in(&self, i: usize) -> bool {
        self.swap_vars(i) == *self
    }

    pub fn specialize(&self, mode: BetaMode) -> Self {
        match mode {
            BetaMode::Symbolic => self.clone(),
            BetaMode::Zero => Self {
                terms: self.terms.iter().filter(|(m, _)| m.beta == 0).map(|(m, c)| (m.clone(), c.clone())).collect(),
            },
            BetaMode::MinusOne => Self::from_terms(self.terms.iter().map(|(m, c)| {
                let sign = if m.beta % 2 == 0 { c.clone() } else { -c };
                (Monomial { beta: 0, exps: m.exps.clone() }, sign)
            })),
        }
    }

    /// Value at `x_i = xs[i-1]` (missing variables count as 0) and `β = beta`.
    pub fn evaluate(&self, xs: &[i64], beta: i64) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut v = c * BigInt::from(beta).pow(m.beta);
                for (k, &e) in m.exps.iter().enumerate() {
                    v *= BigInt::from(xs.get(k).copied().unwrap_or(0)).pow(e);
                }
                v
            })
            .sum()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Polynomial { terms: acc }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        let mut acc = Polynomial::zero();
        for p in iter {
            for (m, c) in p.terms {
                acc.add_term(m, c);
            }
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| a.beta.cmp(&b.beta).then_with(|| b.exps.cmp(&a.exps)));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let mut factors = Vec::new();
            match m.beta {
                0 => {}
                1 => factors.push("b".to_string()),
                e => factors.push(format!("b^{e}")),
            }
            for (i, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    e => factors.push(format!("x{}^{e}", i + 1)),
                }
            }
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join(" "))?;
            } else {
                write!(f, "{abs} {}", factors.join(" "))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    beta: u32,
    exp: Vec<u32>,
    coef: serde_json::Value,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n = self.nvars();
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                beta: m.beta,
                exp: m.padded(n),
                coef: match c.to_i64() {
                    Some(v) => v.into(),
                    None => c.to_string().into(),
                },
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<TermJson>::deserialize(d)?;
        let mut p = Polynomial::zero();
        for t in raw {
            let c: BigInt = match &t.coef {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| D::Error::custom("coefficient is not an integer"))?,
                serde_json::Value::String(s) => s.parse().map_err(D::Error::custom)?,
                _ => return Err(D::Error::custom("coefficient must be a number or string")),
            };
            p.add_term(Monomial::new(t.beta, t.exp), c);
        }
        Ok(p)
    }
}
