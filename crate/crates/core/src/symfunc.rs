//! One-sort symmetric-function series in the power-sum basis.
//!
//! A [`PSeries`] is `Σ_λ c_λ p_λ` with exact rational coefficients. It is
//! either an exact polynomial (`bound() == None`) or a series known only up
//! to a degree bound. Binary operations keep the smaller of the two bounds,
//! so a coefficient is never reported for a degree the inputs did not
//! determine.
//!
//! The fix-count view of a series is a [`FixFn`]: `fix F[λ] = z_λ · c_λ`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, partitions_up_to, Partition};

pub type Rational = BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn rat_from_uint(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

pub(crate) fn z_rat(lambda: &Partition) -> Rational {
    rat_from_uint(&lambda.z())
}

/// The smaller of two bounds, where `None` stands for "exact".
pub fn min_bound(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

pub(crate) fn within(bound: Option<usize>, degree: usize) -> bool {
    bound.is_none_or(|b| degree <= b)
}

/// Graded series `Σ c_λ p_λ`, truncated at `bound` unless exact.
#[derive(Clone, PartialEq, Eq)]
pub struct PSeries {
    bound: Option<usize>,
    coeffs: BTreeMap<Partition, Rational>,
}

/// Which univariate specialization to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// `p_1 = x`, `p_i = 0` for `i > 1`: the exponential generating function.
    Egf,
    /// `p_i = x^i`: the isomorphism-types generating function.
    IsoTypes,
}

impl PSeries {
    pub fn zero(bound: Option<usize>) -> Self {
        PSeries {
            bound,
            coeffs: BTreeMap::new(),
        }
    }

    /// The exact unit `p_∅ = 1`.
    pub fn one() -> Self {
        PSeries::power_sum(Partition::empty())
    }

    /// The exact monomial `p_λ`.
    pub fn power_sum(lambda: Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, Rational::one());
        PSeries {
            bound: None,
            coeffs,
        }
    }

    /// `Z_X = p_1`.
    pub fn singleton() -> Self {
        PSeries::power_sum(Partition::from([1]))
    }

    /// Collects terms, summing repeated keys and discarding zeros and terms
    /// above the bound.
    pub fn from_terms<I>(bound: Option<usize>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut s = PSeries::zero(bound);
        for (lambda, c) in terms {
            s.add_term(lambda, c);
        }
        s
    }

    /// `Z_E = Σ_λ p_λ / z_λ` up to degree `bound`.
    pub fn sets(bound: usize) -> Self {
        PSeries::from_fix(&FixFn::Constant(Rational::one()), bound)
    }

    /// `Z_{E_k} = h_k = Σ_{λ ⊢ k} p_λ / z_λ`, exact.
    pub fn sets_of_size(k: usize) -> Self {
        let terms = enumerate_partitions(k)
            .into_iter()
            .map(|l| {
                let c = z_rat(&l).recip();
                (l, c)
            })
            .collect::<Vec<_>>();
        PSeries::from_terms(None, terms)
    }

    /// `Z_{E⁺} = Z_E − 1` up to degree `bound`.
    pub fn nonempty_sets(bound: usize) -> Self {
        &PSeries::sets(bound) - &PSeries::one()
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() || !within(self.bound, lambda.size()) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(lambda) {
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

    /// `None` for an exact polynomial, otherwise the largest known degree.
    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    pub fn is_exact(&self) -> bool {
        self.bound.is_none()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Partition::empty())
    }

    /// Largest degree carrying a nonzero coefficient.
    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().map(Partition::size)
    }

    /// Smallest degree carrying a nonzero coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.keys().next().map(Partition::size)
    }

    /// The degree-`d` component `Σ_{|λ|=d} c_λ p_λ`, as an exact polynomial.
    /// Panics if `d` is above the bound.
    pub fn degree_component(&self, d: usize) -> PSeries {
        assert!(within(self.bound, d), "degree {d} above the series bound");
        PSeries::from_terms(
            None,
            self.coeffs
                .iter()
                .filter(|(l, _)| l.size() == d)
                .map(|(l, c)| (l.clone(), c.clone())),
        )
    }

    /// Re-truncates at `min(self.bound, bound)`.
    pub fn truncate(&self, bound: usize) -> PSeries {
        let bound = min_bound(self.bound, Some(bound));
        PSeries {
            bound,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(l, _)| within(bound, l.size()))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-truncates at `bound` when it is `Some`.
    pub fn truncate_opt(&self, bound: Option<usize>) -> PSeries {
        match bound {
            Some(b) => self.truncate(b),
            None => self.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> PSeries {
        if c.is_zero() {
            return PSeries::zero(self.bound);
        }
        PSeries {
            bound: self.bound,
            coeffs: self.coeffs.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    /// `Σ a_i f_i`. All inputs are re-truncated to the smallest bound; an
    /// empty list gives the zero series at `empty_bound`.
    pub fn linear_combine(terms: &[(Rational, &PSeries)], empty_bound: Option<usize>) -> PSeries {
        if terms.is_empty() {
            return PSeries::zero(empty_bound);
        }
        let bound = terms.iter().fold(None, |b, (_, s)| min_bound(b, s.bound));
        let mut out = PSeries::zero(bound);
        for (a, s) in terms {
            for (l, c) in &s.coeffs {
                out.add_term(l.clone(), a * c);
            }
        }
        out
    }

    /// Product in the power-sum basis: `p_λ p_μ = p_{λ∪μ}`.
    pub fn multiply(&self, other: &PSeries) -> PSeries {
        let bound = min_bound(self.bound, other.bound);
        let mut out = PSeries::zero(bound);
        for (l, a) in &self.coeffs {
            if !within(bound, l.size()) {
                continue;
            }
            for (m, b) in &other.coeffs {
                if within(bound, l.size() + m.size()) {
                    out.add_term(l.union(m), a * b);
                }
            }
        }
        out
    }

    /// `self^n`, by repeated squaring.
    pub fn pow(&self, mut n: usize) -> PSeries {
        let mut result = PSeries::one();
        result.bound = self.bound;
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.multiply(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.multiply(&base);
            }
        }
        result
    }

    /// Kronecker (internal) product: fix counts multiply pointwise, so the
    /// coefficient of `p_λ` is `z_λ c_λ(f) c_λ(g)`.
    pub fn kronecker(&self, other: &PSeries) -> PSeries {
        let bound = min_bound(self.bound, other.bound);
        let mut out = PSeries::zero(bound);
        for (l, a) in &self.coeffs {
            if let Some(b) = other.coeffs.get(l) {
                out.add_term(l.clone(), z_rat(l) * a * b);
            }
        }
        out
    }

    /// `⟨f, g⟩ = Σ_λ z_λ c_λ(f) c_λ(g)` over the degrees both series know.
    pub fn scalar_product(&self, other: &PSeries) -> Rational {
        let bound = min_bound(self.bound, other.bound);
        let mut total = Rational::zero();
        for (l, a) in &self.coeffs {
            if !within(bound, l.size()) {
                continue;
            }
            if let Some(b) = other.coeffs.get(l) {
                total += z_rat(l) * a * b;
            }
        }
        total
    }

    /// `p_k ∘ f`: substitutes `p_i ↦ p_{ki}`. A series known to degree `b`
    /// becomes known to degree `k(b+1) − 1`.
    pub fn adams(&self, k: usize) -> PSeries {
        assert!(k >= 1, "adams index must be positive");
        PSeries {
            bound: self.bound.map(|b| k * (b + 1) - 1),
            coeffs: self.coeffs.iter().map(|(l, c)| (l.scale(k), c.clone())).collect(),
        }
    }

    /// Plethysm `f ∘ g = Σ_λ c_λ(f) Π_k (p_k ∘ g)^{m_k(λ)}`.
    ///
    /// If `g` has a constant term, `f` must be exact. If `f` is truncated at
    /// `N` and the lowest degree of `g` is `δ ≥ 1`, the result is known up
    /// to degree `δ(N+1) − 1` (and no further than `g` is known).
    pub fn plethysm(&self, inner: &PSeries) -> Result<PSeries> {
        let has_constant = !inner.constant_term().is_zero();
        if has_constant && !self.is_exact() {
            return Err(Error::NonConvergentComposition);
        }
        let bound = match (self.bound, has_constant) {
            (None, _) => inner.bound,
            (Some(n), false) => match inner.min_degree() {
                Some(delta) => min_bound(Some(delta * (n + 1) - 1), inner.bound),
                None => inner.bound,
            },
            (Some(_), true) => unreachable!(),
        };
        let delta = if has_constant {
            0
        } else {
            inner.min_degree().unwrap_or(usize::MAX)
        };
        let inner = match bound {
            Some(b) => inner.truncate(b),
            None => inner.clone(),
        };
        let mut powers = PowerCache::new(&inner);
        let mut out = PSeries::zero(bound);
        for (lambda, c) in &self.coeffs {
            if lambda.is_empty() {
                out.add_term(Partition::empty(), c.clone());
                continue;
            }
            if let Some(b) = bound {
                if delta != 0 && delta.saturating_mul(lambda.size()) > b {
                    continue;
                }
            }
            let term = powers.monomial(lambda);
            for (m, v) in &term.coeffs {
                out.add_term(m.clone(), c * v);
            }
        }
        Ok(out)
    }

    /// `∂/∂p_1`, treating the `p_i` as independent variables. The bound drops
    /// by one. A series known only in degree 0 yields the zero series at
    /// bound 0.
    pub fn p1_derivative(&self) -> PSeries {
        let bound = self.bound.map(|b| b.saturating_sub(1));
        let mut out = PSeries::zero(bound);
        if self.bound == Some(0) {
            return out;
        }
        for (l, c) in &self.coeffs {
            let m1 = l.multiplicity(1);
            if m1 > 0 {
                let reduced = l.remove_one().expect("has a part 1");
                out.add_term(reduced, c * rat(m1 as i64));
            }
        }
        out
    }

    /// The `j`-th derivative with respect to `p_1`.
    pub fn p1_derivative_n(&self, j: usize) -> PSeries {
        (0..j).fold(self.clone(), |s, _| s.p1_derivative())
    }

    /// `fix F[λ] = z_λ c_λ`, zero outside the stored support.
    pub fn fix_counts(&self) -> FixFn {
        FixFn::Table(
            self.coeffs
                .iter()
                .map(|(l, c)| (l.clone(), z_rat(l) * c))
                .collect(),
        )
    }

    /// Fix count of a single cycle type.
    pub fn fix_at(&self, lambda: &Partition) -> Rational {
        self.coeffs
            .get(lambda)
            .map(|c| z_rat(lambda) * c)
            .unwrap_or_else(Rational::zero)
    }

    /// `Σ_{|λ| ≤ bound} fix(λ) p_λ / z_λ`.
    pub fn from_fix(fix: &FixFn, bound: usize) -> PSeries {
        let mut out = PSeries::zero(Some(bound));
        for lambda in partitions_up_to(bound) {
            let v = fix.eval(&lambda);
            if !v.is_zero() {
                let c = v / z_rat(&lambda);
                out.coeffs.insert(lambda, c);
            }
        }
        out
    }

    /// Coefficients of `x^0, x^1, ..` of the chosen specialization, up to the
    /// bound (or the top degree for an exact polynomial).
    pub fn specialize(&self, mode: Specialization) -> Vec<Rational> {
        let top = self.bound.unwrap_or_else(|| self.max_degree().unwrap_or(0));
        let mut out = vec![Rational::zero(); top + 1];
        for (l, c) in &self.coeffs {
            match mode {
                Specialization::Egf => {
                    if l.parts().iter().all(|&p| p == 1) {
                        out[l.size()] += c;
                    }
                }
                Specialization::IsoTypes => out[l.size()] += c,
            }
        }
        out
    }

    pub fn egf(&self) -> Vec<Rational> {
        self.specialize(Specialization::Egf)
    }

    pub fn iso_types(&self) -> Vec<Rational> {
        self.specialize(Specialization::IsoTypes)
    }
}

/// Series types that support the monomial expansion of a plethysm.
pub(crate) trait Graded: Clone {
    /// The unit, carrying the same bounds as `self`.
    fn unit(&self) -> Self;
    /// `p_k ∘ self`, re-truncated to the bounds of `self`.
    fn adams_within(&self, k: usize) -> Self;
    fn times(&self, other: &Self) -> Self;
}

impl Graded for PSeries {
    fn unit(&self) -> Self {
        let mut one = PSeries::one();
        one.bound = self.bound;
        one
    }

    fn adams_within(&self, k: usize) -> Self {
        let a = self.adams(k);
        match self.bound {
            Some(b) => a.truncate(b),
            None => a,
        }
    }

    fn times(&self, other: &Self) -> Self {
        self.multiply(other)
    }
}

/// Lazily computed `(p_k ∘ g)^m`, shared across the monomials of a plethysm.
pub(crate) struct PowerCache<'a, S: Graded> {
    inner: &'a S,
    powers: BTreeMap<(usize, usize), S>,
}

impl<'a, S: Graded> PowerCache<'a, S> {
    pub(crate) fn new(inner: &'a S) -> Self {
        PowerCache {
            inner,
            powers: BTreeMap::new(),
        }
    }

    fn power(&mut self, k: usize, m: usize) -> S {
        if let Some(p) = self.powers.get(&(k, m)) {
            return p.clone();
        }
        let p = match m {
            0 => self.inner.unit(),
            1 => self.inner.adams_within(k),
            _ => {
                let prev = self.power(k, m - 1);
                prev.times(&self.power(k, 1))
            }
        };
        self.powers.insert((k, m), p.clone());
        p
    }

    /// `p_λ ∘ g = Π_k (p_k ∘ g)^{m_k(λ)}`.
    pub(crate) fn monomial(&mut self, lambda: &Partition) -> S {
        let mut acc: Option<S> = None;
        for (k, m) in lambda.multiplicities() {
            let p = self.power(k, m);
            acc = Some(match acc {
                None => p,
                Some(a) => a.times(&p),
            });
        }
        acc.unwrap_or_else(|| self.inner.unit())
    }
}

impl Add for &PSeries {
    type Output = PSeries;
    fn add(self, rhs: &PSeries) -> PSeries {
        PSeries::linear_combine(&[(Rational::one(), self), (Rational::one(), rhs)], None)
    }
}

impl Sub for &PSeries {
    type Output = PSeries;
    fn sub(self, rhs: &PSeries) -> PSeries {
        PSeries::linear_combine(&[(Rational::one(), self), (-Rational::one(), rhs)], None)
    }
}

impl Neg for &PSeries {
    type Output = PSeries;
    fn neg(self) -> PSeries {
        self.scale(&-Rational::one())
    }
}

impl Mul for &PSeries {
    type Output = PSeries;
    fn mul(self, rhs: &PSeries) -> PSeries {
        self.multiply(rhs)
    }
}

impl fmt::Display for PSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().map(|(l, c)| (c, vec![("p", l)])))?;
        match self.bound {
            Some(b) => write!(f, " + O(deg {})", b + 1),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for PSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (&'a Rational, Vec<(&'static str, &'a Partition)>)>,
{
    let mut first = true;
    for (c, monomials) in terms {
        let negative = c.is_negative();
        if first {
            if negative {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if negative { " - " } else { " + " })?;
        }
        first = false;
        let abs = c.abs();
        let factors: Vec<String> = monomials
            .iter()
            .filter(|(_, l)| !l.is_empty())
            .map(|(name, l)| {
                let parts: Vec<String> = l.parts().iter().map(|p| p.to_string()).collect();
                format!("{name}[{}]", parts.join(","))
            })
            .collect();
        if factors.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&factors.join("*"))?;
        } else {
            write!(f, "{abs}*{}", factors.join("*"))?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    bound: Option<usize>,
    terms: Vec<TermJson>,
}

pub(crate) fn parse_rational<E: serde::de::Error>(s: &str) -> std::result::Result<Rational, E> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| E::custom(format!("bad rational `{s}`")))
}

impl Serialize for PSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson {
            bound: self.bound,
            terms: self
                .coeffs
                .iter()
                .map(|(l, c)| TermJson {
                    partition: l.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SeriesJson::deserialize(deserializer)?;
        let mut out = PSeries::zero(raw.bound);
        for t in raw.terms {
            if !within(raw.bound, t.partition.size()) {
                return Err(serde::de::Error::custom(format!(
                    "term {} exceeds bound",
                    t.partition
                )));
            }
            out.add_term(t.partition, parse_rational(&t.coeff)?);
        }
        Ok(out)
    }
}

/// A rule `λ ↦ fix F[λ]`: the fix-count (character) view of a possibly
/// virtual species.
#[derive(Clone)]
pub enum FixFn {
    /// Explicit values; zero elsewhere.
    Table(BTreeMap<Partition, Rational>),
    /// The same value for every cycle type (`E` has constant 1).
    Constant(Rational),
    /// 1 on partitions of even size, 0 otherwise (`1 + E_2 + E_4 + ...`).
    EvenSize,
    /// 1 on partitions of size `k`, 0 otherwise (`E_k`).
    SizeIs(usize),
    Rule(Arc<dyn Fn(&Partition) -> Rational + Send + Sync>),
}

impl FixFn {
    pub fn eval(&self, lambda: &Partition) -> Rational {
        match self {
            FixFn::Table(t) => t.get(lambda).cloned().unwrap_or_else(Rational::zero),
            FixFn::Constant(c) => c.clone(),
            FixFn::EvenSize => {
                if lambda.size().is_multiple_of(2) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }
            FixFn::SizeIs(k) => {
                if lambda.size() == *k {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }
            FixFn::Rule(f) => f(lambda),
        }
    }

    pub fn rule<F>(f: F) -> FixFn
    where
        F: Fn(&Partition) -> Rational + Send + Sync + 'static,
    {
        FixFn::Rule(Arc::new(f))
    }

    /// Pointwise `Σ a_i F_i`.
    pub fn linear(terms: Vec<(Rational, FixFn)>) -> FixFn {
        FixFn::rule(move |l| {
            terms
                .iter()
                .fold(Rational::zero(), |acc, (a, f)| acc + a * f.eval(l))
        })
    }

    pub fn negate(self) -> FixFn {
        FixFn::linear(vec![(-Rational::one(), self)])
    }
}

impl fmt::Debug for FixFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixFn::Table(t) => f.debug_tuple("Table").field(t).finish(),
            FixFn::Constant(c) => write!(f, "Constant({c})"),
            FixFn::EvenSize => f.write_str("EvenSize"),
            FixFn::SizeIs(k) => write!(f, "SizeIs({k})"),
            FixFn::Rule(_) => f.write_str("Rule(..)"),
        }
    }
}
