//! Two-sort series `Σ c_{λμ} p_λ(x) p_μ(y)`.
//!
//! Keys are `(λ, μ)` pairs stored jointly. The `x` and `y` bounds are
//! independent; either may be `None` (exact in that sort). The y-section at
//! a fixed `μ` is the one-sort series `Σ_λ c_{λμ} p_λ(x)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{partitions_up_to, Partition};
use crate::symfunc::{
    min_bound, parse_rational, within, write_terms, z_rat, Graded, PSeries, PowerCache, Rational,
};

pub type BiKey = (Partition, Partition);

#[derive(Clone, PartialEq, Eq)]
pub struct BiSeries {
    bound_x: Option<usize>,
    bound_y: Option<usize>,
    coeffs: BTreeMap<BiKey, Rational>,
}

impl BiSeries {
    pub fn zero(bound_x: Option<usize>, bound_y: Option<usize>) -> Self {
        BiSeries {
            bound_x,
            bound_y,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        BiSeries::monomial(Partition::empty(), Partition::empty())
    }

    /// The exact monomial `p_λ(x) p_μ(y)`.
    pub fn monomial(x: Partition, y: Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((x, y), Rational::one());
        BiSeries {
            bound_x: None,
            bound_y: None,
            coeffs,
        }
    }

    pub fn from_terms<I>(bound_x: Option<usize>, bound_y: Option<usize>, terms: I) -> Self
    where
        I: IntoIterator<Item = (BiKey, Rational)>,
    {
        let mut s = BiSeries::zero(bound_x, bound_y);
        for ((x, y), c) in terms {
            s.add_term(x, y, c);
        }
        s
    }

    /// A one-sort series placed in the `x` sort; exact in `y`.
    pub fn from_x(f: &PSeries) -> Self {
        BiSeries::from_terms(
            f.bound(),
            None,
            f.terms()
                .map(|(l, c)| ((l.clone(), Partition::empty()), c.clone())),
        )
    }

    /// A one-sort series placed in the `y` sort; exact in `x`.
    pub fn from_y(f: &PSeries) -> Self {
        BiSeries::from_terms(
            None,
            f.bound(),
            f.terms()
                .map(|(l, c)| ((Partition::empty(), l.clone()), c.clone())),
        )
    }

    /// Assembles a series from its y-sections.
    pub fn from_y_sections<I>(bound_x: Option<usize>, bound_y: Option<usize>, sections: I) -> Self
    where
        I: IntoIterator<Item = (Partition, PSeries)>,
    {
        let mut out = BiSeries::zero(bound_x, bound_y);
        for (mu, section) in sections {
            for (l, c) in section.terms() {
                out.add_term(l.clone(), mu.clone(), c.clone());
            }
        }
        out
    }

    /// `Σ fix(λ, μ) p_λ(x)/z_λ p_μ(y)/z_μ` over `|λ| ≤ bound_x`, `|μ| ≤ bound_y`.
    pub fn from_fix<F>(fix: F, bound_x: usize, bound_y: usize) -> Self
    where
        F: Fn(&Partition, &Partition) -> Rational,
    {
        let xs = partitions_up_to(bound_x);
        let mut out = BiSeries::zero(Some(bound_x), Some(bound_y));
        for mu in partitions_up_to(bound_y) {
            let zmu = z_rat(&mu);
            for lambda in &xs {
                let v = fix(lambda, &mu);
                if !v.is_zero() {
                    out.add_term(lambda.clone(), mu.clone(), v / (z_rat(lambda) * &zmu));
                }
            }
        }
        out
    }

    pub(crate) fn add_term(&mut self, x: Partition, y: Partition, c: Rational) {
        if c.is_zero() || !within(self.bound_x, x.size()) || !within(self.bound_y, y.size()) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry((x, y)) {
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

    pub fn bound_x(&self) -> Option<usize> {
        self.bound_x
    }

    pub fn bound_y(&self) -> Option<usize> {
        self.bound_y
    }

    pub fn is_exact(&self) -> bool {
        self.bound_x.is_none() && self.bound_y.is_none()
    }

    pub fn coeff(&self, x: &Partition, y: &Partition) -> Rational {
        self.coeffs
            .get(&(x.clone(), y.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `fix F[λ, μ] = z_λ z_μ c_{λμ}`.
    pub fn fix_at(&self, x: &Partition, y: &Partition) -> Rational {
        self.coeff(x, y) * z_rat(x) * z_rat(y)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BiKey, &Rational)> {
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
        self.coeff(&Partition::empty(), &Partition::empty())
    }

    /// True if no term involves `y`.
    pub fn is_pure_x(&self) -> bool {
        self.coeffs.keys().all(|(_, y)| y.is_empty())
    }

    pub fn truncate(&self, bound_x: Option<usize>, bound_y: Option<usize>) -> BiSeries {
        let bx = min_bound(self.bound_x, bound_x);
        let by = min_bound(self.bound_y, bound_y);
        BiSeries::from_terms(
            bx,
            by,
            self.coeffs.iter().map(|(k, c)| (k.clone(), c.clone())),
        )
    }

    pub fn scale(&self, c: &Rational) -> BiSeries {
        BiSeries::from_terms(
            self.bound_x,
            self.bound_y,
            self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)),
        )
    }

    pub fn linear_combine(terms: &[(Rational, &BiSeries)]) -> BiSeries {
        let bx = terms.iter().fold(None, |b, (_, s)| min_bound(b, s.bound_x));
        let by = terms.iter().fold(None, |b, (_, s)| min_bound(b, s.bound_y));
        let mut out = BiSeries::zero(bx, by);
        for (a, s) in terms {
            for ((x, y), c) in &s.coeffs {
                out.add_term(x.clone(), y.clone(), a * c);
            }
        }
        out
    }

    /// The x-series multiplying `p_μ(y)`, as raw coefficients.
    pub fn x_section(&self, mu: &Partition) -> PSeries {
        PSeries::from_terms(
            self.bound_x,
            self.coeffs
                .iter()
                .filter(|((_, y), _)| y == mu)
                .map(|((x, _), c)| (x.clone(), c.clone())),
        )
    }

    /// All nonzero y-sections, keyed by `μ` in canonical order.
    pub fn y_sections(&self) -> BTreeMap<Partition, PSeries> {
        let mut grouped: BTreeMap<Partition, Vec<(Partition, Rational)>> = BTreeMap::new();
        for ((x, y), c) in &self.coeffs {
            grouped
                .entry(y.clone())
                .or_default()
                .push((x.clone(), c.clone()));
        }
        grouped
            .into_iter()
            .map(|(mu, terms)| (mu, PSeries::from_terms(self.bound_x, terms)))
            .collect()
    }

    /// Two-sort product: `p_λ(x)p_μ(y) · p_α(x)p_β(y) = p_{λ∪α}(x) p_{μ∪β}(y)`.
    pub fn bi_multiply(&self, other: &BiSeries) -> BiSeries {
        let bx = min_bound(self.bound_x, other.bound_x);
        let by = min_bound(self.bound_y, other.bound_y);
        let mut out = BiSeries::zero(bx, by);
        for ((x1, y1), a) in &self.coeffs {
            if !within(bx, x1.size()) || !within(by, y1.size()) {
                continue;
            }
            for ((x2, y2), b) in &other.coeffs {
                if within(bx, x1.size() + x2.size()) && within(by, y1.size() + y2.size()) {
                    out.add_term(x1.union(x2), y1.union(y2), a * b);
                }
            }
        }
        out
    }

    /// Cartesian product in `Y`: at each `μ` the x-sections multiply and the
    /// result is rescaled by `z_μ`, i.e. fix counts in `y` multiply.
    pub fn cartesian_y(&self, other: &BiSeries) -> BiSeries {
        let bx = min_bound(self.bound_x, other.bound_x);
        let by = min_bound(self.bound_y, other.bound_y);
        let left = self.y_sections();
        let right = other.y_sections();
        let mut out = BiSeries::zero(bx, by);
        for (mu, a) in &left {
            if !within(by, mu.size()) {
                continue;
            }
            if let Some(b) = right.get(mu) {
                let prod = a.multiply(b).scale(&z_rat(mu));
                for (l, c) in prod.terms() {
                    out.add_term(l.clone(), mu.clone(), c.clone());
                }
            }
        }
        out
    }

    /// Scalar product in `Y`: `Σ_μ z_μ · a_μ(x) b_μ(x)`, equal to
    /// `cartesian_y` followed by `set_y_one`.
    pub fn scalar_y(&self, other: &BiSeries) -> PSeries {
        let bx = min_bound(self.bound_x, other.bound_x);
        let by = min_bound(self.bound_y, other.bound_y);
        let left = self.y_sections();
        let right = other.y_sections();
        let mut parts: Vec<PSeries> = Vec::new();
        for (mu, a) in &left {
            if !within(by, mu.size()) {
                continue;
            }
            if let Some(b) = right.get(mu) {
                parts.push(a.multiply(b).scale(&z_rat(mu)));
            }
        }
        let refs: Vec<(Rational, &PSeries)> = parts.iter().map(|p| (Rational::one(), p)).collect();
        PSeries::linear_combine(&refs, bx).truncate_opt(bx)
    }

    /// `Y = 1`: every `p_μ(y)` is replaced by 1.
    pub fn set_y_one(&self) -> PSeries {
        PSeries::from_terms(
            self.bound_x,
            self.coeffs.iter().map(|((x, _), c)| (x.clone(), c.clone())),
        )
    }

    /// `p_k ∘ F` in both sorts: `p_i(x) ↦ p_{ki}(x)`, `p_i(y) ↦ p_{ki}(y)`.
    pub fn adams(&self, k: usize) -> BiSeries {
        assert!(k >= 1, "adams index must be positive");
        BiSeries {
            bound_x: self.bound_x.map(|b| k * (b + 1) - 1),
            bound_y: self.bound_y.map(|b| k * (b + 1) - 1),
            coeffs: self
                .coeffs
                .iter()
                .map(|((x, y), c)| ((x.scale(k), y.scale(k)), c.clone()))
                .collect(),
        }
    }

    /// `∂/∂p_1(x)`; the x bound drops by one.
    pub fn p1_derivative_x(&self) -> BiSeries {
        let mut out = BiSeries::zero(self.bound_x.map(|b| b.saturating_sub(1)), self.bound_y);
        if self.bound_x == Some(0) {
            return out;
        }
        for ((x, y), c) in &self.coeffs {
            let m1 = x.multiplicity(1);
            if m1 > 0 {
                let reduced = x.remove_one().expect("has a part 1");
                out.add_term(reduced, y.clone(), c * Rational::from_integer(m1.into()));
            }
        }
        out
    }

    /// Two-sort plethysm `f ∘ h = Σ_λ c_λ(f) Π_k (p_k ∘ h)^{m_k(λ)}`.
    ///
    /// When `f` is truncated at `N`, every term of `h` must raise the x
    /// degree, or every term must raise the y degree, or `N` must cover
    /// `bound_x + bound_y`; otherwise the omitted terms of `f` could reach
    /// inside the bounds and the call fails.
    pub fn bi_plethysm(f: &PSeries, h: &BiSeries) -> Result<BiSeries> {
        let has_constant = !h.constant_term().is_zero();
        if has_constant && !f.is_exact() {
            return Err(Error::NonConvergentComposition);
        }
        let nonconstant = || h.coeffs.keys().filter(|(x, y)| !(x.is_empty() && y.is_empty()));
        let min_x = nonconstant().map(|(x, _)| x.size()).min();
        let min_y = nonconstant().map(|(_, y)| y.size()).min();
        // Minimal (x, y) degree growth per unit of |λ|, used to skip monomials.
        let (mut bx, mut by) = (h.bound_x, h.bound_y);
        let (mut step_x, mut step_y) = (0usize, 0usize);
        if !has_constant {
            if let (Some(ax), Some(ay)) = (min_x, min_y) {
                step_x = ax;
                step_y = ay;
            }
        }
        if let Some(n) = f.bound() {
            if min_x.is_some() {
                if step_x >= 1 {
                    bx = min_bound(bx, Some(step_x * (n + 1) - 1));
                } else if step_y >= 1 {
                    by = min_bound(by, Some(step_y * (n + 1) - 1));
                } else {
                    let required = match (h.bound_x, h.bound_y) {
                        (Some(x), Some(y)) => x + y,
                        _ => {
                            return Err(Error::Invalid(
                                "truncated outer series needs bounded inner series when inner terms are pure in one sort"
                                    .into(),
                            ))
                        }
                    };
                    if n < required {
                        return Err(Error::InsufficientBound {
                            what: "outer series",
                            required,
                            given: n,
                        });
                    }
                }
            }
        }
        let inner = h.truncate(bx, by);
        let mut cache = PowerCache::new(&inner);
        let mut out = BiSeries::zero(bx, by);
        let total_cap = match (bx, by) {
            (Some(x), Some(y)) if step_x == 0 && step_y == 0 && !has_constant => Some(x + y),
            _ => None,
        };
        for (lambda, c) in f.terms() {
            let size = lambda.size();
            if size > 0 && !has_constant {
                if step_x >= 1 && !within(bx, step_x * size) {
                    continue;
                }
                if step_y >= 1 && !within(by, step_y * size) {
                    continue;
                }
                if total_cap.is_some_and(|cap| size > cap) {
                    continue;
                }
            }
            let term = cache.monomial(lambda);
            for ((x, y), v) in &term.coeffs {
                out.add_term(x.clone(), y.clone(), c * v);
            }
        }
        Ok(out)
    }

    /// Coefficient table `[a][b]` of `x^a y^b` under `p_i(x) = x^i`,
    /// `p_i(y) = y^i`.
    pub fn iso_types_xy(&self) -> Vec<Vec<Rational>> {
        let top_x = self
            .bound_x
            .unwrap_or_else(|| self.coeffs.keys().map(|(x, _)| x.size()).max().unwrap_or(0));
        let top_y = self
            .bound_y
            .unwrap_or_else(|| self.coeffs.keys().map(|(_, y)| y.size()).max().unwrap_or(0));
        let mut out = vec![vec![Rational::zero(); top_y + 1]; top_x + 1];
        for ((x, y), c) in &self.coeffs {
            out[x.size()][y.size()] += c;
        }
        out
    }
}

impl Graded for BiSeries {
    fn unit(&self) -> Self {
        let mut one = BiSeries::one();
        one.bound_x = self.bound_x;
        one.bound_y = self.bound_y;
        one
    }

    fn adams_within(&self, k: usize) -> Self {
        self.adams(k).truncate(self.bound_x, self.bound_y)
    }

    fn times(&self, other: &Self) -> Self {
        self.bi_multiply(other)
    }
}

impl Add for &BiSeries {
    type Output = BiSeries;
    fn add(self, rhs: &BiSeries) -> BiSeries {
        BiSeries::linear_combine(&[(Rational::one(), self), (Rational::one(), rhs)])
    }
}

impl Sub for &BiSeries {
    type Output = BiSeries;
    fn sub(self, rhs: &BiSeries) -> BiSeries {
        BiSeries::linear_combine(&[(Rational::one(), self), (-Rational::one(), rhs)])
    }
}

impl Neg for &BiSeries {
    type Output = BiSeries;
    fn neg(self) -> BiSeries {
        self.scale(&-Rational::one())
    }
}

impl Mul for &BiSeries {
    type Output = BiSeries;
    fn mul(self, rhs: &BiSeries) -> BiSeries {
        self.bi_multiply(rhs)
    }
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .map(|((x, y), c)| (c, vec![("px", x), ("py", y)])),
        )?;
        if self.bound_x.is_some() || self.bound_y.is_some() {
            let show = |b: Option<usize>| b.map_or("exact".to_string(), |v| v.to_string());
            write!(f, " (bounds x: {}, y: {})", show(self.bound_x), show(self.bound_y))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct BiTermJson {
    x: Partition,
    y: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct BiSeriesJson {
    bound_x: Option<usize>,
    bound_y: Option<usize>,
    terms: Vec<BiTermJson>,
}

impl Serialize for BiSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        BiSeriesJson {
            bound_x: self.bound_x,
            bound_y: self.bound_y,
            terms: self
                .coeffs
                .iter()
                .map(|((x, y), c)| BiTermJson {
                    x: x.clone(),
                    y: y.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BiSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BiSeriesJson::deserialize(deserializer)?;
        let mut out = BiSeries::zero(raw.bound_x, raw.bound_y);
        for t in raw.terms {
            if !within(raw.bound_x, t.x.size()) || !within(raw.bound_y, t.y.size()) {
                return Err(serde::de::Error::custom("term exceeds bounds"));
            }
            out.add_term(t.x, t.y, parse_rational(&t.coeff)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::rat;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn px_py(x: &[usize], y: &[usize]) -> BiSeries {
        BiSeries::monomial(p(x), p(y))
    }

    #[test]
    fn products() {
        let g = px_py(&[1], &[1]);
        assert_eq!(&BiSeries::one() * &g, g);
        assert_eq!(&g * &px_py(&[], &[1]), px_py(&[1], &[1, 1]));
        let xe3 = &BiSeries::from_x(&PSeries::singleton()) * &BiSeries::from_y(&PSeries::sets_of_size(3));
        assert_eq!(xe3.coeff(&p(&[1]), &p(&[3])), q(1, 3));
        assert_eq!(xe3.coeff(&p(&[1]), &p(&[1, 1, 1])), q(1, 6));
        assert_eq!(xe3.len(), 3);
    }

    #[test]
    fn cartesian_in_y() {
        let f = px_py(&[1], &[1]);
        assert_eq!(f.cartesian_y(&f), px_py(&[1, 1], &[1]));
        // Fix count 1 at every μ: the identity for ×_Y.
        let ident = BiSeries::from_y(&PSeries::sets(4));
        let g = &px_py(&[2], &[2]) + &px_py(&[1], &[1, 1, 1]);
        assert_eq!(ident.cartesian_y(&g), g.truncate(None, Some(4)));
        // y-degree 0 behaves as x multiplication.
        let a = BiSeries::from_x(&PSeries::sets_of_size(2));
        let b = BiSeries::from_x(&PSeries::singleton());
        assert_eq!(a.cartesian_y(&b), &a * &b);
    }

    #[test]
    fn scalar_in_y() {
        let f = px_py(&[1], &[1]);
        assert!(f.scalar_y(&BiSeries::zero(None, None)).is_zero());
        assert_eq!(f.scalar_y(&px_py(&[], &[1])), PSeries::singleton());
        let g = &px_py(&[2], &[2]) + &px_py(&[1, 1], &[2]);
        assert_eq!(f.scalar_y(&g), f.cartesian_y(&g).set_y_one());
        assert_eq!(g.scalar_y(&g), g.cartesian_y(&g).set_y_one());
    }

    #[test]
    fn set_y_one_sums_sections() {
        let pure = BiSeries::from_x(&PSeries::sets_of_size(2));
        assert_eq!(pure.set_y_one(), PSeries::sets_of_size(2));
        let f = &px_py(&[1], &[1]) + &px_py(&[1], &[2]);
        assert_eq!(f.set_y_one(), PSeries::singleton().scale(&rat(2)));
    }

    #[test]
    fn worked_example_expansion() {
        let h = &BiSeries::from_x(&PSeries::singleton()) * &BiSeries::from_y(&PSeries::sets_of_size(2));
        let g = BiSeries::bi_plethysm(&PSeries::sets_of_size(2), &h).unwrap();
        assert!(g.is_exact());
        let expected = [
            (vec![1, 1], vec![1, 1, 1, 1], q(1, 8)),
            (vec![1, 1], vec![2, 1, 1], q(1, 4)),
            (vec![1, 1], vec![2, 2], q(1, 8)),
            (vec![2], vec![2, 2], q(1, 4)),
            (vec![2], vec![4], q(1, 4)),
        ];
        assert_eq!(g.len(), expected.len());
        for (x, y, c) in expected {
            assert_eq!(g.coeff(&p(&x), &p(&y)), c, "{x:?} {y:?}");
        }
        assert_eq!(BiSeries::bi_plethysm(&PSeries::singleton(), &h).unwrap(), h);
        let e = PSeries::sets(4);
        assert_eq!(
            BiSeries::bi_plethysm(&e, &BiSeries::zero(Some(3), Some(3))).unwrap(),
            BiSeries::one().truncate(Some(3), Some(3))
        );
    }

    #[test]
    fn perfect_matchings_in_y() {
        let em = BiSeries::bi_plethysm(&PSeries::sets(3), &BiSeries::from_y(&PSeries::sets_of_size(2))).unwrap();
        let iso = em.truncate(None, Some(6)).iso_types_xy();
        let row: Vec<Rational> = iso[0].clone();
        // One unlabeled perfect matching for every even number of points.
        assert_eq!(row, vec![rat(1), rat(0), rat(1), rat(0), rat(1), rat(0), rat(1)]);
    }

    #[test]
    fn pure_x_agrees_with_one_sort() {
        let inner = &PSeries::sets_of_size(2) + &PSeries::singleton();
        let one = PSeries::sets(5).plethysm(&inner).unwrap();
        let two = BiSeries::bi_plethysm(&PSeries::sets(5), &BiSeries::from_x(&inner)).unwrap();
        assert_eq!(two.set_y_one(), one);
    }

    #[test]
    fn guard_and_bound_errors() {
        let h = &BiSeries::one() + &px_py(&[1], &[]);
        assert_eq!(
            BiSeries::bi_plethysm(&PSeries::sets(3), &h),
            Err(Error::NonConvergentComposition)
        );
        let mixed = (&px_py(&[1], &[]) + &px_py(&[], &[1])).truncate(Some(3), Some(3));
        assert!(matches!(
            BiSeries::bi_plethysm(&PSeries::sets(4), &mixed),
            Err(Error::InsufficientBound { required: 6, given: 4, .. })
        ));
        assert!(BiSeries::bi_plethysm(&PSeries::sets(6), &mixed).is_ok());
    }

    #[test]
    fn iso_types_of_zero() {
        assert_eq!(BiSeries::zero(None, None).iso_types_xy(), vec![vec![rat(0)]]);
    }

    #[test]
    fn fix_round_trip() {
        let g = &px_py(&[2], &[2, 1]) + &px_py(&[1, 1], &[3]).scale(&q(1, 3));
        let f = BiSeries::from_fix(|x, y| g.fix_at(x, y), 2, 3);
        assert_eq!(f, g.truncate(Some(2), Some(3)));
    }

    #[test]
    fn json_shape() {
        let g = px_py(&[1], &[2]).scale(&q(1, 2));
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(
            text,
            r#"{"bound_x":null,"bound_y":null,"terms":[{"x":[1],"y":[2],"coeff":"1/2"}]}"#
        );
        let back: BiSeries = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
    }
}
