use std::collections::HashMap;

use num_traits::Zero;

use super::expr::{Sort, SpeciesExpr};
use crate::error::{Error, Result};
use crate::multisort::BiSeries;
use crate::symfunc::PSeries;

/// A cycle index in one or two sorts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleIndex {
    One(PSeries),
    Two(BiSeries),
}

/// Cycle index of `expr`, truncated at `bound_x` in `X` and, when given,
/// at `bound_y` in `Y`. Without `bound_y` the expression must be one-sort.
pub fn cycle_index(
    expr: &SpeciesExpr,
    bound_x: usize,
    bound_y: Option<usize>,
) -> Result<CycleIndex> {
    let mut ev = Evaluator::new();
    match bound_y {
        None => ev.one_sort(expr, bound_x).map(CycleIndex::One),
        Some(by) => ev.two_sort(expr, bound_x, by).map(CycleIndex::Two),
    }
}

/// One-sort cycle index truncated at `bound`.
pub fn cycle_index_one(expr: &SpeciesExpr, bound: usize) -> Result<PSeries> {
    Evaluator::new().one_sort(expr, bound)
}

/// Two-sort cycle index truncated at `(bound_x, bound_y)`.
pub fn cycle_index_two(expr: &SpeciesExpr, bound_x: usize, bound_y: usize) -> Result<BiSeries> {
    Evaluator::new().two_sort(expr, bound_x, bound_y)
}

/// The exact polynomial cycle index of a one-sort expression built without
/// `E` or `E⁺`, or `None` if the expression uses an infinite atom.
///
/// This is a syntactic test: `E − E` is reported as not finite.
pub fn exact_cycle_index(expr: &SpeciesExpr) -> Result<Option<PSeries>> {
    use SpeciesExpr as S;
    Ok(Some(match expr {
        S::Zero => PSeries::zero(None),
        S::One => PSeries::one(),
        S::Singleton { sort: Sort::X } => PSeries::singleton(),
        S::Singleton { sort: Sort::Y } => return Err(y_in_one_sort()),
        S::Sets | S::NonemptySets => return Ok(None),
        S::SetsOfSize { k } => PSeries::sets_of_size(*k),
        S::Sum { left, right } | S::Difference { left, right } | S::Product { left, right } => {
            let (Some(a), Some(b)) = (exact_cycle_index(left)?, exact_cycle_index(right)?) else {
                return Ok(None);
            };
            match expr {
                S::Sum { .. } => &a + &b,
                S::Difference { .. } => &a - &b,
                _ => &a * &b,
            }
        }
        S::Compose { outer, inner } => {
            let (Some(f), Some(g)) = (exact_cycle_index(outer)?, exact_cycle_index(inner)?) else {
                return Ok(None);
            };
            f.plethysm(&g)?
        }
        S::Derivative { inner, order } => match exact_cycle_index(inner)? {
            Some(f) => f.p1_derivative_n(*order),
            None => return Ok(None),
        },
    }))
}

pub fn is_strictly_finite(expr: &SpeciesExpr) -> Result<bool> {
    Ok(exact_cycle_index(expr)?.is_some())
}

fn y_in_one_sort() -> Error {
    Error::Sort("`Y` appears in a one-sort expression".into())
}

/// Evaluates expressions to truncated cycle indices, caching every
/// subexpression per bound.
#[derive(Default)]
pub struct Evaluator {
    one: HashMap<(SpeciesExpr, usize), PSeries>,
    two: HashMap<(SpeciesExpr, usize, usize), BiSeries>,
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn one_sort(&mut self, expr: &SpeciesExpr, bound: usize) -> Result<PSeries> {
        let key = (expr.clone(), bound);
        if let Some(s) = self.one.get(&key) {
            return Ok(s.clone());
        }
        let s = self.one_sort_uncached(expr, bound)?.truncate(bound);
        self.one.insert(key, s.clone());
        Ok(s)
    }

    fn one_sort_uncached(&mut self, expr: &SpeciesExpr, n: usize) -> Result<PSeries> {
        use SpeciesExpr as S;
        Ok(match expr {
            S::Zero => PSeries::zero(None),
            S::One => PSeries::one(),
            S::Singleton { sort: Sort::X } => PSeries::singleton(),
            S::Singleton { sort: Sort::Y } => return Err(y_in_one_sort()),
            S::Sets => PSeries::sets(n),
            S::SetsOfSize { k } => PSeries::sets_of_size(*k),
            S::NonemptySets => PSeries::nonempty_sets(n),
            S::Sum { left, right } => &self.one_sort(left, n)? + &self.one_sort(right, n)?,
            S::Difference { left, right } => &self.one_sort(left, n)? - &self.one_sort(right, n)?,
            S::Product { left, right } => &self.one_sort(left, n)? * &self.one_sort(right, n)?,
            S::Derivative { inner, order } => {
                self.one_sort(inner, n + order)?.p1_derivative_n(*order)
            }
            S::Compose { outer, inner } => {
                let g = self.one_sort(inner, n)?;
                let f = if g.constant_term().is_zero() {
                    self.one_sort(outer, n)?
                } else {
                    exact_cycle_index(outer)?.ok_or(Error::NonConvergentComposition)?
                };
                f.plethysm(&g)?
            }
        })
    }

    pub fn two_sort(&mut self, expr: &SpeciesExpr, bound_x: usize, bound_y: usize) -> Result<BiSeries> {
        let key = (expr.clone(), bound_x, bound_y);
        if let Some(s) = self.two.get(&key) {
            return Ok(s.clone());
        }
        let s = self
            .two_sort_uncached(expr, bound_x, bound_y)?
            .truncate(Some(bound_x), Some(bound_y));
        self.two.insert(key, s.clone());
        Ok(s)
    }

    fn two_sort_uncached(&mut self, expr: &SpeciesExpr, bx: usize, by: usize) -> Result<BiSeries> {
        use SpeciesExpr as S;
        Ok(match expr {
            S::Zero => BiSeries::zero(None, None),
            S::One => BiSeries::one(),
            S::Singleton { sort: Sort::X } => BiSeries::from_x(&PSeries::singleton()),
            S::Singleton { sort: Sort::Y } => BiSeries::from_y(&PSeries::singleton()),
            S::Sets | S::SetsOfSize { .. } | S::NonemptySets => {
                BiSeries::from_x(&self.one_sort(expr, bx)?)
            }
            S::Sum { left, right } => &self.two_sort(left, bx, by)? + &self.two_sort(right, bx, by)?,
            S::Difference { left, right } => {
                &self.two_sort(left, bx, by)? - &self.two_sort(right, bx, by)?
            }
            S::Product { left, right } => {
                &self.two_sort(left, bx, by)? * &self.two_sort(right, bx, by)?
            }
            S::Derivative { inner, order } => {
                let mut s = self.two_sort(inner, bx + order, by)?;
                for _ in 0..*order {
                    s = s.p1_derivative_x();
                }
                s
            }
            S::Compose { outer, inner } => {
                if outer.mentions_y() {
                    return Err(Error::Sort(format!(
                        "outer species `{outer}` of a composition must not mention `Y`"
                    )));
                }
                let h = self.two_sort(inner, bx, by)?;
                let f = if h.constant_term().is_zero() {
                    let n = outer_bound_needed(&h, bx, by);
                    self.one_sort(outer, n)?
                } else {
                    exact_cycle_index(outer)?.ok_or(Error::NonConvergentComposition)?
                };
                BiSeries::bi_plethysm(&f, &h)?
            }
        })
    }
}

/// Degree to which the outer series of a composition must be known so that
/// the result is correct up to `(bx, by)`.
fn outer_bound_needed(h: &BiSeries, bx: usize, by: usize) -> usize {
    let mut min_x = usize::MAX;
    let mut min_y = usize::MAX;
    for ((x, y), _) in h.terms() {
        min_x = min_x.min(x.size());
        min_y = min_y.min(y.size());
    }
    if h.is_zero() {
        0
    } else if min_x >= 1 {
        bx
    } else if min_y >= 1 {
        by
    } else {
        bx + by
    }
}
