use std::fmt;

use serde::{Deserialize, Serialize};

/// Sort of a singleton atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sort {
    X,
    Y,
}

/// Abstract syntax of species expressions.
///
/// `Compose { outer, inner }` is `outer(inner)`; the outer expression is
/// one-sort and its `X` stands for the argument. `Derivative` is taken with
/// respect to `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum SpeciesExpr {
    Zero,
    One,
    Singleton { sort: Sort },
    /// `E`, the species of sets.
    Sets,
    /// `E_k`, sets of size exactly `k`.
    SetsOfSize { k: usize },
    /// `E⁺ = E − 1`, nonempty sets.
    NonemptySets,
    Sum { left: Box<SpeciesExpr>, right: Box<SpeciesExpr> },
    Difference { left: Box<SpeciesExpr>, right: Box<SpeciesExpr> },
    Product { left: Box<SpeciesExpr>, right: Box<SpeciesExpr> },
    Compose { outer: Box<SpeciesExpr>, inner: Box<SpeciesExpr> },
    Derivative { inner: Box<SpeciesExpr>, order: usize },
}

impl SpeciesExpr {
    pub fn x() -> Self {
        SpeciesExpr::Singleton { sort: Sort::X }
    }

    pub fn y() -> Self {
        SpeciesExpr::Singleton { sort: Sort::Y }
    }

    pub fn sets_of_size(k: usize) -> Self {
        SpeciesExpr::SetsOfSize { k }
    }

    pub fn sum(left: SpeciesExpr, right: SpeciesExpr) -> Self {
        SpeciesExpr::Sum {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn difference(left: SpeciesExpr, right: SpeciesExpr) -> Self {
        SpeciesExpr::Difference {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn product(left: SpeciesExpr, right: SpeciesExpr) -> Self {
        SpeciesExpr::Product {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn compose(outer: SpeciesExpr, inner: SpeciesExpr) -> Self {
        SpeciesExpr::Compose {
            outer: Box::new(outer),
            inner: Box::new(inner),
        }
    }

    /// The `order`-th derivative. Nested derivatives merge, and order 0 is
    /// the expression itself.
    pub fn derivative(inner: SpeciesExpr, order: usize) -> Self {
        match (inner, order) {
            (e, 0) => e,
            (SpeciesExpr::Derivative { inner, order: o }, j) => SpeciesExpr::Derivative {
                inner,
                order: o + j,
            },
            (e, j) => SpeciesExpr::Derivative {
                inner: Box::new(e),
                order: j,
            },
        }
    }

    /// Sum of expressions; the empty sum is `0`.
    pub fn sum_all<I: IntoIterator<Item = SpeciesExpr>>(terms: I) -> Self {
        terms
            .into_iter()
            .reduce(SpeciesExpr::sum)
            .unwrap_or(SpeciesExpr::Zero)
    }

    /// True if `Y` occurs anywhere.
    pub fn mentions_y(&self) -> bool {
        match self {
            SpeciesExpr::Singleton { sort } => *sort == Sort::Y,
            SpeciesExpr::Sum { left, right }
            | SpeciesExpr::Difference { left, right }
            | SpeciesExpr::Product { left, right } => left.mentions_y() || right.mentions_y(),
            SpeciesExpr::Compose { outer, inner } => outer.mentions_y() || inner.mentions_y(),
            SpeciesExpr::Derivative { inner, .. } => inner.mentions_y(),
            _ => false,
        }
    }

    fn is_atom(&self) -> bool {
        matches!(
            self,
            SpeciesExpr::Zero
                | SpeciesExpr::One
                | SpeciesExpr::Singleton { .. }
                | SpeciesExpr::Sets
                | SpeciesExpr::SetsOfSize { .. }
                | SpeciesExpr::NonemptySets
        )
    }

    /// Whether this prints as a `primary` that can take an argument list or
    /// primes without parentheses.
    fn is_primary(&self) -> bool {
        match self {
            SpeciesExpr::Derivative { inner, .. } => inner.is_atom() || inner.is_compose(),
            SpeciesExpr::Compose { .. } => true,
            e => e.is_atom(),
        }
    }

    fn is_compose(&self) -> bool {
        matches!(self, SpeciesExpr::Compose { .. })
    }

    fn is_additive(&self) -> bool {
        matches!(self, SpeciesExpr::Sum { .. } | SpeciesExpr::Difference { .. })
    }
}

fn primes(order: usize) -> String {
    "'".repeat(order)
}

impl fmt::Display for SpeciesExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpeciesExpr::Zero => f.write_str("0"),
            SpeciesExpr::One => f.write_str("1"),
            SpeciesExpr::Singleton { sort: Sort::X } => f.write_str("X"),
            SpeciesExpr::Singleton { sort: Sort::Y } => f.write_str("Y"),
            SpeciesExpr::Sets => f.write_str("E"),
            SpeciesExpr::SetsOfSize { k } => write!(f, "E_{k}"),
            SpeciesExpr::NonemptySets => f.write_str("Eplus"),
            SpeciesExpr::Sum { left, right } => {
                if right.is_additive() {
                    write!(f, "{left} + ({right})")
                } else {
                    write!(f, "{left} + {right}")
                }
            }
            SpeciesExpr::Difference { left, right } => {
                if right.is_additive() {
                    write!(f, "{left} - ({right})")
                } else {
                    write!(f, "{left} - {right}")
                }
            }
            SpeciesExpr::Product { left, right } => {
                if left.is_additive() {
                    write!(f, "({left})")?;
                } else {
                    write!(f, "{left}")?;
                }
                f.write_str("*")?;
                if right.is_additive() || matches!(**right, SpeciesExpr::Product { .. }) {
                    write!(f, "({right})")
                } else {
                    write!(f, "{right}")
                }
            }
            SpeciesExpr::Compose { outer, inner } => {
                // A primed atom takes its argument directly; anything else
                // composite is parenthesised first.
                let bare = outer.is_atom()
                    || matches!(&**outer, SpeciesExpr::Derivative { inner, .. } if inner.is_atom());
                if bare {
                    write!(f, "{outer}({inner})")
                } else {
                    write!(f, "({outer})({inner})")
                }
            }
            SpeciesExpr::Derivative { inner, order } => {
                if inner.is_primary() {
                    write!(f, "{inner}{}", primes(*order))
                } else {
                    write!(f, "({inner}){}", primes(*order))
                }
            }
        }
    }
}
