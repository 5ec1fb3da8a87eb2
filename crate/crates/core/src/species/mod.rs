//! Species expressions, their cycle indices, the `Φ` map and inner
//! plethysm.

mod eval;
mod expr;
mod inner;
mod parser;
mod phi;

pub use eval::{
    cycle_index, cycle_index_one, cycle_index_two, exact_cycle_index, is_strictly_finite,
    CycleIndex, Evaluator,
};
pub use expr::{Sort, SpeciesExpr};
pub use inner::{inner_plethysm, inner_plethysm_y};
pub use parser::parse_species;
pub use phi::{phi_cycle_index, phi_diagonal_fix, phi_fix};

use crate::error::Result;
use crate::symfunc::{FixFn, PSeries};

/// A possibly virtual one-sort species, given either symbolically or by its
/// fix counts up to a degree.
#[derive(Clone, Debug)]
pub enum VirtualSpecies {
    Expr(SpeciesExpr),
    Fix { fix: FixFn, bound: usize },
}

impl VirtualSpecies {
    /// Cycle index truncated at `bound` (or at the table bound, if smaller).
    pub fn cycle_index(&self, bound: usize) -> Result<PSeries> {
        match self {
            VirtualSpecies::Expr(e) => cycle_index_one(e, bound),
            VirtualSpecies::Fix { fix, bound: b } => Ok(PSeries::from_fix(fix, bound.min(*b))),
        }
    }

    /// Fix counts, correct on partitions of size at most `bound`.
    pub fn fix_counts(&self, bound: usize) -> Result<FixFn> {
        match self {
            VirtualSpecies::Expr(e) => Ok(cycle_index_one(e, bound)?.fix_counts()),
            VirtualSpecies::Fix { fix, .. } => Ok(fix.clone()),
        }
    }
}
