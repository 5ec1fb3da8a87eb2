//! Counting pipelines for `G`-digraphs, `G`-graphs and bicolored
//! `G`-graphs.
//!
//! A `G`-digraph is a digraph together with a `G`-structure on the set of
//! out-neighbours of every vertex; a `G`-graph (multiple edges allowed) puts
//! a `G`-structure on the half-edges at every vertex. With `G = E_k` these
//! are digraphs of outdegree `k` and `k`-regular multigraphs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::multisort::BiSeries;
use crate::partitions::{enumerate_partitions, Partition};
use crate::species::{
    cycle_index_two, exact_cycle_index, inner_plethysm_y, phi_diagonal_fix, SpeciesExpr,
};
use crate::symfunc::{z_rat, FixFn, PSeries, Rational};

/// Whether loops are permitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Loops {
    Allowed,
    Forbidden,
}

impl Loops {
    pub fn from_flag(allowed: bool) -> Self {
        if allowed {
            Loops::Allowed
        } else {
            Loops::Forbidden
        }
    }
}

/// One row of a [`CountTable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub n: usize,
    /// Secondary index: the outdegree `k` or the edge count `e`.
    pub k: Option<usize>,
    pub count: BigUint,
}

/// Exact counts indexed by vertex number and optionally a second
/// parameter, with metadata describing how they were obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub rows: Vec<CountRow>,
    /// Name of the secondary column (`"k"` or `"e"`), if any.
    pub secondary: Option<&'static str>,
    pub provenance: BTreeMap<String, String>,
}

impl CountTable {
    fn new(secondary: Option<&'static str>) -> Self {
        CountTable {
            rows: Vec::new(),
            secondary,
            provenance: BTreeMap::new(),
        }
    }

    fn note(&mut self, key: &str, value: impl ToString) {
        self.provenance.insert(key.to_string(), value.to_string());
    }

    pub fn get(&self, n: usize, k: Option<usize>) -> Option<&BigUint> {
        self.rows
            .iter()
            .find(|r| r.n == n && r.k == k)
            .map(|r| &r.count)
    }

    /// Counts in row order.
    pub fn counts(&self) -> Vec<BigUint> {
        self.rows.iter().map(|r| r.count.clone()).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match self.secondary {
            Some(name) => {
                let _ = writeln!(out, "n,{name},count");
                for r in &self.rows {
                    let _ = writeln!(out, "{},{},{}", r.n, r.k.unwrap_or(0), r.count);
                }
            }
            None => {
                out.push_str("n,count\n");
                for r in &self.rows {
                    let _ = writeln!(out, "{},{}", r.n, r.count);
                }
            }
        }
        out
    }

    /// Rows as JSON objects with decimal-string counts.
    pub fn to_json(&self, with_provenance: bool) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut m = serde_json::Map::new();
                m.insert("n".into(), r.n.into());
                if let (Some(name), Some(k)) = (self.secondary, r.k) {
                    m.insert(name.into(), k.into());
                }
                m.insert("count".into(), r.count.to_string().into());
                serde_json::Value::Object(m)
            })
            .collect();
        if with_provenance {
            serde_json::json!({ "rows": rows, "provenance": self.provenance })
        } else {
            serde_json::Value::Array(rows)
        }
    }
}

/// Converts an exact count to a nonnegative integer.
pub fn to_count(value: &Rational, context: impl FnOnce() -> String) -> Result<BigUint> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegral {
            value: value.to_string(),
            context: context(),
        });
    }
    Ok(value.to_integer().magnitude().clone())
}

/// A virtual species `G_1` with `G_1 + G_1′ = G`, as fix counts.
///
/// For strictly finite `G` this is the alternating sum
/// `G − G′ + G″ − …`; for `G = E` it is `1 + E_2 + E_4 + …`.
pub fn loopless_digraph_solution(g: &SpeciesExpr) -> Result<FixFn> {
    if let Some(z) = exact_cycle_index(g)? {
        let top = z.max_degree().unwrap_or(0);
        return Ok(FixFn::rule(move |lambda: &Partition| {
            let size = lambda.size();
            let mut acc = Rational::zero();
            for j in 0..=top.saturating_sub(size) {
                let v = z.fix_at(&lambda.augment(j));
                if j % 2 == 0 {
                    acc += v;
                } else {
                    acc -= v;
                }
            }
            acc
        }));
    }
    if *g == SpeciesExpr::Sets {
        return Ok(FixFn::EvenSize);
    }
    Err(Error::NotStrictlyFinite(g.to_string()))
}

/// `fix(E·G)` on partitions of size at most `bound`.
fn fix_e_times(g_fix: &FixFn, bound: usize) -> FixFn {
    let product = &PSeries::sets(bound) * &PSeries::from_fix(g_fix, bound);
    product.fix_counts()
}

/// Cycle index of the `G`-digraph species truncated at `bound`, where
/// `g_fix` are the fix counts of `G` and every vertex may carry a loop.
/// Apply to a loopless solution to forbid loops.
pub fn digraph_cycle_index(g_fix: &FixFn, bound: usize) -> PSeries {
    let eg = fix_e_times(g_fix, bound);
    let terms: Vec<(Partition, Rational)> = (0..=bound)
        .into_par_iter()
        .flat_map_iter(|n| {
            let eg = &eg;
            enumerate_partitions(n).into_iter().map(move |l| {
                let c = phi_diagonal_fix(eg, &l) / z_rat(&l);
                (l, c)
            })
        })
        .collect();
    PSeries::from_terms(Some(bound), terms)
}

/// Unlabeled `G`-digraph counts for `n = 1..=max_n` from the fix counts of
/// `G` (loops allowed with respect to `G`).
pub fn digraph_counts_from_fix(g_fix: &FixFn, max_n: usize) -> Result<Vec<BigUint>> {
    let eg = fix_e_times(g_fix, max_n);
    (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let total: Rational = enumerate_partitions(n)
                .iter()
                .map(|l| phi_diagonal_fix(&eg, l) / z_rat(l))
                .sum();
            to_count(&total, || format!("digraphs on {n} vertices"))
        })
        .collect()
}

/// Unlabeled `G`-digraphs on `1..=max_n` vertices.
pub fn digraph_counts(g: &SpeciesExpr, loops: Loops, max_n: usize) -> Result<CountTable> {
    let (g_fix, solver) = match loops {
        Loops::Allowed => (
            crate::species::cycle_index_one(g, max_n)?.fix_counts(),
            "direct",
        ),
        Loops::Forbidden => {
            let solver = if exact_cycle_index(g)?.is_some() {
                "alternating derivative sum"
            } else {
                "closed form (even sizes)"
            };
            (loopless_digraph_solution(g)?, solver)
        }
    };
    let counts = digraph_counts_from_fix(&g_fix, max_n)?;
    let mut table = CountTable::new(None);
    table.rows = counts
        .into_iter()
        .enumerate()
        .map(|(i, count)| CountRow {
            n: i + 1,
            k: None,
            count,
        })
        .collect();
    table.note("family", "digraphs");
    table.note("species", g);
    table.note("loops", if loops == Loops::Allowed { "allowed" } else { "forbidden" });
    table.note("solver", solver);
    table.note("max_n", max_n);
    Ok(table)
}

/// `Σ_{k∈S} E_k`.
pub fn outdegree_set_species(set: &[usize]) -> Result<SpeciesExpr> {
    if set.is_empty() {
        return Err(Error::Invalid("outdegree set must be nonempty".into()));
    }
    let mut ks = set.to_vec();
    ks.sort_unstable();
    ks.dedup();
    Ok(SpeciesExpr::sum_all(ks.into_iter().map(SpeciesExpr::sets_of_size)))
}

/// Loopless digraphs in which every outdegree lies in `set`.
pub fn outdegree_set_counts(set: &[usize], max_n: usize) -> Result<CountTable> {
    let g = outdegree_set_species(set)?;
    let mut table = digraph_counts(&g, Loops::Forbidden, max_n)?;
    table.note("family", "digraphs with outdegree set");
    Ok(table)
}

/// Digraphs of outdegree `k` for every `k` in `ks`, one row per `(n, k)`.
pub fn outdegree_table(ks: &[usize], loops: Loops, max_n: usize) -> Result<CountTable> {
    let mut table = CountTable::new(Some("k"));
    let columns: Vec<Vec<BigUint>> = ks
        .par_iter()
        .map(|&k| {
            let g = SpeciesExpr::sets_of_size(k);
            let fix = match loops {
                Loops::Allowed => PSeries::sets_of_size(k).fix_counts(),
                Loops::Forbidden => loopless_digraph_solution(&g)?,
            };
            digraph_counts_from_fix(&fix, max_n)
        })
        .collect::<Result<_>>()?;
    for n in 1..=max_n {
        for (col, &k) in columns.iter().zip(ks) {
            table.rows.push(CountRow {
                n,
                k: Some(k),
                count: col[n - 1].clone(),
            });
        }
    }
    table.note("family", "digraphs of outdegree k");
    match loops {
        Loops::Allowed => {
            table.note("loops", "allowed");
            table.note("solver", "direct");
        }
        Loops::Forbidden => {
            table.note("loops", "forbidden");
            table.note("solver", "alternating derivative sum");
        }
    }
    table.note("max_n", max_n);
    Ok(table)
}

/// `G − G″`, a virtual species `G_1` with `G_1 + G_1″ + G_1⁽⁴⁾ + … = G`.
pub fn loopless_graph_solution(g: &SpeciesExpr) -> Result<SpeciesExpr> {
    if exact_cycle_index(g)?.is_none() {
        return Err(Error::NotStrictlyFinite(g.to_string()));
    }
    Ok(match g {
        SpeciesExpr::SetsOfSize { k } if *k < 2 => g.clone(),
        SpeciesExpr::SetsOfSize { k } => {
            SpeciesExpr::difference(g.clone(), SpeciesExpr::sets_of_size(k - 2))
        }
        _ => SpeciesExpr::difference(g.clone(), SpeciesExpr::derivative(g.clone(), 2)),
    })
}

/// Unlabeled `G`-graphs (multiple edges allowed) on `1..=max_n` vertices.
///
/// The y bound defaults to `d · max_n` where `d` is the top degree of `G`;
/// a smaller `max_y` is refused.
pub fn graph_counts(
    g: &SpeciesExpr,
    loops: Loops,
    max_n: usize,
    max_y: Option<usize>,
) -> Result<CountTable> {
    let z_g = exact_cycle_index(g)?.ok_or_else(|| Error::NotStrictlyFinite(g.to_string()))?;
    let d = z_g.max_degree().unwrap_or(0);
    let required = d * max_n;
    let bound_y = match max_y {
        Some(m) if m < required => {
            return Err(Error::InsufficientBound {
                what: "y",
                required,
                given: m,
            })
        }
        Some(m) => m,
        None => required,
    };
    let g1 = match loops {
        Loops::Allowed => g.clone(),
        Loops::Forbidden => loopless_graph_solution(g)?,
    };
    let z_g1 = exact_cycle_index(&g1)?.expect("solution of a finite species is finite");
    let counts = graph_series(&z_g1, max_n, bound_y)?;
    let mut table = CountTable::new(None);
    for (n, v) in counts.iter().enumerate().skip(1) {
        table.rows.push(CountRow {
            n,
            k: None,
            count: to_count(v, || format!("graphs on {n} vertices"))?,
        });
    }
    table.note("family", "graphs");
    table.note("species", g);
    table.note("solver_species", &g1);
    table.note("loops", if loops == Loops::Allowed { "allowed" } else { "forbidden" });
    table.note("bound_y", bound_y);
    table.note("max_n", max_n);
    Ok(table)
}

/// Iso-types series `⟨E(X·G(Y)), E(E_2(Y))⟩_Y` up to `x^max_n`.
fn graph_series(z_g: &PSeries, max_n: usize, bound_y: usize) -> Result<Vec<Rational>> {
    let h = (&BiSeries::from_x(&PSeries::singleton()) * &BiSeries::from_y(z_g))
        .truncate(Some(max_n), Some(bound_y));
    let a = BiSeries::bi_plethysm(&PSeries::sets(max_n), &h)?;
    let pairings = PSeries::sets(bound_y / 2).plethysm(&PSeries::sets_of_size(2))?;
    let b = BiSeries::from_y(&pairings).truncate(None, Some(bound_y));
    Ok(a.scalar_y(&b).iso_types())
}

/// Bicolored `G`-graphs: the coefficient of `xⁿ yᵉ` counts graphs with `n`
/// vertices in two nonempty, unordered color classes and `e` edges, each
/// edge joining the two classes.
pub fn bicolored_counts(g: &SpeciesExpr, bound_x: usize, bound_y: usize) -> Result<CountTable> {
    let one_class = SpeciesExpr::compose(
        SpeciesExpr::NonemptySets,
        SpeciesExpr::product(SpeciesExpr::x(), SpeciesExpr::compose(g.clone(), SpeciesExpr::y())),
    );
    let h = cycle_index_two(&one_class, bound_x, bound_y)?;
    let b = inner_plethysm_y(&PSeries::sets_of_size(2), &h)?;
    let iso = b.iso_types_xy();
    let mut table = CountTable::new(Some("e"));
    for n in 0..=bound_x {
        for e in 0..=bound_y {
            let v = iso
                .get(n)
                .and_then(|row| row.get(e))
                .cloned()
                .unwrap_or_else(Rational::zero);
            table.rows.push(CountRow {
                n,
                k: Some(e),
                count: to_count(&v, || format!("bicolored graphs, {n} vertices, {e} edges"))?,
            });
        }
    }
    table.note("family", "bicolored graphs");
    table.note("species", g);
    table.note("bound_x", bound_x);
    table.note("bound_y", bound_y);
    Ok(table)
}
