//! Brute-force counting by explicit enumeration and Burnside's lemma.
//!
//! Nothing here uses cycle index series. Labeled structures are listed
//! exhaustively and the number of isomorphism classes is
//! `(1/n!) Σ_σ #{structures fixed by σ}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::enumeration::{self, Loops};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::species::SpeciesExpr;
use crate::symfunc::Rational;

/// Default limit on `|family| · n!`.
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "CYCLEINDEX_BUDGET";

/// The budget from the environment, or the default.
pub fn default_budget() -> u128 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// A family of labeled structures on `{0, .., n-1}` encoded as `n × n`
/// matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Every vertex picks `k` out-neighbours (itself allowed if `loops`).
    OutdegreeDigraph { k: usize, loops: bool },
    /// Symmetric multigraphs with every degree `k`; a loop adds 2.
    RegularMultigraph { k: usize, loops: bool },
    /// All subsets of `V × V`.
    Relation,
    /// Loopless digraphs whose outdegrees lie in the set.
    OutdegreeSet(Vec<usize>),
}

impl Family {
    /// Parses `outdegree:K`, `outdegree-loops:K`, `regular:K`,
    /// `regular-loops:K`, `relations` or `outdegree-set:1,3,4`.
    pub fn parse(text: &str) -> Result<Family> {
        let (name, arg) = match text.split_once(':') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (text.trim(), None),
        };
        let int = |s: Option<&str>| -> Result<usize> {
            s.and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Invalid(format!("family `{text}` needs an integer argument")))
        };
        Ok(match name {
            "outdegree" => Family::OutdegreeDigraph { k: int(arg)?, loops: false },
            "outdegree-loops" => Family::OutdegreeDigraph { k: int(arg)?, loops: true },
            "regular" => Family::RegularMultigraph { k: int(arg)?, loops: false },
            "regular-loops" => Family::RegularMultigraph { k: int(arg)?, loops: true },
            "relations" if arg.is_none() => Family::Relation,
            "outdegree-set" => {
                let set = parse_int_list(arg.unwrap_or(""))?;
                if set.is_empty() {
                    return Err(Error::Invalid("outdegree set must be nonempty".into()));
                }
                Family::OutdegreeSet(set)
            }
            _ => return Err(Error::Invalid(format!("unknown family `{text}`"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::OutdegreeDigraph { k, loops: false } => write!(f, "outdegree:{k}"),
            Family::OutdegreeDigraph { k, loops: true } => write!(f, "outdegree-loops:{k}"),
            Family::RegularMultigraph { k, loops: false } => write!(f, "regular:{k}"),
            Family::RegularMultigraph { k, loops: true } => write!(f, "regular-loops:{k}"),
            Family::Relation => f.write_str("relations"),
            Family::OutdegreeSet(s) => write!(f, "outdegree-set:{}", s.iter().join(",")),
        }
    }
}

pub(crate) fn parse_int_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("`{s}` is not a nonnegative integer")))
        })
        .collect()
}

/// Labeled structures on `n` points with the relabeling action of `S_n`.
#[derive(Clone, Debug)]
pub struct LabeledStructureSet {
    pub n: usize,
    pub structures: Vec<Vec<u8>>,
}

impl LabeledStructureSet {
    pub fn len(&self) -> usize {
        self.structures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.structures.is_empty()
    }

    /// Transports a matrix along `perm`: entry `(i, j)` moves to
    /// `(perm[i], perm[j])`.
    pub fn act(&self, perm: &[usize], s: &[u8]) -> Vec<u8> {
        let n = self.n;
        let mut out = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                out[perm[i] * n + perm[j]] = s[i * n + j];
            }
        }
        out
    }

    fn is_fixed(&self, perm: &[usize], s: &[u8]) -> bool {
        let n = self.n;
        (0..n).all(|i| (0..n).all(|j| s[perm[i] * n + perm[j]] == s[i * n + j]))
    }

    /// Number of structures fixed by `perm`.
    pub fn fixed_count(&self, perm: &[usize]) -> u64 {
        self.structures
            .iter()
            .filter(|s| self.is_fixed(perm, s))
            .count() as u64
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

fn check_budget(size: u128, n: usize, budget: u128) -> Result<()> {
    let needed = size.saturating_mul(factorial(n));
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// Lists every labeled structure of `family` on `n` points, refusing if
/// `|family| · n!` exceeds `budget`.
pub fn enumerate_family(family: &Family, n: usize, budget: u128) -> Result<LabeledStructureSet> {
    let structures = match family {
        Family::OutdegreeDigraph { k, loops } => digraphs(n, &[*k], *loops, budget)?,
        Family::OutdegreeSet(set) => digraphs(n, set, false, budget)?,
        Family::Relation => {
            let cells = n * n;
            let size = 1u128.checked_shl(cells as u32).unwrap_or(u128::MAX);
            check_budget(size, n, budget)?;
            (0..size as u64)
                .map(|bits| (0..cells).map(|c| ((bits >> c) & 1) as u8).collect())
                .collect()
        }
        Family::RegularMultigraph { k, loops } => multigraphs(n, *k, *loops, budget)?,
    };
    Ok(LabeledStructureSet { n, structures })
}

fn digraphs(n: usize, sizes: &[usize], loops: bool, budget: u128) -> Result<Vec<Vec<u8>>> {
    let targets = if loops { n } else { n.saturating_sub(1) };
    let per_vertex: u128 = sizes.iter().map(|&k| binomial(targets, k)).sum();
    let size = (0..n).fold(1u128, |acc, _| acc.saturating_mul(per_vertex));
    check_budget(size, n, budget)?;
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    let choices: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|v| {
            let allowed: Vec<usize> = (0..n).filter(|&w| loops || w != v).collect();
            sizes
                .iter()
                .flat_map(|&k| allowed.iter().copied().combinations(k))
                .collect()
        })
        .collect();
    Ok(choices
        .iter()
        .map(|c| c.iter())
        .multi_cartesian_product()
        .map(|rows| {
            let mut m = vec![0u8; n * n];
            for (v, outs) in rows.iter().enumerate() {
                for &w in outs.iter() {
                    m[v * n + w] = 1;
                }
            }
            m
        })
        .collect())
}

fn multigraphs(n: usize, k: usize, loops: bool, budget: u128) -> Result<Vec<Vec<u8>>> {
    struct Search {
        n: usize,
        loops: bool,
        limit: u128,
        out: Vec<Vec<u8>>,
        exceeded: bool,
    }

    impl Search {
        // Fills the row `i`, column `j` (j ≥ i), then moves on.
        fn go(&mut self, i: usize, j: usize, rem: &mut [usize], m: &mut [u8]) {
            if self.exceeded {
                return;
            }
            let n = self.n;
            if i == n {
                self.out.push(m.to_vec());
                if self.out.len() as u128 > self.limit {
                    self.exceeded = true;
                }
                return;
            }
            if j == n {
                if rem[i] == 0 {
                    self.go(i + 1, i + 1, rem, m);
                }
                return;
            }
            if i == j {
                let top = if self.loops { rem[i] / 2 } else { 0 };
                for d in 0..=top {
                    rem[i] -= 2 * d;
                    m[i * n + i] = d as u8;
                    self.go(i, j + 1, rem, m);
                    rem[i] += 2 * d;
                }
                m[i * n + i] = 0;
                return;
            }
            for c in 0..=rem[i].min(rem[j]) {
                rem[i] -= c;
                rem[j] -= c;
                m[i * n + j] = c as u8;
                m[j * n + i] = c as u8;
                self.go(i, j + 1, rem, m);
                rem[i] += c;
                rem[j] += c;
            }
            m[i * n + j] = 0;
            m[j * n + i] = 0;
        }
    }

    let limit = budget / factorial(n).max(1);
    let mut search = Search {
        n,
        loops,
        limit,
        out: Vec::new(),
        exceeded: false,
    };
    let mut rem = vec![k; n];
    let mut m = vec![0u8; n * n];
    search.go(0, 0, &mut rem, &mut m);
    if search.exceeded {
        return Err(Error::BudgetExceeded {
            needed: (search.out.len() as u128).saturating_mul(factorial(n)),
            budget,
        });
    }
    Ok(search.out)
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Number of isomorphism classes by Burnside's lemma.
pub fn burnside_count(set: &LabeledStructureSet) -> BigUint {
    let perms = all_permutations(set.n);
    let total: u128 = perms
        .par_iter()
        .map(|p| set.fixed_count(p) as u128)
        .sum();
    let order = factorial(set.n);
    assert_eq!(total % order, 0, "Burnside sum not divisible by n!");
    BigUint::from(total / order)
}

/// Counts isomorphism classes of `family` on `n` points.
pub fn burnside_family(family: &Family, n: usize, budget: u128) -> Result<BigUint> {
    Ok(burnside_count(&enumerate_family(family, n, budget)?))
}

/// Count of `family` on `n` vertices from the series engine.
pub fn engine_count(family: &Family, n: usize) -> Result<BigUint> {
    let table = match family {
        Family::OutdegreeDigraph { k, loops } => enumeration::digraph_counts(
            &SpeciesExpr::sets_of_size(*k),
            Loops::from_flag(*loops),
            n,
        )?,
        Family::RegularMultigraph { k, loops } => enumeration::graph_counts(
            &SpeciesExpr::sets_of_size(*k),
            Loops::from_flag(*loops),
            n,
            None,
        )?,
        Family::Relation => enumeration::digraph_counts(&SpeciesExpr::Sets, Loops::Allowed, n)?,
        Family::OutdegreeSet(set) => enumeration::outdegree_set_counts(set, n)?,
    };
    Ok(table.get(n, None).cloned().unwrap_or_else(BigUint::zero))
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyRow {
    pub family: String,
    pub n: usize,
    pub oracle: BigUint,
    pub engine: BigUint,
}

impl VerifyRow {
    pub fn agrees(&self) -> bool {
        self.oracle == self.engine
    }
}

impl fmt::Display for VerifyRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={}: oracle={} engine={} {}",
            self.family,
            self.n,
            self.oracle,
            self.engine,
            if self.agrees() { "PASS" } else { "FAIL" }
        )
    }
}

/// Compares oracle and engine for `n = 1..=max_n`. Fails as a whole if any
/// `n` is over budget.
pub fn verify_family(family: &Family, max_n: usize, budget: u128) -> Result<Vec<VerifyRow>> {
    (1..=max_n)
        .map(|n| {
            Ok(VerifyRow {
                family: family.to_string(),
                n,
                oracle: burnside_family(family, n, budget)?,
                engine: engine_count(family, n)?,
            })
        })
        .collect()
}

/// Small species with explicitly listed structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmallSpecies {
    Singleton,
    SetsOfSize(usize),
    Sets,
    NonemptySets,
    /// Subsets of the underlying set (`E·E`).
    Subsets,
    /// Linear orders on exactly `k` points.
    LinearOrdersOfSize(usize),
}

/// A structure on `{0, .., m-1}`: a list of points, read as a set when
/// `sorted` and as a sequence otherwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Structure {
    points: Vec<usize>,
    sorted: bool,
}

impl Structure {
    fn transport(&self, perm: &[usize]) -> Structure {
        let mut points: Vec<usize> = self.points.iter().map(|&p| perm[p]).collect();
        if self.sorted {
            points.sort_unstable();
        }
        Structure {
            points,
            sorted: self.sorted,
        }
    }
}

impl SmallSpecies {
    /// Largest size carrying structures, if finite.
    pub fn max_size(&self) -> Option<usize> {
        match self {
            SmallSpecies::Singleton => Some(1),
            SmallSpecies::SetsOfSize(k) | SmallSpecies::LinearOrdersOfSize(k) => Some(*k),
            _ => None,
        }
    }

    /// The same species as an expression.
    pub fn expr(&self) -> SpeciesExpr {
        match self {
            SmallSpecies::Singleton => SpeciesExpr::x(),
            SmallSpecies::SetsOfSize(k) => SpeciesExpr::sets_of_size(*k),
            SmallSpecies::Sets => SpeciesExpr::Sets,
            SmallSpecies::NonemptySets => SpeciesExpr::NonemptySets,
            SmallSpecies::Subsets => SpeciesExpr::product(SpeciesExpr::Sets, SpeciesExpr::Sets),
            SmallSpecies::LinearOrdersOfSize(k) => {
                (0..*k).fold(SpeciesExpr::One, |acc, _| SpeciesExpr::product(acc, SpeciesExpr::x()))
            }
        }
    }

    fn structures(&self, m: usize) -> Vec<Structure> {
        let set = |points: Vec<usize>| Structure { points, sorted: true };
        match *self {
            SmallSpecies::Singleton if m == 1 => vec![set(vec![])],
            SmallSpecies::SetsOfSize(k) if m == k => vec![set(vec![])],
            SmallSpecies::Sets => vec![set(vec![])],
            SmallSpecies::NonemptySets if m > 0 => vec![set(vec![])],
            SmallSpecies::Subsets => (0..=m)
                .flat_map(|r| (0..m).combinations(r))
                .map(set)
                .collect(),
            SmallSpecies::LinearOrdersOfSize(k) if m == k => (0..m)
                .permutations(m)
                .map(|points| Structure {
                    points,
                    sorted: false,
                })
                .collect(),
            _ => Vec::new(),
        }
    }

    /// Number of structures on `{0, .., m-1}` fixed by `perm`.
    pub fn fixed_count(&self, perm: &[usize]) -> usize {
        self.structures(perm.len())
            .iter()
            .filter(|s| s.transport(perm) == **s)
            .count()
    }

    /// Fix counts on every cycle type of size at most `bound`.
    pub fn fix_table(&self, bound: usize) -> BTreeMap<Partition, Rational> {
        (0..=bound)
            .flat_map(enumerate_partitions)
            .map(|l| {
                let v = self.fixed_count(&l.representative());
                (l, Rational::from_integer(v.into()))
            })
            .collect()
    }
}

fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// A pair `(t, f)` with `t ∈ F[m]` and `f: [m] → G[A]` given as indices
/// into the list of `G`-structures.
type Pair = (Structure, Vec<usize>);

/// Fix counts of the inner plethysm `F ⊛ G` on cycle types of size `n`,
/// from the construction: orbits under `S_m` of pairs `(t, f)` with
/// `t ∈ F[m]` and `f: [m] → G[A]`, `|A| = n`. `σ ∈ S_n` acts on `f` through
/// `G[σ]`; an orbit is counted when `σ` maps it to itself.
pub fn brute_inner_plethysm_fix(
    f: SmallSpecies,
    g: SmallSpecies,
    n: usize,
    budget: u128,
) -> Result<BTreeMap<Partition, Rational>> {
    let top = f
        .max_size()
        .ok_or(Error::NotPolynomial("inner plethysm oracle"))?;
    let g_structs = g.structures(n);
    let gs = g_structs.len();
    let mut needed: u128 = 0;
    for m in 0..=top {
        let pairs = (f.structures(m).len() as u128).saturating_mul((gs as u128).saturating_pow(m as u32));
        needed = needed.saturating_add(pairs.saturating_mul(factorial(m)));
    }
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let index: BTreeMap<&Structure, usize> = g_structs.iter().enumerate().map(|(i, s)| (s, i)).collect();

    // Canonical form of an orbit: the least image under S_m.
    let canonical = |(t, fvals): &Pair, perms: &[Vec<usize>]| -> Pair {
        perms
            .iter()
            .map(|tau| {
                let inv = invert(tau);
                let fv: Vec<usize> = (0..fvals.len()).map(|i| fvals[inv[i]]).collect();
                (t.transport(tau), fv)
            })
            .min()
            .expect("S_m is nonempty")
    };

    let mut orbits: Vec<(usize, Pair)> = Vec::new();
    for m in 0..=top {
        let perms = all_permutations(m);
        let mut seen: BTreeSet<Pair> = BTreeSet::new();
        for t in f.structures(m) {
            if m == 0 {
                seen.insert((t, Vec::new()));
                continue;
            }
            for fvals in (0..m).map(|_| 0..gs).multi_cartesian_product() {
                seen.insert(canonical(&(t.clone(), fvals), &perms));
            }
        }
        orbits.extend(seen.into_iter().map(|p| (m, p)));
    }

    let mut out = BTreeMap::new();
    for lambda in enumerate_partitions(n) {
        let sigma = lambda.representative();
        let g_sigma: Vec<usize> = g_structs.iter().map(|s| index[&s.transport(&sigma)]).collect();
        let mut count = 0usize;
        for (m, (t, fvals)) in &orbits {
            let perms = all_permutations(*m);
            let moved: Vec<usize> = fvals.iter().map(|&i| g_sigma[i]).collect();
            if canonical(&(t.clone(), moved), &perms) == (t.clone(), fvals.clone()) {
                count += 1;
            }
        }
        out.insert(lambda, Rational::from_integer(count.into()));
    }
    Ok(out)
}

/// Fix counts of the composition `F ∘ G` on cycle types of size `n`, by
/// listing set partitions of `{0, .., n-1}` with a `G`-structure on each
/// block. `F` must be set-like (`X`, `E_k`, `E` or `E⁺`) and `G` must have
/// no structure on the empty set.
pub fn brute_composition_fix(
    f: SmallSpecies,
    g: SmallSpecies,
    n: usize,
) -> Result<BTreeMap<Partition, Rational>> {
    if !matches!(
        f,
        SmallSpecies::Singleton | SmallSpecies::SetsOfSize(_) | SmallSpecies::Sets | SmallSpecies::NonemptySets
    ) {
        return Err(Error::Invalid("composition oracle needs a set-like outer species".into()));
    }
    if !g.structures(0).is_empty() {
        return Err(Error::NonConvergentComposition);
    }
    let block_ok = |blocks: usize| match f {
        SmallSpecies::Singleton => blocks == 1,
        SmallSpecies::SetsOfSize(k) => blocks == k,
        SmallSpecies::NonemptySets => blocks > 0,
        _ => true,
    };
    // Each assembly is a sorted list of (block, structure on the block in
    // original labels).
    type Assembly = Vec<(Vec<usize>, Structure)>;
    let mut assemblies: Vec<Assembly> = Vec::new();
    for partition in set_partitions(n) {
        if !block_ok(partition.len()) {
            continue;
        }
        let per_block: Vec<Vec<(Vec<usize>, Structure)>> = partition
            .iter()
            .map(|block| {
                g.structures(block.len())
                    .into_iter()
                    .map(|s| {
                        // Relabel local points 0..len to the block's elements.
                        let mut s = s.transport(block);
                        if s.sorted {
                            s.points.sort_unstable();
                        }
                        (block.clone(), s)
                    })
                    .collect()
            })
            .collect();
        if per_block.is_empty() {
            assemblies.push(Vec::new());
            continue;
        }
        for choice in per_block.iter().map(|c| c.iter().cloned()).multi_cartesian_product() {
            let mut a = choice;
            a.sort();
            assemblies.push(a);
        }
    }
    let mut out = BTreeMap::new();
    for lambda in enumerate_partitions(n) {
        let sigma = lambda.representative();
        let count = assemblies
            .iter()
            .filter(|a| {
                let mut moved: Assembly = a
                    .iter()
                    .map(|(block, s)| {
                        let mut b: Vec<usize> = block.iter().map(|&p| sigma[p]).collect();
                        b.sort_unstable();
                        (b, s.transport(&sigma))
                    })
                    .collect();
                moved.sort();
                moved == **a
            })
            .count();
        out.insert(lambda, Rational::from_integer(count.into()));
    }
    Ok(out)
}

/// All set partitions of `{0, .., n-1}`, blocks in order of least element.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new()];
    for x in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for b in 0..p.len() {
                let mut q: Vec<Vec<usize>> = p.clone();
                q[b].push(x);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![x]);
            next.push(q);
        }
        out = next;
    }
    out
}

/// True if permutations of equal cycle type fix equally many structures.
pub fn fixed_counts_class_invariant(set: &LabeledStructureSet) -> bool {
    let mut by_type: BTreeMap<Partition, u64> = BTreeMap::new();
    for perm in all_permutations(set.n) {
        let c = set.fixed_count(&perm);
        let t = Partition::cycle_type(&perm);
        if *by_type.entry(t).or_insert(c) != c {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::species::{cycle_index_one, inner_plethysm};
    use crate::symfunc::{rat, PSeries};

    const B: u128 = DEFAULT_BUDGET;

    #[test]
    fn family_sizes() {
        let s = enumerate_family(&Family::OutdegreeDigraph { k: 1, loops: false }, 3, B).unwrap();
        assert_eq!(s.len(), 8);
        assert_eq!(enumerate_family(&Family::Relation, 2, B).unwrap().len(), 16);
        let m = enumerate_family(&Family::RegularMultigraph { k: 3, loops: false }, 2, B).unwrap();
        assert_eq!(m.structures, vec![vec![0, 3, 3, 0]]);
        let d = enumerate_family(&Family::OutdegreeDigraph { k: 2, loops: false }, 5, B).unwrap();
        assert_eq!(d.len(), 6usize.pow(5));
    }

    #[test]
    fn burnside_examples() {
        let c = |f: Family, n| burnside_family(&f, n, B).unwrap();
        assert_eq!(c(Family::OutdegreeDigraph { k: 2, loops: false }, 5), BigUint::from(79u32));
        assert_eq!(c(Family::Relation, 2), BigUint::from(10u32));
        assert_eq!(c(Family::RegularMultigraph { k: 3, loops: false }, 4), BigUint::from(3u32));
    }

    #[test]
    fn budget_refusal() {
        assert!(matches!(
            enumerate_family(&Family::Relation, 6, B),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            enumerate_family(&Family::RegularMultigraph { k: 4, loops: true }, 6, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn action_laws() {
        let s = enumerate_family(&Family::OutdegreeDigraph { k: 1, loops: true }, 3, B).unwrap();
        let id = vec![0, 1, 2];
        let a = vec![1, 2, 0];
        let b = vec![1, 0, 2];
        let ab: Vec<usize> = (0..3).map(|i| a[b[i]]).collect();
        for x in &s.structures {
            assert_eq!(&s.act(&id, x), x);
            assert_eq!(s.act(&a, &s.act(&b, x)), s.act(&ab, x));
        }
        assert!(fixed_counts_class_invariant(&s));
        let r = enumerate_family(&Family::RegularMultigraph { k: 2, loops: true }, 4, B).unwrap();
        assert!(fixed_counts_class_invariant(&r));
    }

    #[test]
    fn families_parse_and_print() {
        for text in ["outdegree:2", "outdegree-loops:1", "regular:3", "regular-loops:2", "relations", "outdegree-set:1,3,4"] {
            assert_eq!(Family::parse(text).unwrap().to_string(), text);
        }
        assert!(Family::parse("cubes").is_err());
        assert!(Family::parse("outdegree").is_err());
    }

    #[test]
    fn small_species_fix_tables() {
        let z = cycle_index_one(&SmallSpecies::Subsets.expr(), 5).unwrap();
        for (l, v) in SmallSpecies::Subsets.fix_table(5) {
            assert_eq!(z.fix_at(&l), v, "{l}");
        }
        let l3 = SmallSpecies::LinearOrdersOfSize(3).fix_table(3);
        assert_eq!(l3[&Partition::from([1, 1, 1])], rat(6));
        assert_eq!(l3[&Partition::from([2, 1])], rat(0));
    }

    #[test]
    fn inner_plethysm_oracle_small_cases() {
        let e2 = SmallSpecies::SetsOfSize(2);
        let t = brute_inner_plethysm_fix(e2, e2, 2, B).unwrap();
        assert_eq!(t[&Partition::from([1, 1])], rat(1));
        assert_eq!(t[&Partition::from([2])], rat(1));
        // X ⊛ G = G.
        for n in 0..4 {
            let t = brute_inner_plethysm_fix(SmallSpecies::Singleton, SmallSpecies::Subsets, n, B).unwrap();
            for (l, v) in t {
                assert_eq!(v, rat(SmallSpecies::Subsets.fixed_count(&l.representative()) as i64));
            }
        }
        // E_2 ⊛ X at degree 1: the single multiset {x, x}.
        let t = brute_inner_plethysm_fix(e2, SmallSpecies::Singleton, 1, B).unwrap();
        let engine = inner_plethysm(&PSeries::sets_of_size(2), &PSeries::singleton()).unwrap();
        assert_eq!(t[&Partition::from([1])], engine.fix_at(&Partition::from([1])));
    }

    #[test]
    fn composition_oracle() {
        let t = brute_composition_fix(SmallSpecies::Sets, SmallSpecies::SetsOfSize(2), 4).unwrap();
        let z = cycle_index_one(&crate::species::parse_species("E(E_2)").unwrap(), 4).unwrap();
        for (l, v) in t {
            assert_eq!(z.fix_at(&l), v, "{l}");
        }
    }
}
