//! Integer partitions as cycle types.
//!
//! A [`Partition`] is stored with its parts weakly decreasing, which is the
//! single canonical key used by every series map in the crate. The derived
//! ordering sorts first by size and then in decreasing lexicographic order of
//! the parts, so `(2) < (1,1) < (3) < (2,1) < (1,1,1)`. Iterating a
//! `BTreeMap<Partition, _>` therefore walks a series degree by degree, in the
//! same order that [`enumerate_partitions`] produces.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An integer partition, i.e. the cycle type of a permutation.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts in any order. Zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The partition with `count` parts all equal to `part`.
    pub fn rectangle(part: usize, count: usize) -> Self {
        if part == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![part; count],
        }
    }

    /// `(1^n)`, the cycle type of the identity on `n` points.
    pub fn ones(n: usize) -> Self {
        Partition::rectangle(1, n)
    }

    /// Builds `(1^{m_1} 2^{m_2} ...)` from `(k, m_k)` pairs.
    pub fn from_multiplicities<I: IntoIterator<Item = (usize, usize)>>(mults: I) -> Self {
        let mut parts = Vec::new();
        for (k, m) in mults {
            if k > 0 {
                parts.extend(std::iter::repeat_n(k, m));
            }
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `m_k`, the number of parts equal to `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// `(k, m_k)` pairs for every part size that occurs, largest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((k, m)) if *k == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = Π_k k^{m_k} m_k!`, the order of the centralizer of a permutation
    /// of cycle type λ.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        for (k, m) in self.multiplicities() {
            for i in 1..=m {
                z *= BigUint::from(k) * BigUint::from(i);
            }
        }
        z
    }

    /// Cycle type of `σ^k` for any σ of cycle type λ: a part `ℓ` splits into
    /// `gcd(ℓ, k)` parts of length `ℓ / gcd(ℓ, k)`.
    pub fn power(&self, k: usize) -> Partition {
        assert!(k >= 1, "power exponent must be positive");
        if k == 1 {
            return self.clone();
        }
        let mut parts = Vec::with_capacity(self.parts.len());
        for &l in &self.parts {
            let g = l.gcd(&k);
            parts.extend(std::iter::repeat_n(l / g, g));
        }
        Partition::new(parts)
    }

    /// λ with `j` extra parts equal to 1.
    pub fn augment(&self, j: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, j));
        Partition { parts }
    }

    /// λ ∪ μ, the cycle type of a disjoint union of permutations.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }

    /// Every part multiplied by `k` (the index of `p_k ∘ p_λ`).
    pub fn scale(&self, k: usize) -> Partition {
        assert!(k >= 1, "scale factor must be positive");
        Partition {
            parts: self.parts.iter().map(|&p| p * k).collect(),
        }
    }

    /// Removes one part equal to 1, if present.
    pub fn remove_one(&self) -> Option<Partition> {
        if self.parts.last() == Some(&1) {
            let mut parts = self.parts.clone();
            parts.pop();
            Some(Partition { parts })
        } else {
            None
        }
    }

    /// A permutation of `{0, .., n-1}` with this cycle type: consecutive
    /// blocks of the parts, each a cyclic shift.
    pub fn representative(&self) -> Vec<usize> {
        let n = self.size();
        let mut perm = vec![0; n];
        let mut start = 0;
        for &l in &self.parts {
            for i in 0..l {
                perm[start + i] = start + (i + 1) % l;
            }
            start += l;
        }
        perm
    }

    /// Cycle type of a permutation given as an image vector.
    pub fn cycle_type(perm: &[usize]) -> Partition {
        let mut seen = vec![false; perm.len()];
        let mut parts = Vec::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            parts.push(len);
        }
        Partition::new(parts)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl From<Vec<usize>> for Partition {
    fn from(parts: Vec<usize>) -> Self {
        Partition::new(parts)
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Self {
        Partition::new(parts.to_vec())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        if parts.contains(&0) {
            return Err(serde::de::Error::custom("partition parts must be positive"));
        }
        Ok(Partition::new(parts))
    }
}

/// All partitions of `n` in decreasing lexicographic order, starting with
/// `(n)` and ending with `(1^n)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// All partitions of size at most `n`, in canonical series order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(enumerate_partitions).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn factorial(n: usize) -> BigUint {
        (1..=n).map(BigUint::from).product()
    }

    /// p(n) by the generating-function recurrence over allowed largest part.
    fn partition_count(n: usize) -> u64 {
        let mut table = vec![0u64; n + 1];
        table[0] = 1;
        for part in 1..=n {
            for total in part..=n {
                table[total] += table[total - part];
            }
        }
        table[n]
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let four: Vec<Vec<usize>> = enumerate_partitions(4)
            .into_iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            four,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
    }

    #[test]
    fn counts_match_recurrence() {
        assert_eq!(partition_count(30), 5604);
        for n in 0..=30 {
            let ps = enumerate_partitions(n);
            assert_eq!(ps.len() as u64, partition_count(n), "p({n})");
            assert!(ps.iter().all(|p| p.size() == n));
            let mut sorted = ps.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), ps.len());
            assert_eq!(sorted, ps, "enumeration order matches Ord");
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(Partition::ones(5).z(), factorial(5));
        assert_eq!(Partition::from([2, 1]).z().to_u64(), Some(2));
        assert_eq!(Partition::empty().z().to_u64(), Some(1));
        assert_eq!(Partition::from([2, 2, 1]).z().to_u64(), Some(8));
    }

    #[test]
    fn class_equation() {
        for n in 0..=12 {
            let nf = factorial(n);
            let total: BigUint = enumerate_partitions(n)
                .iter()
                .map(|p| {
                    let z = p.z();
                    assert!((&nf % &z) == BigUint::from(0u8));
                    &nf / z
                })
                .sum();
            assert_eq!(total, nf, "n = {n}");
        }
    }

    fn perm_power(perm: &[usize], k: usize) -> Vec<usize> {
        (0..perm.len())
            .map(|mut i| {
                for _ in 0..k {
                    i = perm[i];
                }
                i
            })
            .collect()
    }

    #[test]
    fn power_types_against_explicit_permutations() {
        // (123456)^4 and ((1234)(56))^2
        let six = Partition::from([6]).representative();
        assert_eq!(Partition::cycle_type(&perm_power(&six, 4)), Partition::from([3, 3]));
        assert_eq!(Partition::from([6]).power(4), Partition::from([3, 3]));
        assert_eq!(Partition::from([4, 2]).power(2), Partition::from([2, 2, 1, 1]));
        for n in 0..=8 {
            for lam in enumerate_partitions(n) {
                assert_eq!(lam.power(1), lam);
                let rep = lam.representative();
                assert_eq!(Partition::cycle_type(&rep), lam);
                for k in 1..=7 {
                    let direct = Partition::cycle_type(&perm_power(&rep, k));
                    assert_eq!(lam.power(k), direct, "{lam}^{k}");
                }
            }
        }
    }

    #[test]
    fn power_composes() {
        for n in 0..=9 {
            for lam in enumerate_partitions(n) {
                for a in 1..=6 {
                    for b in 1..=6 {
                        assert_eq!(lam.power(a).power(b), lam.power(a * b));
                    }
                }
            }
        }
    }

    #[test]
    fn augment_and_union() {
        let l = Partition::from([2, 1]);
        assert_eq!(l.augment(0), l);
        assert_eq!(l.augment(2), Partition::from([2, 1, 1, 1]));
        assert_eq!(Partition::empty().augment(3), Partition::ones(3));
        assert_eq!(
            Partition::from([3, 1]).union(&Partition::from([2, 1])),
            Partition::from([3, 2, 1, 1])
        );
        assert_eq!(Partition::from([2, 1]).scale(3), Partition::from([6, 3]));
        assert_eq!(Partition::from([2, 1]).remove_one(), Some(Partition::from([2])));
        assert_eq!(Partition::from([2]).remove_one(), None);
    }

    #[test]
    fn json_form() {
        let p = Partition::from([1, 2, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,1,1]");
        let back: Partition = serde_json::from_str("[1,2,1]").unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Partition>("[2,0]").is_err());
    }
}
