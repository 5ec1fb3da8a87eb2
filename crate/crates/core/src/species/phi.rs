//! The map `Φ` from a species `F` to the two-sort species of functions from
//! an `X`-set into `F`-structures on a `Y`-set.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::multisort::BiSeries;
use crate::partitions::{partitions_up_to, Partition};
use crate::symfunc::{z_rat, FixFn, PSeries, Rational};

/// `fix Φ(F)[β, σ] = Π_k fix F[σ^k]^{m_k(β)}`.
pub fn phi_fix(f: &FixFn, beta: &Partition, sigma: &Partition) -> Rational {
    let mut acc = Rational::one();
    for (k, m) in beta.multiplicities() {
        let v = f.eval(&sigma.power(k));
        acc *= pow(&v, m);
    }
    acc
}

/// Fix count of the diagonal `∇Φ(F)` at `λ`.
pub fn phi_diagonal_fix(f: &FixFn, lambda: &Partition) -> Rational {
    phi_fix(f, lambda, lambda)
}

fn pow(v: &Rational, m: usize) -> Rational {
    num_traits::pow(v.clone(), m)
}

/// Cycle index of `Φ(F)` truncated at `(bound_x, bound_y)`. For each `μ`
/// the x-section is `exp(Σ_i F(μ^i) p_i(x) / i)`, expanded as
/// `Σ_λ Π_k F(μ^k)^{m_k(λ)} p_λ / z_λ`.
pub fn phi_cycle_index(f: &FixFn, bound_x: usize, bound_y: usize) -> BiSeries {
    let mus = partitions_up_to(bound_y);
    let betas = partitions_up_to(bound_x);
    let sections: Vec<(Partition, PSeries)> = mus
        .into_par_iter()
        .map(|mu| {
            let values: Vec<Rational> = (1..=bound_x.max(1)).map(|i| f.eval(&mu.power(i))).collect();
            let zmu = z_rat(&mu);
            let terms = betas.iter().filter_map(|beta| {
                let mut acc = Rational::one();
                for (k, m) in beta.multiplicities() {
                    acc *= pow(&values[k - 1], m);
                }
                (!acc.is_zero()).then(|| (beta.clone(), acc / (z_rat(beta) * &zmu)))
            });
            let section = PSeries::from_terms(Some(bound_x), terms.collect::<Vec<_>>());
            (mu, section)
        })
        .collect();
    BiSeries::from_y_sections(Some(bound_x), Some(bound_y), sections)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;
    use crate::symfunc::rat;

    #[test]
    fn phi_of_zero_is_sets_in_y() {
        let z = phi_cycle_index(&FixFn::Constant(rat(0)), 4, 5);
        assert_eq!(z, BiSeries::from_y(&PSeries::sets(5)).truncate(Some(4), Some(5)));
    }

    #[test]
    fn phi_fix_of_sets_is_one() {
        let e = FixFn::Constant(rat(1));
        for beta in enumerate_partitions(4) {
            for sigma in enumerate_partitions(3) {
                assert_eq!(phi_fix(&e, &beta, &sigma), rat(1));
            }
        }
    }

    #[test]
    fn phi_is_multiplicative_including_signed() {
        let f1 = PSeries::sets_of_size(2).fix_counts();
        let f2 = (&PSeries::sets_of_size(3) - &PSeries::singleton()).fix_counts();
        let sum = FixFn::linear(vec![(rat(1), f1.clone()), (rat(1), f2.clone())]);
        let lhs = phi_cycle_index(&sum, 4, 4);
        let rhs = phi_cycle_index(&f1, 4, 4).cartesian_y(&phi_cycle_index(&f2, 4, 4));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn relations_from_the_diagonal() {
        // fix(E·E)[λ] = 2^{ℓ(λ)}: a relation is a map from vertices to subsets.
        let ee = (&PSeries::sets(6) * &PSeries::sets(6)).fix_counts();
        let counts: Vec<Rational> = (1..=4)
            .map(|n| {
                enumerate_partitions(n)
                    .iter()
                    .map(|l| phi_diagonal_fix(&ee, l) / z_rat(l))
                    .sum()
            })
            .collect();
        assert_eq!(counts, vec![rat(2), rat(10), rat(104), rat(3044)]);
    }
}
