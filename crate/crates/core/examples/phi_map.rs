//! The Φ map and its diagonal: relations counted from fix(E·E).

use cycleindex::species::{phi_cycle_index, phi_diagonal_fix};
use cycleindex::{enumerate_partitions, FixFn, PSeries, Rational};
use num_traits::One;

fn main() {
    let ee = (&PSeries::sets(6) * &PSeries::sets(6)).fix_counts();
    for n in 1..=6 {
        let total: Rational = enumerate_partitions(n)
            .iter()
            .map(|l| phi_diagonal_fix(&ee, l) / Rational::from_integer(l.z().into()))
            .sum();
        println!("relations on {n} points: {total}");
    }

    // Φ turns sums into Cartesian products in Y, also for virtual species.
    let f1 = PSeries::sets_of_size(2).fix_counts();
    let f2 = (&PSeries::sets_of_size(3) - &PSeries::singleton()).fix_counts();
    let sum = FixFn::linear(vec![(Rational::one(), f1.clone()), (Rational::one(), f2.clone())]);
    let lhs = phi_cycle_index(&sum, 3, 3);
    let rhs = phi_cycle_index(&f1, 3, 3).cartesian_y(&phi_cycle_index(&f2, 3, 3));
    println!("Phi(F1 + F2) == Phi(F1) x_Y Phi(F2): {}", lhs == rhs);
}
