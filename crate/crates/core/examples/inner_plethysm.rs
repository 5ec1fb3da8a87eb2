//! Inner plethysm in Y: pairs of E_2(X·E_2(Y))-structures sharing the same
//! Y-set.

use cycleindex::species::{cycle_index_two, inner_plethysm, inner_plethysm_y, parse_species};
use cycleindex::PSeries;
use num_traits::Zero;

fn main() -> Result<(), cycleindex::Error> {
    let g = cycle_index_two(&parse_species("E_2(X*E_2(Y))")?, 4, 4)?;
    println!("Z_G = {g}");
    let r = inner_plethysm_y(&PSeries::sets_of_size(2), &g)?;
    println!("E_2 (*)_Y G = {r}");
    for (x, row) in r.iso_types_xy().iter().enumerate() {
        for (y, c) in row.iter().enumerate() {
            if !c.is_zero() {
                println!("  {c} x^{x} y^{y}");
            }
        }
    }

    // One-sort version: multisets of two subsets of the same set.
    let subsets = &PSeries::sets(4) * &PSeries::sets(4);
    let pairs = inner_plethysm(&PSeries::sets_of_size(2), &subsets)?;
    let iso: Vec<String> = pairs.iso_types().iter().map(|c| c.to_string()).collect();
    println!("E_2 (*) (E*E): {}", iso.join(", "));
    Ok(())
}
