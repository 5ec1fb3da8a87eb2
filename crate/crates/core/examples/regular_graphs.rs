//! k-regular multigraphs, with and without loops.
//!
//! ```bash
//! cargo run --release --example regular_graphs -- 3 10
//! ```

use cycleindex::enumeration::{graph_counts, Loops};
use cycleindex::species::SpeciesExpr;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (k, max_n) = match args.as_slice() {
        [k, n] => (*k, *n),
        _ => (3, 10),
    };
    let g = SpeciesExpr::sets_of_size(k);
    for loops in [Loops::Forbidden, Loops::Allowed] {
        let table = graph_counts(&g, loops, max_n, None)?;
        println!("{k}-regular, loops {loops:?} (y bound {}):", table.provenance["bound_y"]);
        for row in &table.rows {
            println!("  n={:<3} {}", row.n, row.count);
        }
    }
    Ok(())
}
