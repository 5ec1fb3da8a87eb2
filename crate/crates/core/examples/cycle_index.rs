//! Parse species expressions and print their cycle indices.
//!
//! ```bash
//! cargo run --example cycle_index
//! cargo run --example cycle_index -- "E(X*E_2(X))" 6
//! ```

use cycleindex::species::{cycle_index_one, parse_species};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let exprs: Vec<(String, usize)> = match args.as_slice() {
        [e, n] => vec![(e.clone(), n.parse()?)],
        [e] => vec![(e.clone(), 5)],
        _ => vec![
            ("E_2".into(), 4),
            ("E(E_2)".into(), 6),
            ("E_3 - E_1".into(), 4),
            ("X*E(X)''".into(), 4),
        ],
    };
    for (text, bound) in exprs {
        let expr = parse_species(&text)?;
        let z = cycle_index_one(&expr, bound)?;
        println!("Z[{expr}] = {z}");
        let iso: Vec<String> = z.iso_types().iter().map(|c| c.to_string()).collect();
        let egf: Vec<String> = z.egf().iter().map(|c| c.to_string()).collect();
        println!("  unlabeled: {}", iso.join(", "));
        println!("  egf:       {}", egf.join(", "));
    }
    Ok(())
}
