//! Bicolored graphs: coefficient of x^n y^e counts graphs on n vertices
//! split into two nonempty unordered color classes, with e edges between
//! the classes (multiple edges allowed).

use cycleindex::enumeration::bicolored_counts;
use cycleindex::species::parse_species;

fn main() -> Result<(), cycleindex::Error> {
    let g = parse_species("E")?;
    let table = bicolored_counts(&g, 5, 5)?;
    for n in 2..=5 {
        let row: Vec<String> = (0..=5)
            .map(|e| table.get(n, Some(e)).unwrap().to_string())
            .collect();
        println!("x^{n}: {}", row.join(" "));
    }
    Ok(())
}
