//! Relations, all loopless digraphs, and digraphs with outdegrees in {1, 3, 4}.
//!
//! Relations are digraphs with loops where each vertex picks any out-set
//! (`G = E`). Forbidding loops with `G = E` gives all loopless digraphs.

use cycleindex::enumeration::{digraph_counts, outdegree_set_counts, Loops};
use cycleindex::species::SpeciesExpr;

fn show(name: &str, counts: Vec<num_bigint::BigUint>) {
    let s: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
    println!("{name}: {}", s.join(", "));
}

fn main() -> Result<(), cycleindex::Error> {
    show("relations", digraph_counts(&SpeciesExpr::Sets, Loops::Allowed, 6)?.counts());
    show("loopless digraphs", digraph_counts(&SpeciesExpr::Sets, Loops::Forbidden, 9)?.counts());
    show("outdegrees in {1,3,4}", outdegree_set_counts(&[1, 3, 4], 8)?.counts());
    Ok(())
}
