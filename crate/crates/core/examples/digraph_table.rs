//! Loopless digraphs of outdegree k on n vertices.
//!
//! ```bash
//! cargo run --release --example digraph_table
//! ```

use cycleindex::enumeration::{outdegree_table, Loops};

fn main() -> Result<(), cycleindex::Error> {
    let ks = [1, 2, 3, 4, 5];
    let table = outdegree_table(&ks, Loops::Forbidden, 9)?;
    print!("{:>3}", "n");
    for k in ks {
        print!("{:>14}", format!("k={k}"));
    }
    println!();
    for n in 2..=9 {
        print!("{n:>3}");
        for k in ks {
            print!("{:>14}", table.get(n, Some(k)).unwrap());
        }
        println!();
    }
    Ok(())
}
