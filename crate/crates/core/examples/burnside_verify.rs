//! Cross-check engine counts against brute-force Burnside counting.

use cycleindex::oracle::{verify_family, Family, DEFAULT_BUDGET};

fn main() -> Result<(), cycleindex::Error> {
    let families = [
        ("outdegree:2", 5),
        ("outdegree-loops:1", 4),
        ("relations", 4),
        ("regular:3", 6),
        ("regular-loops:2", 5),
        ("outdegree-set:1,3,4", 5),
    ];
    for (name, max_n) in families {
        for row in verify_family(&Family::parse(name)?, max_n, DEFAULT_BUDGET)? {
            println!("{row}");
        }
    }
    Ok(())
}
