//! Brute-force oracles against the series engine.

use cycleindex::oracle::{
    brute_composition_fix, brute_inner_plethysm_fix, verify_family, Family, SmallSpecies, DEFAULT_BUDGET,
};
use cycleindex::species::{cycle_index_one, inner_plethysm, SpeciesExpr};
use cycleindex::{enumerate_partitions, PSeries};

use SmallSpecies::*;

#[test]
fn composition_matches_plethysm() {
    let outers = [Singleton, SetsOfSize(2), SetsOfSize(3), Sets];
    let inners = [Singleton, SetsOfSize(2), SetsOfSize(3), NonemptySets];
    for f in outers {
        for g in inners {
            let z = cycle_index_one(&SpeciesExpr::compose(f.expr(), g.expr()), 6).unwrap();
            for n in 0..=6 {
                let brute = brute_composition_fix(f, g, n).unwrap();
                for l in enumerate_partitions(n) {
                    assert_eq!(z.fix_at(&l), brute[&l], "{} ∘ {} at {l}", f.expr(), g.expr());
                }
            }
        }
    }
}

#[test]
fn composition_oracle_refuses_empty_structures() {
    assert!(brute_composition_fix(Sets, Sets, 2).is_err());
    assert!(brute_composition_fix(Subsets, Singleton, 2).is_err());
}

#[test]
fn inner_plethysm_matches_construction() {
    let outers = [Singleton, SetsOfSize(2), SetsOfSize(3), LinearOrdersOfSize(2)];
    let inners = [Singleton, SetsOfSize(2), Sets, Subsets, LinearOrdersOfSize(2)];
    for f in outers {
        let zf = cycle_index_one(&f.expr(), f.max_size().unwrap()).unwrap();
        let zf = PSeries::from_terms(None, zf.terms().map(|(l, c)| (l.clone(), c.clone())));
        for g in inners {
            let zg = cycle_index_one(&g.expr(), 4).unwrap();
            let r = inner_plethysm(&zf, &zg).unwrap();
            for n in 0..=4 {
                let brute = brute_inner_plethysm_fix(f, g, n, DEFAULT_BUDGET).unwrap();
                for l in enumerate_partitions(n) {
                    assert_eq!(r.fix_at(&l), brute[&l], "{} ⊛ {} at {l}", f.expr(), g.expr());
                }
            }
        }
    }
}

#[test]
fn burnside_agrees_with_engine() {
    let cases = [
        ("outdegree:0", 5),
        ("outdegree:1", 5),
        ("outdegree:2", 5),
        ("outdegree:3", 5),
        ("outdegree-loops:2", 4),
        ("relations", 4),
        ("outdegree-set:1,3,4", 5),
        ("regular:2", 6),
        ("regular:3", 6),
        ("regular-loops:2", 5),
        ("regular-loops:3", 5),
    ];
    for (text, max_n) in cases {
        let family = Family::parse(text).unwrap();
        for row in verify_family(&family, max_n, DEFAULT_BUDGET).unwrap() {
            assert!(row.agrees(), "{row}");
        }
    }
}

#[test]
fn budget_is_enforced() {
    let family = Family::parse("relations").unwrap();
    assert!(verify_family(&family, 5, DEFAULT_BUDGET).is_err());
    assert!(verify_family(&family, 3, 10).is_err());
}

#[test]
fn mismatch_row_reports_fail() {
    let row = cycleindex::oracle::VerifyRow {
        family: "outdegree:2".into(),
        n: 5,
        oracle: 79u32.into(),
        engine: 80u32.into(),
    };
    assert!(!row.agrees());
    assert_eq!(row.to_string(), "outdegree:2 n=5: oracle=79 engine=80 FAIL");
}
