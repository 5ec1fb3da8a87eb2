//! Acceptance criteria, one PASS/FAIL line each. Every comparison is exact.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use cycleindex::enumeration::{
    bicolored_counts, digraph_counts, digraph_cycle_index, graph_counts, loopless_digraph_solution,
    outdegree_set_counts, outdegree_table, CountTable, Loops,
};
use cycleindex::oracle::{burnside_family, Family, DEFAULT_BUDGET};
use cycleindex::species::{cycle_index_one, cycle_index_two, inner_plethysm_y, parse_species, phi_cycle_index, SpeciesExpr};
use cycleindex::{enumerate_partitions, FixFn, PSeries, Partition, Rational};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn big(s: &str) -> BigUint {
    s.parse().unwrap()
}

fn q(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

fn check_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn outdegree_grid() -> &'static CountTable {
    static T: OnceLock<CountTable> = OnceLock::new();
    T.get_or_init(|| outdegree_table(&[0, 1, 2, 3, 4, 5, 6, 7, 8], Loops::Forbidden, 9).unwrap())
}

fn criterion_1() -> Outcome {
    let expected: [[&str; 5]; 8] = [
        ["1", "0", "0", "0", "0"],
        ["2", "1", "0", "0", "0"],
        ["6", "6", "1", "0", "0"],
        ["13", "79", "13", "1", "0"],
        ["40", "1499", "1499", "40", "1"],
        ["100", "35317", "257290", "35317", "100"],
        ["291", "967255", "56150820", "56150820", "967255"],
        ["797", "29949217", "14971125930", "111359017198", "14971125930"],
    ];
    let t = outdegree_grid();
    for (i, row) in expected.iter().enumerate() {
        let n = i + 2;
        for (j, want) in row.iter().enumerate() {
            let k = j + 1;
            check_eq(&format!("n={n} k={k}"), t.get(n, Some(k)).cloned(), Some(big(want)))?;
        }
    }
    Ok(())
}

fn series(t: &CountTable) -> Vec<BigUint> {
    t.counts()
}

fn bigs(v: &[&str]) -> Vec<BigUint> {
    v.iter().map(|s| big(s)).collect()
}

fn criterion_2() -> Outcome {
    let t = digraph_counts(&SpeciesExpr::Sets, Loops::Allowed, 6).map_err(|e| e.to_string())?;
    check_eq(
        "relations",
        series(&t),
        bigs(&["2", "10", "104", "3044", "291968", "96928992"]),
    )
}

fn criterion_3() -> Outcome {
    let t = digraph_counts(&SpeciesExpr::Sets, Loops::Forbidden, 9).map_err(|e| e.to_string())?;
    check_eq(
        "loopless digraphs",
        series(&t),
        bigs(&[
            "1",
            "3",
            "16",
            "218",
            "9608",
            "1540944",
            "882033440",
            "1793359192848",
            "13027956824399552",
        ]),
    )
}

fn criterion_4() -> Outcome {
    let t = outdegree_set_counts(&[1, 3, 4], 8).map_err(|e| e.to_string())?;
    check_eq(
        "S={1,3,4}",
        series(&t)[1..].to_vec(),
        bigs(&["1", "2", "19", "616", "93815", "39097411", "30749550146"]),
    )
}

fn criterion_5() -> Outcome {
    let t = graph_counts(&SpeciesExpr::sets_of_size(3), Loops::Forbidden, 11, None)
        .map_err(|e| e.to_string())?;
    let want = ["0", "1", "0", "3", "0", "9", "0", "32", "0", "135", "0"];
    check_eq("3-regular", series(&t), bigs(&want))
}

fn criterion_6() -> Outcome {
    let g = cycle_index_two(&parse_species("E_2(X*E_2(Y))").unwrap(), 4, 4).map_err(|e| e.to_string())?;
    let r = inner_plethysm_y(&PSeries::sets_of_size(2), &g).map_err(|e| e.to_string())?;
    let p = |v: &[usize]| Partition::new(v.to_vec());
    let displayed = [
        (p(&[2, 2]), p(&[4]), q(1, 4)),
        (p(&[4]), p(&[4]), q(1, 4)),
        (p(&[2, 2]), p(&[2, 1, 1]), q(3, 8)),
        (p(&[1, 1, 1, 1]), p(&[2, 1, 1]), q(1, 8)),
        (p(&[2, 2]), p(&[2, 2]), q(7, 16)),
        (p(&[1, 1, 1, 1]), p(&[2, 2]), q(1, 16)),
        (p(&[2, 1, 1]), p(&[2, 2]), q(1, 4)),
        (p(&[2, 2]), p(&[1, 1, 1, 1]), q(1, 16)),
        (p(&[1, 1, 1, 1]), p(&[1, 1, 1, 1]), q(3, 16)),
    ];
    check_eq("number of terms", r.len(), displayed.len())?;
    for (x, y, c) in displayed {
        check_eq(&format!("p_{x}(x) p_{y}(y)"), r.coeff(&x, &y), c)?;
    }
    let iso = r.iso_types_xy();
    for (a, row) in iso.iter().enumerate() {
        for (b, v) in row.iter().enumerate() {
            let want = if (a, b) == (4, 4) { q(2, 1) } else { Rational::zero() };
            check_eq(&format!("x^{a} y^{b}"), v.clone(), want)?;
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let t = bicolored_counts(&SpeciesExpr::Sets, 5, 5).map_err(|e| e.to_string())?;
    let expected: [[u32; 6]; 4] = [
        [1, 1, 1, 1, 1, 1],
        [1, 1, 2, 2, 3, 3],
        [2, 2, 5, 7, 12, 15],
        [2, 2, 6, 10, 21, 32],
    ];
    for (i, row) in expected.iter().enumerate() {
        let n = i + 2;
        for (e, want) in row.iter().enumerate() {
            check_eq(&format!("x^{n} y^{e}"), t.get(n, Some(e)).cloned(), Some(BigUint::from(*want)))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let mut cases: Vec<(Family, SpeciesExpr, Loops, usize)> = Vec::new();
    for k in 0..=3 {
        cases.push((
            Family::OutdegreeDigraph { k, loops: false },
            SpeciesExpr::sets_of_size(k),
            Loops::Forbidden,
            5,
        ));
    }
    cases.push((Family::Relation, SpeciesExpr::Sets, Loops::Allowed, 4));
    for (family, g, loops, max_n) in cases {
        let engine = digraph_counts(&g, loops, max_n).map_err(|e| e.to_string())?;
        for n in 1..=max_n {
            let oracle = burnside_family(&family, n, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            check_eq(&format!("{family} n={n}"), engine.get(n, None).cloned(), Some(oracle))?;
        }
    }
    let family = Family::RegularMultigraph { k: 3, loops: false };
    let engine = graph_counts(&SpeciesExpr::sets_of_size(3), Loops::Forbidden, 6, None).map_err(|e| e.to_string())?;
    for n in 1..=6 {
        let oracle = burnside_family(&family, n, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        check_eq(&format!("{family} n={n}"), engine.get(n, None).cloned(), Some(oracle))?;
    }
    Ok(())
}

/// Random polynomial in the power sums, degrees `lo..=hi`, small integer
/// coefficients (possibly negative).
fn poly(lo: usize, hi: usize) -> impl Strategy<Value = PSeries> {
    let parts: Vec<Partition> = (lo..=hi).flat_map(enumerate_partitions).collect();
    let len = parts.len();
    prop::collection::vec((0..len, -3i64..=3, 1i64..=3), 1..5).prop_map(move |terms| {
        PSeries::from_terms(
            None,
            terms
                .into_iter()
                .map(|(i, a, b)| (parts[i].clone(), q(a, b)))
                .collect::<Vec<_>>(),
        )
    })
}

fn fix_table(hi: usize) -> impl Strategy<Value = FixFn> {
    let parts: Vec<Partition> = (0..=hi).flat_map(enumerate_partitions).collect();
    let len = parts.len();
    prop::collection::vec(-3i64..=3, len).prop_map(move |vals| {
        FixFn::Table(
            parts
                .iter()
                .cloned()
                .zip(vals.into_iter().map(|v| q(v, 1)))
                .collect(),
        )
    })
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 128,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn criterion_9() -> Outcome {
    const B: usize = 6;
    run_property("plethysm distributivity", (poly(0, 3), poly(0, 3), poly(1, 3)), |(f, g, h)| {
        let lhs = (&f + &g).plethysm(&h).unwrap().truncate(B);
        let rhs = (&f.plethysm(&h).unwrap() + &g.plethysm(&h).unwrap()).truncate(B);
        ensure(lhs == rhs, || "(f+g)∘h".into())?;
        let lhs = (&f * &g).plethysm(&h).unwrap().truncate(B);
        let rhs = (&f.plethysm(&h).unwrap() * &g.plethysm(&h).unwrap()).truncate(B);
        ensure(lhs == rhs, || "(fg)∘h".into())?;
        let lhs = f.plethysm(&g.plethysm(&h).unwrap()).map(|s| s.truncate(B));
        if let Ok(lhs) = lhs {
            if g.constant_term().is_zero() {
                let rhs = f.plethysm(&g).unwrap().plethysm(&h).unwrap().truncate(B);
                ensure(lhs == rhs, || "associativity".into())?;
            }
        }
        Ok(())
    })?;
    run_property("p_n ∘ p_m = p_nm", (1usize..=8, 1usize..=8, 0usize..=3), |(n, m, extra)| {
        let outer = Partition::new(vec![n; 1 + extra]);
        let got = PSeries::power_sum(outer.clone()).plethysm(&PSeries::power_sum(Partition::from([m]))).unwrap();
        ensure(got == PSeries::power_sum(outer.scale(m)), || format!("n={n} m={m}"))
    })?;
    run_property("Kronecker unit", poly(0, 5), |f| {
        let got = PSeries::sets(5).kronecker(&f);
        ensure(got == f.truncate(5), || "Z_E × f".into())
    })?;
    run_property("Φ multiplicativity", (fix_table(3), fix_table(3)), |(f1, f2)| {
        let sum = FixFn::linear(vec![(Rational::one(), f1.clone()), (Rational::one(), f2.clone())]);
        let lhs = phi_cycle_index(&sum, 3, 3);
        let rhs = phi_cycle_index(&f1, 3, 3).cartesian_y(&phi_cycle_index(&f2, 3, 3));
        ensure(lhs == rhs, || "Φ(F1+F2)".into())
    })?;
    run_property(
        "loop-removal equation",
        prop::collection::vec((0usize..=5, 1usize..=2), 1..4),
        |terms| {
            let g = SpeciesExpr::sum_all(terms.iter().map(|&(k, c)| {
                let e = SpeciesExpr::sets_of_size(k);
                if c == 2 {
                    SpeciesExpr::product(e, SpeciesExpr::x())
                } else {
                    e
                }
            }));
            let z = cycle_index_one(&g, 7).unwrap();
            let g1 = loopless_digraph_solution(&g).unwrap();
            for n in 0..=6 {
                for l in enumerate_partitions(n) {
                    let lhs = g1.eval(&l) + g1.eval(&l.augment(1));
                    ensure(lhs == z.fix_at(&l), || format!("{g} at {l}"))?;
                }
            }
            Ok(())
        },
    )?;
    run_property("outdegree table complement symmetry", (1usize..=9, 0usize..=8), |(n, k)| {
        if k + 1 > n {
            return Ok(());
        }
        let t = outdegree_grid();
        ensure(t.get(n, Some(k)) == t.get(n, Some(n - 1 - k)), || format!("n={n} k={k}"))
    })?;
    run_property("labeled count", (0usize..=4, 1usize..=8), |(k, n)| {
        let fix = loopless_digraph_solution(&SpeciesExpr::sets_of_size(k)).unwrap();
        let egf = digraph_cycle_index(&fix, n).egf();
        let fact: Rational = (1..=n).map(|i| q(i as i64, 1)).product();
        let binom = if k < n { num_integer::binomial(n as i64 - 1, k as i64) } else { 0 };
        let want = num_traits::pow(q(binom, 1), n);
        ensure(&egf[n] * fact == want, || format!("k={k} n={n}"))
    })
}

fn cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_cycleindex"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} exited with {}", out.status));
    }
    Ok(out.stdout)
}

fn criterion_10() -> Outcome {
    let commands: &[&[&str]] = &[
        &["digraphs", "--outdegree", "2", "--max-n", "9", "--format", "csv"],
        &["digraphs", "--outdegree", "1..5", "--max-n", "9", "--format", "json"],
        &["digraphs", "--species", "E", "--loops", "--max-n", "6"],
        &["digraphs", "--species", "E", "--max-n", "9", "--provenance"],
        &["digraphs", "--outdegree-set", "1,3,4", "--max-n", "8"],
        &["graphs", "--species", "E_3", "--max-n", "10"],
        &["bicolored", "--species", "E", "--max-x", "5", "--max-y", "5", "--format", "csv"],
        &["cycle-index", "--expr", "E_2"],
        &["cycle-index", "--expr", "E_2(X*E_2(Y))", "--max-degree", "2", "--max-y", "4"],
        &["verify", "--family", "regular:3", "--max-n", "6"],
    ];
    for args in commands {
        let a = cli(args)?;
        let b = cli(args)?;
        if a != b {
            return Err(format!("{args:?} produced different output on a second run"));
        }
    }
    let csv = String::from_utf8(cli(commands[0])?).unwrap();
    check_eq("csv n=9 row", csv.lines().last().map(str::to_owned), Some("9,29949217".to_owned()))?;
    let text = String::from_utf8(cli(commands[5])?).unwrap();
    check_eq("graph series", text.lines().nth(1).map(str::to_owned), Some("1,0,3,0,9,0,32,0,135".to_owned()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("outdegree table", criterion_1),
        ("relation counts", criterion_2),
        ("all loopless digraphs", criterion_3),
        ("outdegree set {1,3,4}", criterion_4),
        ("3-regular loopless multigraphs", criterion_5),
        ("inner plethysm in Y worked example", criterion_6),
        ("bicolored graphs", criterion_7),
        ("oracle equivalence", criterion_8),
        ("property suites", criterion_9),
        ("CLI determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(msg)
        });
        match outcome {
            Ok(()) => println!("criterion {:>2} {name}: PASS", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({msg})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
