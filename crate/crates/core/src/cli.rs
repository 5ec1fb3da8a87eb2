//! Command-line front end.
//!
//! Exit statuses: 0 success, 1 internal error, 2 usage error (including
//! malformed species expressions), 3 a mathematical precondition failed or
//! the oracle budget was exceeded, 4 the oracle disagreed with the engine.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::enumeration::{self, CountTable, Loops};
use crate::error::Error;
use crate::oracle::{self, Family};
use crate::species::{self, parse_species, CycleIndex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "cycleindex",
    version,
    about = "Exact cycle index computations and unlabeled graph enumeration"
)]
struct Cli {
    /// Output format (default: json for cycle-index, text otherwise).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Include how the result was computed.
    #[arg(long, global = true)]
    provenance: bool,

    /// Worker threads for parallel sections.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count unlabeled G-digraphs.
    Digraphs(DigraphArgs),
    /// Count unlabeled G-graphs (multiple edges allowed).
    Graphs {
        /// A strictly finite species expression G.
        #[arg(long)]
        species: String,
        /// Allow loops.
        #[arg(long)]
        loops: bool,
        /// Largest vertex count.
        #[arg(long)]
        max_n: usize,
        /// Degree bound in the half-edge sort (default: top degree of G times max-n).
        #[arg(long)]
        max_y: Option<usize>,
    },
    /// Count bicolored G-graphs by vertices and edges.
    Bicolored {
        /// A species expression G.
        #[arg(long)]
        species: String,
        /// Largest vertex count.
        #[arg(long)]
        max_x: usize,
        /// Largest edge count.
        #[arg(long)]
        max_y: usize,
    },
    /// Print the cycle index of a species expression.
    CycleIndex {
        /// Species expression in X and Y, e.g. `E_2(X*E_2(Y))`.
        #[arg(long)]
        expr: String,
        /// Degree bound in X (default: the degree of a polynomial species).
        #[arg(long)]
        max_degree: Option<usize>,
        /// Degree bound in Y; makes the result two-sort.
        #[arg(long)]
        max_y: Option<usize>,
    },
    /// Compare engine counts with brute-force Burnside counts.
    Verify {
        /// One of outdegree:K, outdegree-loops:K, regular:K, regular-loops:K,
        /// relations, outdegree-set:S.
        #[arg(long)]
        family: String,
        /// Largest vertex count.
        #[arg(long)]
        max_n: usize,
        /// Limit on |family|·n! (default from CYCLEINDEX_BUDGET, else 1e9).
        #[arg(long)]
        budget: Option<u128>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct DigraphChoice {
    /// Outdegree K, a list `1,2,3` or a range `1..5`.
    #[arg(long)]
    outdegree: Option<String>,
    /// Allowed outdegrees, e.g. `1,3,4` (loops are always forbidden).
    #[arg(long)]
    outdegree_set: Option<String>,
    /// A species expression G.
    #[arg(long)]
    species: Option<String>,
}

#[derive(Debug, Args)]
struct DigraphArgs {
    #[command(flatten)]
    choice: DigraphChoice,
    /// Allow loops (not with --outdegree-set).
    #[arg(long)]
    loops: bool,
    /// Largest vertex count.
    #[arg(long)]
    max_n: usize,
}

/// Failure with an exit status.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Invalid(_) => EXIT_USAGE,
            Error::NonIntegral { .. } => EXIT_INTERNAL,
            _ => EXIT_PRECONDITION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Runs the command line `argv` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    if let Some(n) = cli.threads {
        // Fails only if the global pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match execute(&cli) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_INTERNAL
            }
        },
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let format = cli.format;
    let text_default = format.unwrap_or(Format::Text);
    match &cli.command {
        Command::Digraphs(args) => {
            let loops = Loops::from_flag(args.loops);
            let c = &args.choice;
            let table = if let Some(spec) = &c.outdegree {
                let ks = parse_degrees(spec)?;
                if ks.len() == 1 {
                    enumeration::digraph_counts(&species::SpeciesExpr::sets_of_size(ks[0]), loops, args.max_n)?
                } else {
                    enumeration::outdegree_table(&ks, loops, args.max_n)?
                }
            } else if let Some(set) = &c.outdegree_set {
                if args.loops {
                    return Err(usage("--outdegree-set counts loopless digraphs; drop --loops"));
                }
                let set = oracle::parse_int_list(set)?;
                enumeration::outdegree_set_counts(&set, args.max_n)?
            } else {
                let g = parse_species(c.species.as_deref().unwrap_or_default())?;
                enumeration::digraph_counts(&g, loops, args.max_n)?
            };
            Ok(render_table(&table, text_default, cli.provenance))
        }
        Command::Graphs {
            species,
            loops,
            max_n,
            max_y,
        } => {
            let g = parse_species(species)?;
            let table = enumeration::graph_counts(&g, Loops::from_flag(*loops), *max_n, *max_y)?;
            Ok(render_table(&table, text_default, cli.provenance))
        }
        Command::Bicolored {
            species,
            max_x,
            max_y,
        } => {
            let g = parse_species(species)?;
            let table = enumeration::bicolored_counts(&g, *max_x, *max_y)?;
            Ok(render_table(&table, text_default, cli.provenance))
        }
        Command::CycleIndex {
            expr,
            max_degree,
            max_y,
        } => cycle_index_command(expr, *max_degree, *max_y, format.unwrap_or(Format::Json)),
        Command::Verify {
            family,
            max_n,
            budget,
        } => {
            let family = Family::parse(family)?;
            let budget = budget.unwrap_or_else(oracle::default_budget);
            let rows = oracle::verify_family(&family, *max_n, budget)?;
            let text = match text_default {
                Format::Json => {
                    let v: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "family": r.family,
                                "n": r.n,
                                "oracle": r.oracle.to_string(),
                                "engine": r.engine.to_string(),
                                "agree": r.agrees(),
                            })
                        })
                        .collect();
                    json_text(&serde_json::Value::Array(v))
                }
                Format::Csv => {
                    let mut s = String::from("family,n,oracle,engine,agree\n");
                    for r in &rows {
                        s.push_str(&format!("{},{},{},{},{}\n", r.family, r.n, r.oracle, r.engine, r.agrees()));
                    }
                    s
                }
                Format::Text => rows.iter().map(|r| format!("{r}\n")).collect(),
            };
            if rows.iter().all(|r| r.agrees()) {
                Ok(text)
            } else {
                Err(Failure {
                    code: EXIT_MISMATCH,
                    message: format!("oracle mismatch\n{}", text.trim_end()),
                })
            }
        }
    }
}

/// `K`, `a,b,c` or `a..b` (inclusive).
fn parse_degrees(spec: &str) -> Result<Vec<usize>, Failure> {
    if let Some((a, b)) = spec.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| usage(format!("bad range `{spec}`")))?;
        let b: usize = b.trim().parse().map_err(|_| usage(format!("bad range `{spec}`")))?;
        if a > b {
            return Err(usage(format!("empty range `{spec}`")));
        }
        return Ok((a..=b).collect());
    }
    let ks = oracle::parse_int_list(spec)?;
    if ks.is_empty() {
        return Err(usage("--outdegree needs at least one value"));
    }
    Ok(ks)
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn json_text(v: &serde_json::Value) -> String {
    pretty(v)
}

fn provenance_lines(table: &CountTable) -> String {
    table
        .provenance
        .iter()
        .map(|(k, v)| format!("# {k}: {v}\n"))
        .collect()
}

fn render_table(table: &CountTable, format: Format, provenance: bool) -> String {
    match format {
        Format::Json => json_text(&table.to_json(provenance)),
        Format::Csv => {
            let mut s = if provenance { provenance_lines(table) } else { String::new() };
            s.push_str(&table.to_csv());
            s
        }
        Format::Text => {
            let mut s = if provenance { provenance_lines(table) } else { String::new() };
            s.push_str(&table_text(table));
            s
        }
    }
}

/// Text layout: a series line for one-parameter tables, one line per `n`
/// otherwise.
fn table_text(table: &CountTable) -> String {
    match table.secondary {
        None => {
            let first = table.rows.iter().position(|r| r.count != 0u32.into());
            match first {
                None => match (table.rows.first(), table.rows.last()) {
                    (Some(a), Some(b)) => format!("n = {}..{}\n{}\n", a.n, b.n, vec!["0"; table.rows.len()].join(",")),
                    _ => String::new(),
                },
                Some(i) => {
                    let rows = &table.rows[i..];
                    let series: Vec<String> = rows.iter().map(|r| r.count.to_string()).collect();
                    format!("n = {}..{}\n{}\n", rows[0].n, rows[rows.len() - 1].n, series.join(","))
                }
            }
        }
        Some(name) => {
            let mut s = String::new();
            let mut current: Option<usize> = None;
            for r in &table.rows {
                if current != Some(r.n) {
                    if current.is_some() {
                        s.push('\n');
                    }
                    s.push_str(&format!("n={}: ", r.n));
                    current = Some(r.n);
                } else {
                    s.push(',');
                }
                s.push_str(&r.count.to_string());
            }
            if current.is_some() {
                s.push('\n');
            }
            let ks: Vec<String> = {
                let first = table.rows.first().map(|r| r.n);
                table
                    .rows
                    .iter()
                    .filter(|r| Some(r.n) == first)
                    .map(|r| r.k.unwrap_or(0).to_string())
                    .collect()
            };
            format!("{name} = {}\n{s}", ks.join(","))
        }
    }
}

fn cycle_index_command(
    expr: &str,
    max_degree: Option<usize>,
    max_y: Option<usize>,
    format: Format,
) -> Result<String, Failure> {
    let e = parse_species(expr)?;
    let ci = match (max_degree, max_y) {
        (None, None) => match species::exact_cycle_index(&e)? {
            Some(z) => CycleIndex::One(z),
            None => return Err(usage("--max-degree is required for a species that is not a polynomial")),
        },
        (None, Some(_)) => return Err(usage("--max-degree is required with --max-y")),
        (Some(n), my) => species::cycle_index(&e, n, my)?,
    };
    Ok(match (ci, format) {
        (CycleIndex::One(z), Format::Json) => pretty(&z),
        (CycleIndex::Two(z), Format::Json) => pretty(&z),
        (CycleIndex::One(z), Format::Text) => format!("{z}\n"),
        (CycleIndex::Two(z), Format::Text) => format!("{z}\n"),
        (CycleIndex::One(z), Format::Csv) => {
            let mut s = String::from("partition,coeff\n");
            for (l, c) in z.terms() {
                s.push_str(&format!("{},{c}\n", parts_field(l)));
            }
            s
        }
        (CycleIndex::Two(z), Format::Csv) => {
            let mut s = String::from("x,y,coeff\n");
            for ((x, y), c) in z.terms() {
                s.push_str(&format!("{},{},{c}\n", parts_field(x), parts_field(y)));
            }
            s
        }
    })
}

fn parts_field(l: &crate::partitions::Partition) -> String {
    l.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("cycleindex").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn degree_specs() {
        assert_eq!(parse_degrees("3").ok(), Some(vec![3]));
        assert_eq!(parse_degrees("1..3").ok(), Some(vec![1, 2, 3]));
        assert_eq!(parse_degrees("1,4").ok(), Some(vec![1, 4]));
        assert!(parse_degrees("3..1").is_err());
    }

    #[test]
    fn text_series_trims_leading_zeros() {
        let (code, out, _) = call(&["graphs", "--species", "E_3", "--max-n", "6"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n = 2..6\n1,0,3,0,9\n");
    }

    #[test]
    fn exact_cycle_index_default() {
        let (code, out, _) = call(&["cycle-index", "--expr", "E_2", "--format", "text"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "1/2*p[2] + 1/2*p[1,1]");
        let (code, _, err) = call(&["cycle-index", "--expr", "E"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--max-degree"));
    }
}
