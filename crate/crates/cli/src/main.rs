use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use flis::bb::{density_benchmark, enumerate_induced_subtrees, leaf_function_bb, BENCH_CSV_HEADER};
use flis::graph::reduce_independent_set;
use flis::oracle::{bruteforce_with_witnesses, MAX_ORACLE_ORDER};
use flis::tree_dp::leaf_function_tree;
use flis::{
    closed_form, Family, Graph, LeafFunction, SearchStats, SolveError, SolveOptions, VertexId,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "flis", version, about = "Leaf functions of induced subtrees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a named family.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
    },
    /// Compute the leaf function of a graph.
    LeafFunction {
        /// Edge-list or JSON graph file, `-` for stdin.
        input: Option<PathBuf>,
        #[command(flatten)]
        source: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Solver::Auto)]
        solver: Solver,
        #[arg(long)]
        no_bound: bool,
        /// Print one optimal vertex set of this size (repeatable).
        #[arg(long = "witness")]
        witnesses: Vec<usize>,
        #[arg(long)]
        stats: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
        /// Give up after this many search nodes.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Cross-check every applicable solver on one graph.
    Verify {
        input: Option<PathBuf>,
        #[command(flatten)]
        source: FamilyArgs,
    },
    /// Turn an independent-set query into a leafed-subtree instance.
    ReduceIs {
        input: PathBuf,
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Count (and optionally list) induced subtrees.
    Enumerate {
        input: PathBuf,
        #[arg(long)]
        list: bool,
    },
    /// Visited-subtree counts with and without the bound on random graphs.
    Bench {
        n: usize,
        /// Comma-separated edge probabilities.
        #[arg(value_delimiter = ',', required = true)]
        densities: Vec<f64>,
        /// `a..b` (inclusive) or a comma-separated list.
        #[arg(long, default_value = "1..5")]
        seeds: String,
        #[arg(long, default_value_t = 40)]
        max_n: usize,
    },
}

#[derive(clap::Args)]
struct FamilyArgs {
    /// Use a named family instead of an input file.
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
    #[arg(long = "param", requires = "family")]
    params: Vec<String>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edges,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Solver {
    Auto,
    Bb,
    TreeDp,
    Brute,
    ClosedForm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Csv,
    Json,
}

/// Error carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn input(msg: impl ToString) -> Self {
        Failure {
            code: 1,
            msg: msg.to_string(),
        }
    }

    fn mismatch(msg: impl ToString) -> Self {
        Failure {
            code: 2,
            msg: msg.to_string(),
        }
    }
}

const EXIT_BUDGET: u8 = 3;
const EXIT_DISAGREE: u8 = 4;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // Usage errors exit with 1; exit code 2 is reserved for solver/input mismatches.
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(1);
        }
        Err(e) => e.exit(),
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gen {
            family,
            params,
            seed,
            output,
            format,
        } => {
            let g = Family::from_tag(&family, &params, seed)
                .and_then(|f| f.generate())
                .map_err(Failure::input)?;
            let text = match format {
                GraphFormat::Edges => g.to_edge_list(),
                GraphFormat::Json => g.to_json() + "\n",
            };
            emit(output.as_deref(), &text)
        }
        Command::LeafFunction {
            input,
            source,
            solver,
            no_bound,
            witnesses,
            stats,
            format,
            budget,
        } => {
            let (g, family) = load(input.as_deref(), &source)?;
            let report = solve(&g, family.as_ref(), solver, no_bound, &witnesses, budget)?;
            print!("{}", render(&report, stats, format));
            if report.budget_hit {
                return Err(Failure {
                    code: EXIT_BUDGET,
                    msg: "node budget exhausted; printed values are lower bounds".into(),
                });
            }
            Ok(())
        }
        Command::Verify { input, source } => {
            let (g, family) = load(input.as_deref(), &source)?;
            verify(&g, family.as_ref())
        }
        Command::ReduceIs { input, k, output } => {
            let g = read_graph(&input)?;
            let inst = reduce_independent_set(&g, k);
            let line = format!("i={} ell={}", inst.i, inst.ell);
            match output {
                Some(path) => {
                    emit(Some(&path), &inst.graph.to_edge_list())?;
                    println!("{line}");
                }
                None => {
                    print!("{}", inst.graph.to_edge_list());
                    eprintln!("{line}");
                }
            }
            Ok(())
        }
        Command::Enumerate { input, list } => {
            let g = read_graph(&input)?;
            let mut out = io::stdout().lock();
            let count = enumerate_induced_subtrees(&g, |size, leaves, vs| {
                if list {
                    let mut vs = vs.to_vec();
                    vs.sort_unstable();
                    let _ = writeln!(out, "{size} {leaves} {}", join(&vs));
                }
            });
            println!("{count}");
            Ok(())
        }
        Command::Bench {
            n,
            densities,
            seeds,
            max_n,
        } => {
            if n > max_n {
                return Err(Failure::input(format!("n = {n} exceeds --max-n {max_n}")));
            }
            if let Some(p) = densities.iter().find(|p| !(0.0..=1.0).contains(*p)) {
                return Err(Failure::input(format!("density {p} outside [0, 1]")));
            }
            let seeds = parse_seeds(&seeds)?;
            println!("{BENCH_CSV_HEADER}");
            for row in density_benchmark(n, &densities, &seeds) {
                println!("{}", row.to_csv());
            }
            Ok(())
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(Failure::input)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?
    };
    let parsed = if text.trim_start().starts_with('{') {
        Graph::from_json(&text)
    } else {
        Graph::from_edge_list(&text)
    };
    parsed.map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load(input: Option<&Path>, source: &FamilyArgs) -> Result<(Graph, Option<Family>), Failure> {
    match (input, &source.family) {
        (Some(path), None) => Ok((read_graph(path)?, None)),
        (None, Some(tag)) => {
            let family =
                Family::from_tag(tag, &source.params, source.seed).map_err(Failure::input)?;
            let g = family.generate().map_err(Failure::input)?;
            Ok((g, Some(family)))
        }
        _ => Err(Failure::input("give either an input file or --family")),
    }
}

fn parse_seeds(spec: &str) -> Result<Vec<u64>, Failure> {
    let bad = || Failure::input(format!("bad seed list `{spec}`"));
    if let Some((a, b)) = spec.split_once("..") {
        let a: u64 = a.trim().parse().map_err(|_| bad())?;
        let b: u64 = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    spec.split(',')
        .map(|s| s.trim().parse().map_err(|_| bad()))
        .collect()
}

struct Report {
    leaf_function: LeafFunction,
    witnesses: BTreeMap<usize, Option<Vec<VertexId>>>,
    stats: Option<SearchStats>,
    budget_hit: bool,
}

fn solve(
    g: &Graph,
    family: Option<&Family>,
    solver: Solver,
    no_bound: bool,
    witnesses: &[usize],
    budget: Option<u64>,
) -> Result<Report, Failure> {
    let solver = match solver {
        Solver::Auto if g.is_tree() && witnesses.is_empty() => Solver::TreeDp,
        Solver::Auto => Solver::Bb,
        s => s,
    };
    if !witnesses.is_empty() && !matches!(solver, Solver::Bb | Solver::Brute) {
        return Err(Failure::mismatch(
            "witnesses are only available from the bb and brute solvers",
        ));
    }
    let plain = |leaf_function| Report {
        leaf_function,
        witnesses: BTreeMap::new(),
        stats: None,
        budget_hit: false,
    };
    match solver {
        Solver::Bb => {
            let opts = SolveOptions {
                use_bound: !no_bound,
                witnesses_for: witnesses.iter().copied().collect(),
                node_budget: budget,
            };
            let (sol, budget_hit) = match leaf_function_bb(g, &opts) {
                Ok(sol) => (sol, false),
                Err(SolveError::BudgetExhausted { partial, .. }) => (*partial, true),
                Err(e) => return Err(Failure::mismatch(e)),
            };
            Ok(Report {
                witnesses: witnesses
                    .iter()
                    .map(|&i| (i, sol.witnesses.get(&i).cloned()))
                    .collect(),
                leaf_function: sol.leaf_function,
                stats: Some(sol.stats),
                budget_hit,
            })
        }
        Solver::Brute => {
            let (lf, sets) = bruteforce_with_witnesses(g).map_err(Failure::mismatch)?;
            let mut report = plain(lf);
            report.witnesses = witnesses
                .iter()
                .map(|&i| (i, sets.get(i).cloned().flatten()))
                .collect();
            Ok(report)
        }
        Solver::TreeDp => leaf_function_tree(g).map(plain).map_err(Failure::mismatch),
        Solver::ClosedForm => {
            let family = family.ok_or_else(|| Failure::mismatch("closed-form needs --family"))?;
            closed_form(family).map(plain).map_err(Failure::mismatch)
        }
        Solver::Auto => unreachable!("resolved above"),
    }
}

fn join(vs: &[VertexId]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn render(report: &Report, with_stats: bool, format: OutputFormat) -> String {
    let stats = report.stats.as_ref().filter(|_| with_stats);
    let mut out = String::new();
    match format {
        OutputFormat::Table => {
            out.push_str(&report.leaf_function.to_table());
            out.push('\n');
            for (i, w) in &report.witnesses {
                match w {
                    Some(vs) => out.push_str(&format!("witness {i}: {}\n", join(vs))),
                    None => out.push_str(&format!("witness {i}: none\n")),
                }
            }
            if let Some(s) = stats {
                out.push_str(&format!(
                    "visited_subtrees={} include_ops={} exclude_ops={} pruned={} nodes={} elapsed_ms={:.3}\n",
                    s.visited_subtrees,
                    s.include_ops,
                    s.exclude_ops,
                    s.pruned,
                    s.nodes,
                    s.elapsed.as_secs_f64() * 1e3
                ));
            }
        }
        OutputFormat::Csv => {
            out.push_str("i,leaves\n");
            for (i, v) in report.leaf_function.values().iter().enumerate() {
                out.push_str(&format!("{i},{v}\n"));
            }
        }
        OutputFormat::Json => {
            let witnesses: BTreeMap<String, _> = report
                .witnesses
                .iter()
                .map(|(i, w)| (i.to_string(), w.clone()))
                .collect();
            let value = json!({
                "leaf_function": report.leaf_function,
                "witnesses": witnesses,
                "stats": stats,
                "complete": !report.budget_hit,
            });
            out.push_str(&value.to_string());
            out.push('\n');
        }
    }
    out
}

fn verify(g: &Graph, family: Option<&Family>) -> Result<(), Failure> {
    let mut results: Vec<(&str, LeafFunction)> = Vec::new();
    let reference = leaf_function_bb(g, &SolveOptions::default()).map_err(Failure::mismatch)?;
    results.push(("bb", reference.leaf_function));
    let nobound = leaf_function_bb(g, &SolveOptions::without_bound()).map_err(Failure::mismatch)?;
    results.push(("bb-nobound", nobound.leaf_function));
    if g.order() <= MAX_ORACLE_ORDER {
        results.push((
            "brute",
            bruteforce_with_witnesses(g).map_err(Failure::mismatch)?.0,
        ));
    }
    if g.is_tree() {
        results.push(("tree-dp", leaf_function_tree(g).map_err(Failure::mismatch)?));
    }
    if let Some(lf) = family.and_then(|f| closed_form(f).ok()) {
        results.push(("closed-form", lf));
    }
    let mut agree = true;
    for (name, lf) in &results {
        let same = *lf == results[0].1;
        agree &= same;
        println!(
            "{name:<12} {} {}",
            if same { "ok  " } else { "DIFF" },
            lf.to_table()
        );
    }
    if agree {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_DISAGREE,
            msg: "solvers disagree".into(),
        })
    }
}
