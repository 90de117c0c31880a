//! `indeplab`: analyze graphs, check structural identities and scan corpora.

mod error;
mod io;
mod report;
mod scan;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use indeplab_core::generators::{gnp_corpus, labeled_graphs};
use indeplab_core::theorems::{find, registry, Check};
use indeplab_core::{graph6, Caps, Graph};

use crate::error::{CliError, Result};
use crate::report::Tiers;

/// Environment variable overriding the independence-oracle vertex cap.
const ORACLE_CAP_VAR: &str = "INDEPLAB_ORACLE_CAP";

#[derive(Parser)]
#[command(name = "indeplab", version, about = "Independence, criticality and Larson decomposition toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every invariant of one graph.
    Analyze(AnalyzeArgs),
    /// Evaluate registered checks on one graph.
    Check(CheckArgs),
    /// Evaluate checks over a corpus of graphs.
    Scan(ScanArgs),
    /// Emit graphs as graph6 lines.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct Source {
    /// Graph file (graph6 lines or an `n m` edge list); standard input if omitted.
    input: Option<PathBuf>,
    /// Named generator: figure1, path:n, cycle:n, complete:n, complete_bipartite:a,b, star:k, gnp:n,p,seed.
    #[arg(long = "gen", value_name = "SPEC", conflicts_with = "input")]
    generator: Option<String>,
    /// Inline graph6 string.
    #[arg(long, value_name = "TEXT", conflicts_with_all = ["input", "generator"])]
    graph6: Option<String>,
}

impl Source {
    fn graph(&self) -> Result<Graph> {
        io::single_graph(self.generator.as_deref(), self.graph6.as_deref(), self.input.as_deref())
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    source: Source,
    /// Use the exhaustive oracles only.
    #[arg(long, conflicts_with_all = ["fast", "fast_only"])]
    oracle: bool,
    /// Prefer the polynomial routes; oracle-only fields still use the oracle.
    #[arg(long, conflicts_with = "fast_only")]
    fast: bool,
    /// Polynomial routes only; oracle-only fields are null.
    #[arg(long)]
    fast_only: bool,
    /// Include wall-clock timings (makes output nondeterministic).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct Selection {
    /// Check id or code (repeatable).
    #[arg(long = "theorem", value_name = "ID", required_unless_present = "all")]
    theorems: Vec<String>,
    /// Every registered check.
    #[arg(long, conflicts_with = "theorems")]
    all: bool,
}

impl Selection {
    fn checks(&self) -> Result<Vec<&'static Check>> {
        if self.all {
            return Ok(registry().iter().collect());
        }
        self.theorems
            .iter()
            .map(|name| {
                find(name).ok_or_else(|| {
                    let known: Vec<String> = registry().iter().map(|c| format!("{} ({})", c.code, c.id)).collect();
                    CliError::Usage(format!("unknown check {name:?}; valid checks: {}", known.join(", ")))
                })
            })
            .collect()
    }
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    selection: Selection,
    /// Include per-check wall-clock timings.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Corpus {
    /// Every labeled graph on N vertices (N <= 7).
    #[arg(long, value_name = "N")]
    exhaustive: Option<usize>,
    /// File of graph6 lines (`-` for standard input).
    #[arg(long, value_name = "FILE")]
    corpus: Option<PathBuf>,
    /// COUNT draws of G(N, P) from SEED.
    #[arg(long, num_args = 4, value_names = ["N", "P", "COUNT", "SEED"])]
    random: Option<Vec<String>>,
}

struct RandomSpec {
    n: usize,
    p: f64,
    count: usize,
    seed: u64,
}

fn random_spec(values: &[String]) -> Result<RandomSpec> {
    let bad = |what: &str, v: &str| CliError::Usage(format!("--random: cannot parse {what} from {v:?}"));
    Ok(RandomSpec {
        n: values[0].parse().map_err(|_| bad("N", &values[0]))?,
        p: values[1].parse().map_err(|_| bad("P", &values[1]))?,
        count: values[2].parse().map_err(|_| bad("COUNT", &values[2]))?,
        seed: values[3].parse().map_err(|_| bad("SEED", &values[3]))?,
    })
}

impl Corpus {
    fn graphs(&self) -> Result<Box<dyn Iterator<Item = Graph>>> {
        if let Some(n) = self.exhaustive {
            return Ok(Box::new(labeled_graphs(n)?));
        }
        if let Some(values) = &self.random {
            let r = random_spec(values)?;
            return Ok(Box::new(gnp_corpus(r.n, r.p, r.count, r.seed)?));
        }
        let text = io::read_text(self.corpus.as_deref())?;
        Ok(Box::new(io::parse_graphs(&text)?.into_iter()))
    }
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    corpus: Corpus,
    #[command(flatten)]
    selection: Selection,
    /// Worker threads (default: available cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Print a JSON summary with per-check counts instead of the summary line.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GenerateSource {
    /// Named generator (see `analyze --help`).
    #[arg(long = "gen", value_name = "SPEC")]
    generator: Option<String>,
    /// COUNT draws of G(N, P) from SEED.
    #[arg(long, num_args = 4, value_names = ["N", "P", "COUNT", "SEED"])]
    random: Option<Vec<String>>,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    source: GenerateSource,
    /// Output file (default: standard output).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn caps() -> Result<Caps> {
    match std::env::var(ORACLE_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Caps::with_oracle)
            .map_err(|_| CliError::Usage(format!("{ORACLE_CAP_VAR} must be a vertex count, got {v:?}"))),
        Err(_) => Ok(Caps::default()),
    }
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Inconsistent(e.to_string()))?;
    println!("{text}");
    Ok(())
}

/// Returns whether every evaluated statement held.
fn run(cli: Cli) -> Result<bool> {
    let caps = caps()?;
    match cli.command {
        Command::Analyze(args) => {
            let tiers = if args.oracle {
                Tiers::Oracle
            } else if args.fast_only {
                Tiers::FastOnly
            } else if args.fast {
                Tiers::Fast
            } else {
                Tiers::Both
            };
            let report = report::analyze(&args.source.graph()?, &caps, tiers, args.timings)?;
            print_json(&report)?;
            Ok(true)
        }
        Command::Check(args) => {
            let checks = args.selection.checks()?;
            let g = args.source.graph()?;
            let out = report::check(&g, &caps, &checks, args.timings)?;
            print_json(&out)?;
            Ok(out["failures"] == 0)
        }
        Command::Scan(args) => {
            let checks = args.selection.checks()?;
            let corpus = args.corpus.graphs()?;
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(jobs) = args.jobs {
                pool = pool.num_threads(jobs.max(1));
            }
            let pool = pool.build().map_err(|e| CliError::Usage(e.to_string()))?;
            let stdout = std::io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            let summary = scan::scan(corpus, &checks, &caps, &pool, &mut out)?;
            if args.json {
                writeln!(out, "{}", summary.json(&checks))?;
            } else {
                writeln!(out, "{}", summary.line())?;
            }
            out.flush()?;
            Ok(summary.failures == 0)
        }
        Command::Generate(args) => {
            let graphs: Box<dyn Iterator<Item = Graph>> = match (&args.source.generator, &args.source.random) {
                (Some(spec), _) => Box::new(std::iter::once(io::parse_gen(spec)?)),
                (_, Some(values)) => {
                    let r = random_spec(values)?;
                    Box::new(gnp_corpus(r.n, r.p, r.count, r.seed)?)
                }
                _ => unreachable!("clap requires one source"),
            };
            let mut out: Box<dyn Write> = match &args.out {
                Some(path) => Box::new(BufWriter::new(File::create(path)?)),
                None => Box::new(BufWriter::new(std::io::stdout().lock())),
            };
            for g in graphs {
                writeln!(out, "{}", graph6::encode(&g))?;
            }
            out.flush()?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
