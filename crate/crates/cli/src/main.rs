use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use kt_minor::bench::bench_run;
use kt_minor::gen::{gen_planted, gen_random};
use kt_minor::io::{
    parse_edge_list, parse_g_table, parse_model, serialize_edge_list, serialize_model, serialize_trace, ParseError,
};
use kt_minor::minor_oracle::partition_oracle_model;
use kt_minor::numeric::parse_rational;
use kt_minor::{find_minor, verify_model, Config, GFunction, Graph, GraphError, MinorError, OracleError, Rational};

/// Find, check and benchmark complete graph minors.
#[derive(Parser)]
#[command(name = "ktminor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a K_t minor in a graph whose average degree is at least (2+ε)·g(t).
    Find(FindArgs),
    /// Check a model file against a graph.
    Verify {
        #[arg(long)]
        t: usize,
        graph: PathBuf,
        model: PathBuf,
    },
    /// Decide K_t-minor containment by brute force (at most 10 vertices).
    Oracle {
        #[arg(long)]
        t: usize,
        graph: PathBuf,
    },
    /// Write a seeded random graph as an edge list.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run the search on random graphs of increasing size and report work done.
    Bench {
        #[arg(long)]
        t: usize,
        #[arg(long, value_parser = rational)]
        epsilon: Rational,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Args)]
struct FindArgs {
    #[arg(long)]
    t: usize,
    /// Slack above the density threshold, as an integer, decimal or p/q.
    #[arg(long, value_parser = rational)]
    epsilon: Rational,
    /// File of "t value" lines overriding the default g(t).
    #[arg(long)]
    g_table: Option<PathBuf>,
    /// Refuse to run unless g(t) >= max(t, 2t/ε).
    #[arg(long)]
    strict: bool,
    /// Write the mutation trace to this file.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Print operation and round counts to standard error.
    #[arg(long)]
    ops: bool,
    graph: PathBuf,
}

#[derive(Subcommand)]
enum GenKind {
    /// Uniform graph with exactly m edges.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Graph with a planted K_t minor plus noise edges.
    Planted {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        noise: usize,
        #[arg(long)]
        seed: u64,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("expected an integer, decimal or p/q, found {s:?}"))
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Minor(#[from] MinorError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

impl CliError {
    /// 1 when the search ran and came back empty-handed, 2 for anything
    /// wrong with the input or the configuration.
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Minor(MinorError::NotFound(_) | MinorError::InternalInvariantViolation(_)) => 1,
            _ => 2,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let (g, stats) =
        parse_edge_list(&read(path)?).map_err(|source| CliError::Parse { path: path.to_owned(), source })?;
    if stats.duplicates > 0 {
        eprintln!("warning: {}: dropped {} duplicate edges", path.display(), stats.duplicates);
    }
    if stats.self_loops > 0 {
        eprintln!("warning: {}: dropped {} self-loops", path.display(), stats.self_loops);
    }
    Ok(g)
}

fn find(args: FindArgs) -> Result<u8, CliError> {
    let g = load_graph(&args.graph)?;
    let mut cfg = Config::new(args.t, args.epsilon);
    cfg.strict = args.strict;
    cfg.trace = args.trace.is_some();
    if let Some(path) = &args.g_table {
        let table = parse_g_table(&read(path)?).map_err(|source| CliError::Parse { path: path.clone(), source })?;
        cfg.g = GFunction::default().with_table(table)?;
    }
    let out = find_minor(&g, &cfg)?;
    for w in &out.warnings {
        eprintln!("warning: {w}");
    }
    if let Some(path) = &args.trace {
        write(path, &serialize_trace(&out.trace))?;
    }
    if args.ops {
        let steps: Vec<String> = out.stats.rounds.iter().map(|r| r.step.to_string()).collect();
        eprintln!("ops={} rounds={} steps={}", out.stats.ops, out.stats.rounds.len(), steps.join(","));
    }
    print!("{}", serialize_model(&out.model));
    Ok(0)
}

fn verify(t: usize, graph: &Path, model: &Path) -> Result<u8, CliError> {
    let g = load_graph(graph)?;
    let model = parse_model(&read(model)?).map_err(|source| CliError::Parse { path: model.to_owned(), source })?;
    let verdict = verify_model(&g, &model, t)?;
    if verdict.is_valid() {
        println!("valid");
        return Ok(0);
    }
    println!("invalid");
    for v in verdict.violations() {
        println!("  {v}");
    }
    Ok(1)
}

fn oracle(t: usize, graph: &Path) -> Result<u8, CliError> {
    let g = load_graph(graph)?;
    match partition_oracle_model(&g, t)? {
        Some(model) => {
            println!("# K_{t} minor found");
            print!("{}", serialize_model(&model));
            Ok(0)
        }
        None => {
            println!("# no K_{t} minor");
            Ok(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Find(args) => find(args),
        Command::Verify { t, graph, model } => verify(t, &graph, &model),
        Command::Oracle { t, graph } => oracle(t, &graph),
        Command::Gen { kind } => {
            let g = match kind {
                GenKind::Random { n, m, seed } => gen_random(n, m, seed)?,
                GenKind::Planted { n, t, noise, seed } => gen_planted(n, t, noise, seed)?.0,
            };
            print!("{}", serialize_edge_list(&g));
            Ok(0)
        }
        Command::Bench { t, epsilon, sizes, seed } => {
            let cfg = Config::new(t, epsilon);
            cfg.validate()?;
            let report = bench_run(&sizes, &cfg, seed);
            print!("{report}");
            println!();
            print!("{}", report.machine_lines());
            Ok(if report.rows.iter().all(|r| r.found) { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
