// SPDX-License-Identifier: Apache-2.0

//! `centrality`: closeness centrality for weighted edge lists. Subcommands
//! compute exact values, estimate them from seeded random samples, audit the
//! estimator's error bound, time exact against sampled runs, generate
//! benchmark graphs, and size samples for an accuracy target.

mod output;

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use centrality_core::{
    bench_graph, default_delta_vertex, estimate_centrality, estimate_with_plan,
    estimate_with_sources, exact_analysis, generate, load_edge_list, run_audit, sample_size,
    AuditOptions, BenchRecord, CentralityReport, Error, GeneratorSpec, Graph, SampleTrace,
    DEFAULT_AUDIT_CAP,
};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use output::{Format, ReportMeta};

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_AUDIT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "centrality",
    version,
    about = "Closeness centrality for weighted graphs: exact, sampled, audited",
    after_help = "Exit codes: 0 success, 1 usage error, 2 input error, \
                  3 failed precondition (e.g. disconnected graph), 4 audit bound failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact closeness centrality for every vertex
    Exact(ExactArgs),
    /// Sampled closeness centrality from seeded random sources
    Approx(ApproxArgs),
    /// Audit the sampling error bound over repeated trials
    Audit(AuditArgs),
    /// Time exact versus sampled runs on generated graphs
    Bench(BenchArgs),
    /// Generate a graph and print its edge list
    Gen(GenArgs),
    /// Print the sample count needed for an accuracy target
    SampleSize(SampleSizeArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Edge-list file with `u v [w]` per line; `-` reads standard input
    file: PathBuf,
    /// Treat edges as directed
    #[arg(long)]
    directed: bool,
}

#[derive(Args)]
struct FormatArg {
    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct ExactArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct ApproxArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Reciprocal-scale error target, as a fraction of the diameter
    #[arg(long)]
    epsilon: Option<f64>,
    /// Per-vertex failure probability; defaults to 1/n^2 (needs --epsilon)
    #[arg(long)]
    delta: Option<f64>,
    /// Explicit sample count, bypassing the accuracy plan
    #[arg(long)]
    k: Option<usize>,
    /// Seed for source draws
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated source vertices, bypassing random draws
    #[arg(long, hide = true, value_delimiter = ',')]
    sources: Option<Vec<usize>>,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("graph").required(true).args(["file", "spec"]))]
struct AuditArgs {
    /// Edge-list file to audit (alternative to --spec)
    file: Option<PathBuf>,
    /// Treat edges as directed
    #[arg(long)]
    directed: bool,
    /// Generator spec to audit, e.g. ws:500,6,0.1
    #[arg(long)]
    spec: Option<String>,
    /// Reciprocal-scale error target, as a fraction of the diameter
    #[arg(long)]
    epsilon: f64,
    /// Per-vertex failure probability; defaults to 1/n^2
    #[arg(long)]
    delta: Option<f64>,
    /// Number of estimation runs to audit
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Base seed; trial seeds derive from it, and --spec generation uses it
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sample count override for deliberately undersized runs
    #[arg(long)]
    k: Option<usize>,
    /// Largest vertex count to audit (each trial costs k shortest-path runs)
    #[arg(long, default_value_t = DEFAULT_AUDIT_CAP)]
    cap: usize,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct BenchArgs {
    /// Generator spec to benchmark; repeat the flag for a series
    #[arg(long = "spec", required = true)]
    specs: Vec<String>,
    /// Reciprocal-scale error target for the sampling plan
    #[arg(long)]
    epsilon: f64,
    /// Per-vertex failure probability; defaults to 1/n^2
    #[arg(long)]
    delta: Option<f64>,
    /// Seed for generation and estimation
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct GenArgs {
    /// Generator spec, e.g. ws:500,6,0.1 or er:1000,0.01@uniform:0.5,1.5
    spec: String,
    /// Seed for random families and random weights
    #[arg(long)]
    seed: Option<u64>,
    /// Write the edge list here instead of standard output
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SampleSizeArgs {
    /// Vertex count of the target graph
    #[arg(long)]
    n: usize,
    /// Reciprocal-scale error target, as a fraction of the diameter
    #[arg(long)]
    epsilon: f64,
    /// Per-vertex failure probability; defaults to 1/n^2
    #[arg(long)]
    delta: Option<f64>,
    #[command(flatten)]
    format: FormatArg,
}

/// A failed run: what to print and which exit code to use.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse { .. } | Error::InvalidWeight(_) | Error::Io(_) => EXIT_INPUT,
            Error::UnsatisfiableSpec(_) => EXIT_INPUT,
            Error::Disconnected { .. } | Error::GraphTooSmall { .. } => EXIT_PRECONDITION,
            Error::VertexOutOfRange { .. } | Error::InvalidParameter(_) => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("centrality: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Exact(args) => cmd_exact(args),
        Command::Approx(args) => cmd_approx(args),
        Command::Audit(args) => cmd_audit(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Gen(args) => cmd_gen(args),
        Command::SampleSize(args) => cmd_sample_size(args),
    }
}

fn load_graph(path: &Path, directed: bool) -> Result<Graph, Failure> {
    let (graph, report) = if path.as_os_str() == "-" {
        load_edge_list(io::stdin().lock(), directed)?
    } else {
        let file = File::open(path).map_err(|e| Failure {
            code: EXIT_INPUT,
            message: format!("{}: {e}", path.display()),
        })?;
        load_edge_list(BufReader::new(file), directed)?
    };
    if report.self_loops_dropped > 0 {
        eprintln!("note: dropped {} self-loop(s)", report.self_loops_dropped);
    }
    if report.duplicates_collapsed > 0 {
        eprintln!(
            "note: collapsed {} duplicate edge(s) to the minimum weight",
            report.duplicates_collapsed
        );
    }
    Ok(graph)
}

fn cmd_exact(args: ExactArgs) -> Result<u8, Failure> {
    let graph = load_graph(&args.input.file, args.input.directed)?;
    let analysis = exact_analysis(&graph)?;
    let meta = ReportMeta::exact(graph.n(), graph.edge_count());
    print!(
        "{}",
        output::render_report(&meta, &analysis.centrality.ranked_rows(), args.format.format)
    );
    Ok(0)
}

fn cmd_approx(args: ApproxArgs) -> Result<u8, Failure> {
    let modes =
        [args.epsilon.is_some(), args.k.is_some(), args.sources.is_some()];
    if modes.iter().filter(|&&m| m).count() != 1 {
        return Err(Failure::usage(
            "pick exactly one sampling mode: --epsilon [--delta], --k, or --sources",
        ));
    }
    if args.delta.is_some() && args.epsilon.is_none() {
        return Err(Failure::usage("--delta only makes sense together with --epsilon"));
    }

    let graph = load_graph(&args.input.file, args.input.directed)?;
    let n = graph.n();
    let m = graph.edge_count();

    let (report, meta, trace): (CentralityReport, ReportMeta, SampleTrace);
    if let Some(sources) = &args.sources {
        let (r, t) = estimate_with_sources(&graph, sources)?;
        let mut meta0 = ReportMeta::sampled(n, m, sources.len());
        meta0.sources = Some(sources.clone());
        (report, meta, trace) = (r, meta0, t);
    } else if let Some(k) = args.k {
        let (r, t) = estimate_centrality(&graph, k, args.seed)?;
        let mut meta0 = ReportMeta::sampled(n, m, k);
        meta0.seed = Some(args.seed);
        (report, meta, trace) = (r, meta0, t);
    } else {
        let epsilon = args.epsilon.expect("mode check guarantees epsilon");
        let delta = args.delta.unwrap_or_else(|| default_delta_vertex(n));
        let (r, plan, t) = estimate_with_plan(&graph, epsilon, delta, args.seed)?;
        let mut meta0 = ReportMeta::sampled(n, m, plan.k);
        meta0.seed = Some(args.seed);
        meta0.epsilon = Some(plan.epsilon);
        meta0.delta_vertex = Some(plan.delta_vertex);
        meta0.delta_graph = Some(plan.delta_graph);
        (report, meta, trace) = (r, meta0, t);
    }

    let mut meta = meta;
    if !trace.degenerate.is_empty() {
        meta.degenerate = Some(trace.degenerate.clone());
    }
    print!(
        "{}",
        output::render_report(&meta, &report.ranked_rows(), args.format.format)
    );
    Ok(0)
}

fn cmd_audit(args: AuditArgs) -> Result<u8, Failure> {
    let graph = match (&args.file, &args.spec) {
        (Some(path), None) => load_graph(path, args.directed)?,
        (None, Some(spec_text)) => {
            let spec = GeneratorSpec::parse(spec_text)?.with_seed(args.seed);
            generate(&spec)?
        }
        _ => unreachable!("clap group enforces exactly one input"),
    };
    let options = AuditOptions {
        epsilon: args.epsilon,
        trials: args.trials,
        seed: args.seed,
        delta_vertex: args.delta,
        k_override: args.k,
        cap: args.cap,
    };
    let audit = run_audit(&graph, &options)?;
    print!("{}", output::render_audit(&audit, args.format.format));
    if audit.passed {
        Ok(0)
    } else {
        eprintln!(
            "centrality: audit failed: {} of {} trials exceeded the error budget \
             (threshold {:.3})",
            audit.violations,
            audit.trials.len(),
            audit.pass_threshold
        );
        Ok(EXIT_AUDIT)
    }
}

fn cmd_bench(args: BenchArgs) -> Result<u8, Failure> {
    let mut records: Vec<BenchRecord> = Vec::with_capacity(args.specs.len());
    for text in &args.specs {
        let spec = GeneratorSpec::parse(text)?.with_seed(args.seed);
        let graph = generate(&spec)?;
        let record = bench_graph(&spec.to_string(), &graph, args.epsilon, args.delta, args.seed)?;
        if record.k >= record.n {
            eprintln!(
                "warning: {}: planned k={} is not below n={}; the exact sweep is cheaper here",
                record.spec, record.k, record.n
            );
        }
        records.push(record);
    }
    print!(
        "{}",
        output::render_bench(&records, args.epsilon, args.delta, args.seed, args.format.format)
    );
    Ok(0)
}

fn cmd_gen(args: GenArgs) -> Result<u8, Failure> {
    let mut spec = GeneratorSpec::parse(&args.spec)?;
    if let Some(seed) = args.seed {
        spec = spec.with_seed(seed);
    }
    let graph = generate(&spec)?;
    match &args.output {
        Some(path) => {
            let mut file = File::create(path).map_err(|e| Failure {
                code: EXIT_INPUT,
                message: format!("{}: {e}", path.display()),
            })?;
            graph.write_edge_list(&mut file).map_err(|e| Failure {
                code: EXIT_INPUT,
                message: format!("{}: {e}", path.display()),
            })?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            graph.write_edge_list(&mut lock).map_err(|e| Failure {
                code: EXIT_INPUT,
                message: e.to_string(),
            })?;
            lock.flush().ok();
        }
    }
    Ok(0)
}

fn cmd_sample_size(args: SampleSizeArgs) -> Result<u8, Failure> {
    let delta = args.delta.unwrap_or_else(|| {
        if args.n >= 2 {
            default_delta_vertex(args.n)
        } else {
            0.5 // sample_size rejects n < 2 with its own message
        }
    });
    let plan = sample_size(args.n, args.epsilon, delta)?;
    print!("{}", output::render_plan(&plan, args.format.format));
    Ok(0)
}
