use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use eqcol::{solve, ColorOrder, Pruning, SolverConfig, Strategy};

use eqcol_cli::bench::{self, Instance};
use eqcol_cli::instance::{InstanceSource, RandomSpec};
use eqcol_cli::suite::{parse_configs, parse_suite};
use eqcol_cli::{exit_code, summary, CliError};

/// Exact equitable graph coloring.
#[derive(Parser)]
#[command(name = "eqcol", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance.
    Solve(SolveArgs),
    /// Run a benchmark suite and write per-run CSV rows.
    Bench(BenchArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// DIMACS .col file.
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    dimacs: Option<PathBuf>,
    /// Random instance, `n=<n>,d=<density>,seed=<s>`.
    #[arg(long)]
    random: Option<String>,
    #[arg(long, default_value = "pass")]
    strategy: Strategy,
    #[arg(long, default_value = "size")]
    order: ColorOrder,
    #[arg(long, default_value = "equity")]
    pruning: Pruning,
    /// Seconds.
    #[arg(long, default_value_t = 7200.0)]
    time_limit: f64,
    #[arg(long)]
    node_limit: Option<u64>,
    /// Print the coloring (`s <k>` then `<vertex> <color>` lines).
    #[arg(long)]
    print_coloring: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Suite file: `random n d count seed_base` or `file <path>` per line.
    #[arg(long)]
    suite: PathBuf,
    /// Comma-separated configs, e.g. `eqds1,eqds2` or `pass/size/equity`.
    #[arg(long, default_value = "eqds1,eqds2")]
    configs: String,
    /// Per-run CSV output; `-` for stdout.
    #[arg(long, default_value = "-")]
    out: String,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
    /// Per-run time limit in seconds.
    #[arg(long, default_value_t = 7200.0)]
    time_limit: f64,
}

fn time_limit(secs: f64) -> Result<Duration, CliError> {
    if secs.is_finite() && secs > 0.0 {
        Ok(Duration::from_secs_f64(secs))
    } else {
        Err(CliError::BadArgument(format!("time limit must be positive, got {secs}")))
    }
}

fn run_solve(args: SolveArgs) -> Result<i32, CliError> {
    let source = match (&args.dimacs, &args.random) {
        (Some(path), _) => InstanceSource::File(path.clone()),
        (None, Some(spec)) => InstanceSource::Random(spec.parse::<RandomSpec>()?),
        (None, None) => return Err(CliError::BadArgument("one of --dimacs or --random is required".into())),
    };
    let mut config = SolverConfig::new(args.strategy, args.order, args.pruning).with_time_limit(time_limit(args.time_limit)?);
    config.node_limit = args.node_limit;
    let g = source.load()?;
    let result = solve(&g, &config);
    let mut stdout = io::stdout().lock();
    let _ = write!(stdout, "{}", summary(&source.name(), g.n(), g.m(), &config.label(), &result));
    if args.print_coloring {
        let _ = write!(stdout, "{}", result.incumbent.to_solution_text());
    }
    Ok(exit_code(result.status))
}

fn run_bench(args: BenchArgs) -> Result<i32, CliError> {
    let text = std::fs::read_to_string(&args.suite).map_err(|e| CliError::Io(args.suite.clone(), e))?;
    let base = args.suite.parent().unwrap_or(Path::new("."));
    let groups = parse_suite(&text, base)?;
    let configs = parse_configs(&args.configs)?;
    let limit = time_limit(args.time_limit)?;
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let instances: Vec<Instance> = bench::load_suite(&groups)?;
    let rows = bench::run(&instances, &configs, limit, jobs);
    if args.out == "-" {
        bench::write_rows(io::stdout().lock(), &rows)?;
    } else {
        let path = PathBuf::from(&args.out);
        let file = File::create(&path).map_err(|e| CliError::Io(path.clone(), e))?;
        bench::write_rows(file, &rows)?;
    }
    eprint!("{}", bench::format_aggregate(&bench::aggregate(&rows)));
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => run_solve(args),
        Command::Bench(args) => run_bench(args),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
