use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use msl::poles::{compute, pole_report, MethodChoice, PoleOptions};
use msl::random::{Filter, Shape};
use msl::{az_involution, Error, Multisegment, SampleConfig, DEFAULT_PRIME};

mod suites;
mod sweep;

#[derive(Parser)]
#[command(name = "msl", version, about = "Pole orders of intertwining operators from multisegments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one pole report as JSON.
    Compute(ComputeArgs),
    /// Run seeded property batteries.
    Check(CheckArgs),
    /// Random pairs to CSV.
    Sweep(SweepArgs),
    /// Print the Aubert-Zelevinsky dual.
    Az {
        #[arg(long, allow_hyphen_values = true)]
        m: String,
    },
}

#[derive(Args, Clone, Copy)]
struct Sampling {
    /// Prime modulus of the oracle field.
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Independent draws per generic quantity.
    #[arg(long, default_value_t = 8)]
    samples: usize,
    #[arg(long, env = "MSL_SEED", default_value_t = 0)]
    seed: u64,
    /// Evaluate on one thread.
    #[arg(long)]
    sequential: bool,
}

impl Sampling {
    fn config(&self) -> Result<SampleConfig, Error> {
        let cfg = SampleConfig {
            prime: self.prime,
            samples: self.samples,
            seed: self.seed,
            parallel: msl::par::available() && !self.sequential,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Speh,
    Matching,
    Oracle,
}

impl From<MethodArg> for MethodChoice {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => MethodChoice::Auto,
            MethodArg::Speh => MethodChoice::Speh,
            MethodArg::Matching => MethodChoice::Matching,
            MethodArg::Oracle => MethodChoice::Oracle,
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long, allow_hyphen_values = true)]
    m: String,
    #[arg(long, allow_hyphen_values = true)]
    n: String,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    /// Run every applicable backend and all cross-checks.
    #[arg(long)]
    check: bool,
    #[command(flatten)]
    sampling: Sampling,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Core,
    Az,
    Qrep,
    Oracle,
    Matching,
    Poles,
    Leclerc,
    All,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    /// Random cases per battery.
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 4)]
    max_segments: usize,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    lo: i32,
    #[arg(long, default_value_t = 6, allow_hyphen_values = true)]
    hi: i32,
    #[command(flatten)]
    sampling: Sampling,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 4)]
    max_segments: usize,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    lo: i32,
    #[arg(long, default_value_t = 6, allow_hyphen_values = true)]
    hi: i32,
    /// Comma-separated subset of ladder, speh, regular, balanced.
    #[arg(long, value_delimiter = ',')]
    filter: Vec<Filter>,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    sampling: Sampling,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::InvalidSegment { .. } | Error::Config(_) => 2,
        Error::Precondition(_) | Error::NotRegular(_) => 3,
        Error::Disagreement { .. } | Error::Battery(_) => 4,
    }
}

fn parse(label: &str, text: &str) -> Result<Multisegment, Error> {
    text.parse().map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse { pos, msg: format!("--{label}: {msg}") },
        other => other,
    })
}

enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Compute(args) => {
            let (m, n) = (parse("m", &args.m)?, parse("n", &args.n)?);
            let opts = PoleOptions { method: args.method.into(), check: args.check, cfg: args.sampling.config()? };
            let report = if args.check { compute(&m, &n, &opts)? } else { pole_report(&m, &n, &opts)? };
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            Ok(writeln!(out, "{json}")?)
        }
        Command::Check(args) => {
            let shape = Shape::new(args.max_segments, args.lo, args.hi)?;
            let cfg = args.sampling.config()?;
            if args.count == 0 {
                return Err(Error::Config("count must be at least 1".into()).into());
            }
            let summary = suites::run(args.suite, args.count, &shape, &cfg)?;
            summary.print(&mut out)?;
            if summary.passed() {
                Ok(())
            } else {
                Err(Error::Battery(summary.failed_names().join(", ")).into())
            }
        }
        Command::Sweep(args) => {
            let shape = Shape::new(args.max_segments, args.lo, args.hi)?;
            if args.count == 0 {
                return Err(Error::Config("count must be at least 1".into()).into());
            }
            let cfg = args.sampling.config()?;
            let rows = sweep::rows(args.count, &shape, &args.filter, &cfg)?;
            match args.output {
                Some(path) => {
                    let file = std::fs::File::create(&path)?;
                    Ok(sweep::write(file, &rows)?)
                }
                None => Ok(sweep::write(out, &rows)?),
            }
        }
        Command::Az { m } => {
            let m = parse("m", &m)?;
            Ok(writeln!(out, "{}", az_involution(&m))?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
