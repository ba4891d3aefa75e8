mod commands;
mod config;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rank2_crystal::Error;

use crate::commands::{DirectionArg, SeedChoice, Status};
use crate::config::{Overrides, RunConfig};

/// Bad flags, config lines or missing inputs; exit code 64.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// Exact crystal computations for rank-2 Cartan data [[2, -c1], [-c2, 2]].
///
/// Exit codes: 0 success, 1 negative answer or failed check, 2 precondition violated,
/// 3 budget exhausted, 64 usage error.
#[derive(Debug, Parser)]
#[command(name = "rank2", version)]
struct Cli {
    #[command(flatten)]
    overrides: Overrides,
    /// Flat key=value file with the same keys as the flags; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Regime of the weight and the ratios bracketing l1/(-l2).
    Classify,
    /// Highest weight vector of the component of the zero vector.
    Hwv,
    /// Lowest weight vector of the component of the zero vector.
    Lwv,
    /// Crystal graph around a seed, as DOT (text, dot) or JSON.
    Graph {
        /// Start vector; defaults to the highest vector, else the lowest, else zero.
        #[arg(long, value_enum)]
        seed: Option<SeedChoice>,
        /// Operators to follow; defaults to lowering from a highest seed, raising from a
        /// lowest seed and both from the zero vector.
        #[arg(long, value_enum)]
        direction: Option<DirectionArg>,
    },
    /// Inequality families: `closure`, `displayed`, `component` or regime family 1-4.
    Xi {
        #[arg(long, default_value = "closure")]
        family: String,
        /// Regime parameter; inferred from the weight when omitted.
        #[arg(long)]
        k: Option<usize>,
        /// Print the closed-form table rows of a regime family instead of its closure.
        #[arg(long)]
        table: bool,
        #[arg(long, default_value_t = 4)]
        j_max: usize,
        #[arg(long, default_value_t = 8)]
        i_max: usize,
    },
    /// Whether a vector (JSON as printed by `hwv --format json`) satisfies the family
    /// of its weight; prints the first violated form otherwise.
    Member {
        #[arg(long)]
        vector: PathBuf,
    },
    /// Run property suites: sequences, crystal, polyhedral, extremal, appendix or all.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Random vectors for the crystal axioms.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Usage>().is_some() {
        return 64;
    }
    match err.downcast_ref::<Error>() {
        Some(
            Error::StepLimit(_)
            | Error::NodeBudgetExceeded(_)
            | Error::FormBudgetExceeded(_)
            | Error::BudgetExceeded(_)
            | Error::ScanOverflow(_),
        ) => 3,
        _ => 2,
    }
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &cli.config {
        cfg = Overrides::from_file(path)?.apply(cfg);
    }
    let cfg = cli.overrides.apply(cfg);
    if let Some(n) = cfg.threads {
        if n == 0 {
            return Err(Usage("--threads must be positive".into()).into());
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Classify => commands::classify(&cfg, &mut out),
        Command::Hwv => commands::extremal(&cfg, true, &mut out),
        Command::Lwv => commands::extremal(&cfg, false, &mut out),
        Command::Graph { seed, direction } => commands::graph(&cfg, seed, direction, &mut out),
        Command::Xi {
            family,
            k,
            table,
            j_max,
            i_max,
        } => commands::xi(&cfg, &family, k, table, (j_max, i_max), &mut out),
        Command::Member { vector } => commands::member(&cfg, &vector, &mut out),
        Command::Verify {
            suite,
            samples,
            seed,
        } => commands::verify(&cfg, &suite, samples, seed, &mut out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(64),
            };
        }
    };
    match run(cli) {
        Ok(Status::Done) => ExitCode::SUCCESS,
        Ok(Status::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
