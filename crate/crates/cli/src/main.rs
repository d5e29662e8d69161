use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use dccodes::search::{OracleMode, OutputFormat};
use dccodes::SearchKind;
use dccodes_cli::config::{self, FileConfig, SearchFlags, WORKERS_ENV};
use dccodes_cli::{CmdResult, Failure};

#[derive(Parser)]
#[command(
    name = "dccodes",
    version,
    about = "Search and verify binary double-circulant codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustive search over generator polynomials, one report per class.
    Search(SearchArgs),
    /// Reproduce the reference tables of extremal self-dual codes.
    Tables {
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, default_value = "always")]
        oracle: OracleMode,
    },
    /// Full metrics of one code as JSON.
    Verify {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        f: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1), requires = "bordered")]
        alpha: Option<u8>,
        #[arg(long)]
        bordered: bool,
    },
    /// Number of orthogonal m x m circulant matrices.
    CountOrthogonal {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        explain: bool,
    },
    #[command(subcommand)]
    Dc(DcCommand),
    #[command(subcommand)]
    Bordered(BorderedCommand),
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    kind: Option<SearchKind>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    m_max: Option<usize>,
    /// Only consider these generator weights (comma separated).
    #[arg(long, value_delimiter = ',')]
    weight: Option<Vec<usize>>,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    format: Option<OutputFormat>,
    #[arg(long)]
    oracle: Option<OracleMode>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// TOML file with defaults for any of the flags above.
    #[arg(long)]
    config: Option<PathBuf>,
}

/// Double-circulant codes.
#[derive(Subcommand)]
enum DcCommand {
    Classify {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        f: String,
    },
    Canonical {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        f: String,
    },
}

/// Bordered double-circulant codes.
#[derive(Subcommand)]
enum BorderedCommand {
    Classify {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        f: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1), default_value_t = 0)]
        alpha: u8,
    },
    /// Complement a self-dual generator into a self-dual bordered code.
    Lift {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        f: String,
    },
}

fn usage(e: anyhow::Error) -> Failure {
    Failure::Usage(format!("{e:#}"))
}

fn env_workers() -> Result<Option<usize>, Failure> {
    let raw = std::env::var(WORKERS_ENV).ok();
    Ok(config::parse_workers_env(raw.as_deref())?)
}

fn search(args: SearchArgs) -> CmdResult {
    let file = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(usage)?;
            config::parse_config(&text)?
        }
        None => FileConfig::default(),
    };
    let flags = SearchFlags {
        kind: args.kind,
        m: args.m,
        m_max: args.m_max,
        weights: args.weight,
        workers: args.workers,
        format: args.format,
        oracle: args.oracle,
    };
    let (cfg, format) = config::resolve(&flags, &file, env_workers()?)?;
    let mut out = dccodes_cli::run_search(&cfg, format)?;
    if let Some(path) = args.out {
        fs::write(&path, &out.stdout)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(usage)?;
        out.stdout.clear();
    }
    Ok(out)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Search(args) => search(args),
        Command::Tables { workers, oracle } => {
            let workers = match workers {
                Some(w) => w,
                None => env_workers()?.unwrap_or(1),
            };
            dccodes_cli::run_tables(workers, oracle)
        }
        Command::Verify {
            m,
            f,
            alpha,
            bordered,
        } => dccodes_cli::run_verify(m, &f, bordered, alpha == Some(1)),
        Command::CountOrthogonal { m, explain } => dccodes_cli::run_count_orthogonal(m, explain),
        Command::Dc(DcCommand::Classify { m, f }) => dccodes_cli::run_dc_classify(m, &f),
        Command::Dc(DcCommand::Canonical { m, f }) => dccodes_cli::run_dc_canonical(m, &f),
        Command::Bordered(BorderedCommand::Classify { m, f, alpha }) => {
            dccodes_cli::run_bordered_classify(m, &f, alpha == 1)
        }
        Command::Bordered(BorderedCommand::Lift { m, f }) => dccodes_cli::run_bordered_lift(m, &f),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on its own for malformed arguments
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(&out.stdout)
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::from(out.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
