use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use zerodiv::export::ExportFormat;
use zerodiv::verify::Scope;
use zerodiv_cli::config::ConfigError;
use zerodiv_cli::{exit, execute, Command, GraphChoice, OutputFormat, RunConfig};

/// Zero-divisor graphs of 2x2 matrix rings over small finite fields.
#[derive(Parser)]
#[command(name = "zerodiv", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Args)]
struct Common {
    /// Field as `q` or `p^k[:modulus-hex]`.
    #[arg(long)]
    field: String,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest matrix dimension handled exactly.
    #[arg(long, default_value_t = zerodiv::linalg::EXACT_CAP)]
    exact_cap: usize,
    /// Seed for the randomized suites and modular primes.
    #[arg(long, default_value_t = zerodiv::linalg::DEFAULT_SEED)]
    seed: u64,
    /// Shorthand for `--format json`.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Sub {
    /// List the equivalence classes of zero-divisors.
    Classify {
        #[command(flatten)]
        common: Common,
        /// text or json
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Exact adjacency spectrum of one graph.
    Spectrum {
        #[command(flatten)]
        common: Common,
        /// gamma, H, H-simple, H1, H2, H3 or H4
        #[arg(long)]
        graph: GraphChoice,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Run verification suites and report every claim.
    Verify {
        #[command(flatten)]
        common: Common,
        /// all, counts, regularity, relations, templates, spectra, join, corollary or bounds
        #[arg(long, default_value = "all")]
        scope: Scope,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Write a graph as DOT, an edge list or Matrix Market.
    Export {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        graph: GraphChoice,
        /// dot, edgelist or matrixmarket
        #[arg(long, default_value = "dot")]
        format: ExportFormat,
    },
}

fn config(cli: Cli) -> Result<RunConfig, ConfigError> {
    let (common, command, output) = match cli.command {
        Sub::Classify { common, format } => (common, Command::Classify, format),
        Sub::Spectrum { common, graph, format } => (common, Command::Spectrum { graph }, format),
        Sub::Verify { common, scope, format } => (common, Command::Verify { scope }, format),
        Sub::Export { common, graph, format } => (common, Command::Export { graph, format }, OutputFormat::Text),
    };
    let mut cfg = RunConfig::new(&common.field, command)?;
    cfg.output = if common.json { OutputFormat::Json } else { output };
    cfg.out = common.out;
    cfg.exact_cap = common.exact_cap;
    cfg.seed = common.seed;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match config(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit::BAD_FIELD);
        }
    };
    let outcome = execute(&cfg);
    // a closed stdout is not worth a panic
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code)
}
