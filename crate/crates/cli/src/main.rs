use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use lpcert_cli::commands::{self, PolySource, SearchArgs};

/// Exact linear-programming bounds for spherical codes and designs.
#[derive(Parser)]
#[command(name = "lpcert", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a certificate file and print its exact bound.
    Verify {
        path: PathBuf,
        /// Also analyze a code of this size meeting the bound.
        #[arg(long)]
        achieved: Option<String>,
    },
    /// Solve the moment equations for a distance distribution.
    Distribution {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        tau: u32,
        /// Comma-separated inner products other than 1.
        #[arg(long, allow_hyphen_values = true)]
        values: String,
        #[arg(long)]
        cardinality: String,
        #[arg(long)]
        antipodal: bool,
    },
    /// Search for a certificate with a floating-point LP, then rationalize.
    Search(SearchCli),
    /// Analyze an explicit code file.
    Analyze {
        path: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_moment: usize,
    },
    /// Print the Gegenbauer expansion of a polynomial.
    Expand {
        #[arg(long)]
        dim: Option<u32>,
        /// Ascending coefficients, e.g. `0, 1, 1`.
        #[arg(long, allow_hyphen_values = true, group = "source")]
        coefficients: Option<String>,
        /// Factors such as `(1, 1; 2) (0, 1; 1)`.
        #[arg(long, allow_hyphen_values = true, group = "source")]
        factors: Option<String>,
        #[arg(long, group = "source")]
        cert: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SearchCli {
    #[arg(long)]
    dim: u32,
    #[arg(long)]
    degree: usize,
    #[arg(long)]
    mode: String,
    #[arg(long)]
    tau: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    allowed: String,
    /// Chebyshev nodes per allowed interval.
    #[arg(long)]
    nodes: Option<usize>,
    #[arg(long)]
    rounds: Option<usize>,
    #[arg(long, default_value_t = lpcert::search::DEFAULT_DENOMINATOR_BOUND)]
    denom_bound: u64,
    /// Write the verified certificate here.
    #[arg(long)]
    emit: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify { path, achieved } => commands::cmd_verify(&path, achieved.as_deref()),
        Command::Distribution {
            dim,
            tau,
            values,
            cardinality,
            antipodal,
        } => commands::cmd_distribution(dim, tau, &values, &cardinality, antipodal),
        Command::Search(s) => commands::cmd_search(&SearchArgs {
            dimension: s.dim,
            degree: s.degree,
            mode: s.mode,
            tau: s.tau,
            allowed: s.allowed,
            nodes: s.nodes,
            rounds: s.rounds,
            denominator_bound: s.denom_bound,
            emit: s.emit,
        }),
        Command::Analyze { path, max_moment } => commands::cmd_analyze(&path, max_moment),
        Command::Expand {
            dim,
            coefficients,
            factors,
            cert,
        } => {
            let source = match (&coefficients, &factors, &cert) {
                (Some(c), _, _) => PolySource::Coefficients(c),
                (_, Some(f), _) => PolySource::Factors(f),
                (_, _, Some(p)) => PolySource::Certificate(p),
                _ => {
                    eprintln!("error: give --coefficients, --factors or --cert");
                    std::process::exit(lpcert_cli::EXIT_USAGE);
                }
            };
            commands::cmd_expand(dim, source)
        }
    };
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(outcome.code);
}
