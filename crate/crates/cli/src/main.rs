//! Batch front end for the Romanovski polynomial library: tabulation,
//! verification suites, bound-state solutions, and gap probabilities.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
//! 3 domain error.

mod gap_cmd;
mod output;
mod physics_cmd;
mod scalar;
mod table;
mod verify;

use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "romanovski",
    version,
    about = "Romanovski polynomials: exact tables, identity verification, bound states, gap probabilities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    Identities,
    Orthogonality,
    Jacobi,
    Physics,
    Rmt,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Emit {
    States,
    Overlaps,
    Plotdata,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Method {
    Nystrom,
    Mc,
}

/// Process outcome mapped to the documented exit codes.
pub enum ExitOutcome {
    Success,
    VerificationFailure,
    UsageError,
    DomainError,
}

impl ExitOutcome {
    fn code(self) -> ExitCode {
        match self {
            ExitOutcome::Success => ExitCode::from(0),
            ExitOutcome::VerificationFailure => ExitCode::from(1),
            ExitOutcome::UsageError => ExitCode::from(2),
            ExitOutcome::DomainError => ExitCode::from(3),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate coefficients of R_0 … R_max_n (exact when α, β are "num/den")
    Table {
        /// α, as "num/den", an integer, or a decimal
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// β, same syntax as α
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a verification suite and emit a JSON report
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Multiplies every nonzero tolerance
        #[arg(long = "tol-scale", default_value_t = 1.0)]
        tol_scale: f64,
    },
    /// Bound-state solutions and plot data
    Physics {
        #[command(subcommand)]
        problem: PhysicsCommand,
    },
    /// Gap probability E(0, (lo, hi)) of the Cauchy ensemble
    Gap {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        lo: f64,
        #[arg(long, allow_negative_numbers = true)]
        hi: f64,
        #[arg(long, value_enum, default_value_t = Method::Nystrom)]
        method: Method,
        /// Nyström quadrature order (nystrom method)
        #[arg(long, default_value_t = 24)]
        order: usize,
        /// Sample count (mc method)
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        /// RNG seed (mc method)
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum PhysicsCommand {
    /// Hyperbolic Scarf potential
    Scarf {
        #[arg(long = "A", allow_negative_numbers = true)]
        a: f64,
        #[arg(long = "B", allow_negative_numbers = true)]
        b: f64,
        /// Highest quantum number (default: all bound states, capped at 8)
        #[arg(long = "n-max")]
        n_max: Option<usize>,
        #[arg(long, value_enum)]
        emit: Emit,
    },
    /// Trigonometric Rosen-Morse potential
    Rosenmorse {
        #[arg(long, default_value_t = 50.0, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, default_value_t = 1)]
        l: u32,
        #[arg(long = "n-max", default_value_t = 4)]
        n_max: usize,
        #[arg(long, value_enum)]
        emit: Emit,
        /// Add the Coulomb-plus-linear comparison column to plotdata
        #[arg(long = "plot-compare", default_value_t = false)]
        plot_compare: bool,
    },
    /// Associated Legendre reconstruction
    Legendre {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_enum)]
        emit: Emit,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => outcome.code(),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitOutcome> {
    match cli.command {
        Command::Table {
            alpha,
            beta,
            max_n,
            format,
        } => {
            table::run(&alpha, &beta, max_n, format)?;
            Ok(ExitOutcome::Success)
        }
        Command::Verify { suite, tol_scale } => verify::run(suite, tol_scale),
        Command::Physics { problem } => match problem {
            PhysicsCommand::Scarf { a, b, n_max, emit } => physics_cmd::scarf(a, b, n_max, emit),
            PhysicsCommand::Rosenmorse {
                b,
                l,
                n_max,
                emit,
                plot_compare,
            } => physics_cmd::rosen_morse(b, l, n_max, emit, plot_compare),
            PhysicsCommand::Legendre { l, m, emit } => physics_cmd::legendre(l, m, emit),
        },
        Command::Gap {
            n,
            a,
            lo,
            hi,
            method,
            order,
            samples,
            seed,
        } => gap_cmd::run(n, a, lo, hi, method, order, samples, seed),
    }
}
