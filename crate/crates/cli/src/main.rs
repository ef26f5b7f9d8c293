//! Command-line front end for the `sphertrop` library.
//!
//! Exit codes: 0 success, 1 a domain-level failure (invalid fan, route
//! mismatch, inconsistent verdicts, unrenderable rank), 2 bad input.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "sphertrop",
    version,
    about = "Colored fans and extended tropicalizations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Embedding {
    /// Spherical datum JSON file.
    #[arg(long)]
    datum: PathBuf,
    /// Colored fan JSON file.
    #[arg(long)]
    fan: PathBuf,
}

#[derive(Args)]
struct Output {
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the colored fan axioms.
    Validate {
        #[command(flatten)]
        input: Embedding,
        #[command(flatten)]
        output: Output,
    },
    /// Extended tropicalization of an embedding.
    Trop {
        #[command(flatten)]
        input: Embedding,
        /// `facewise`, `grobner`, or `both` to compare the two.
        #[arg(long, default_value = "facewise")]
        mode: String,
        #[command(flatten)]
        output: Output,
    },
    /// The graded route with its per-cone stratum sets.
    Grtrop {
        #[command(flatten)]
        input: Embedding,
        #[command(flatten)]
        output: Output,
    },
    /// Compare two tropicalization JSON files stratum by stratum.
    Compare {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Tropical value, initial form or hypersurface of a polynomial.
    Poly {
        /// Polynomial text, or a file holding text or JSON.
        #[arg(long)]
        poly: String,
        /// `trop`, `init` or `hypersurface`.
        #[arg(long, default_value = "trop")]
        action: String,
        /// Weight such as `(-2, 0)`; `inf` marks an infinite entry.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Initial form method: `termwise` or `substitution`.
        #[arg(long, default_value = "termwise")]
        method: String,
        #[command(flatten)]
        output: Output,
    },
    /// Compare the two descriptions of the tropical hypersurface and check witnesses.
    Ftt {
        #[arg(long)]
        poly: String,
        /// Sample weights; repeatable. Defaults to a grid plus cell points.
        #[arg(long, allow_hyphen_values = true)]
        weight: Vec<String>,
        /// A torus point as comma-separated Puiseux scalars; repeatable.
        #[arg(long, allow_hyphen_values = true)]
        witness: Vec<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Write a built-in example: table1, table2, blowup-a4, p1xp1 or e3.
    Examples {
        name: String,
        /// Directory to write into.
        #[arg(long)]
        out: PathBuf,
    },
    /// Draw a rank ≤ 2 tropicalization.
    Render {
        /// Tropicalization JSON, as written by `trop`.
        trop: PathBuf,
        /// `svg`, `ascii` or `json`.
        #[arg(long, default_value = "svg")]
        format: String,
        /// Half-width of the drawn box.
        #[arg(long, default_value = "2")]
        extent: String,
        #[command(flatten)]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
