use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod output;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "nubrick", version, about = "nu-Tamari lattices, brick vectors and their bounded complexes")]
pub struct Cli {
    /// Output format on stdout.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Prepend N and append E to the path before use.
    #[arg(long, global = true)]
    normalize: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List all trees with their nodes and facet positions.
    Trees { path: String },
    /// Brick vectors of all trees and the Bruhat-cone generators.
    Brick { path: String },
    /// Hasse diagram of the rotation order.
    Lattice {
        path: String,
        /// Emit DOT, to stdout or to the given file.
        #[arg(long, num_args = 0..=1, default_missing_value = "-", value_name = "FILE")]
        dot: Option<String>,
    },
    /// Bounded faces, or the cone system of one marked tree.
    Faces {
        path: String,
        /// Tree id whose cone system to test.
        #[arg(long, value_name = "ID")]
        tree: Option<usize>,
        /// Marked node `x,y`; repeatable, requires --tree.
        #[arg(long = "mark", value_name = "X,Y", requires = "tree")]
        marks: Vec<String>,
    },
    /// Projected coordinates and realization files.
    Project {
        path: String,
        /// Write an OFF mesh of the two-dimensional faces.
        #[arg(long, value_name = "PATH")]
        off: Option<PathBuf>,
        /// Write the realization bundle as JSON.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Emit raw brick vectors when the path has no projection.
        #[arg(long)]
        unprojected: bool,
    },
    /// Run the invariant suite.
    Check {
        path: String,
        /// Largest admissible number of lattice points.
        #[arg(long, default_value_t = 12, value_name = "N")]
        max_size: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
