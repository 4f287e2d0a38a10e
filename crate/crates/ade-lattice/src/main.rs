//! Thin argument-parsing shell; all the work lives in [`ade_lattice::cli`].

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ade_lattice::cli::{
    cmd_classify, cmd_construct, cmd_selftest, cmd_table2, cmd_theorem, OutputFormat,
};

#[derive(Parser)]
#[command(
    name = "ade-lattice",
    version,
    about = "Exact root-system classification for integral quadratic lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the root system of a lattice read from a JSON file
    /// ({"rank": n, "gram": [[..], ..], "label": "..."}).
    Classify {
        /// Path to the lattice JSON file.
        #[arg(long)]
        gram: PathBuf,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Build a construction from a family name plus key=value parameters,
    /// classify its vanishing lattice, and compare with the expected
    /// outcome (a mismatch exits 1).
    Construct {
        /// Family name: scroll, ordinary-quadric-pencil,
        /// extraordinary-quadric-pencil, veronese-pencil, del-pezzo,
        /// del-pezzo-prime, quadric, veronese-quadric, blowup, or a named
        /// entry v3..v8, v6'.
        #[arg(long)]
        family: String,
        /// Family parameter as key=value (repeatable), e.g. --param r=5,
        /// --param base=v4 --param k=1.
        #[arg(long = "param")]
        param: Vec<String>,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Classify the seven del Pezzo rows (V3..V8 and V6') and check each
    /// against its expected root system (any mismatch exits 1).
    Table2 {
        /// Restrict to one row, e.g. --only V5 or --only V6'.
        #[arg(long)]
        only: Option<String>,
        /// Emit the reports as a JSON array instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Filter a catalog of constructions down to those whose vanishing
    /// lattice is a single spanning A1 and group the survivors by variety;
    /// exits 1 unless exactly the four expected varieties appear.
    Theorem {
        /// JSON catalog file ([{"family": ..., "params": {...}}, ...]);
        /// defaults to the built-in catalog.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Emit the document as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run the seeded randomized self-checks (any failure exits 1).
    Selftest {
        /// Seed for the deterministic random stream.
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify { gram, json } => cmd_classify(gram, OutputFormat::from_json_flag(*json)),
        Command::Construct {
            family,
            param,
            json,
        } => cmd_construct(family, param, OutputFormat::from_json_flag(*json)),
        Command::Table2 { only, json } => {
            cmd_table2(only.as_deref(), OutputFormat::from_json_flag(*json))
        }
        Command::Theorem { catalog, json } => {
            cmd_theorem(catalog.as_deref(), OutputFormat::from_json_flag(*json))
        }
        Command::Selftest { seed, json } => {
            cmd_selftest(*seed, OutputFormat::from_json_flag(*json))
        }
    };
    match result {
        Ok(output) => {
            print!("{}", output.text);
            if output.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error.exit_code())
        }
    }
}
