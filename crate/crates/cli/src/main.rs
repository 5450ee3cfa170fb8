mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// Exact graded-ideal computations and the verification suite.
#[derive(Debug, Parser)]
#[command(name = "lexpoint", version, about)]
pub struct Cli {
    /// Emit JSON on stdout instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct IdealInput {
    /// Ring spec such as `S:3@QQ`, `E:5@GF(3)` or `S:3@QQ(t)`.
    #[arg(long)]
    pub ring: Option<String>,
    /// Generators separated by `;`.
    #[arg(long, conflicts_with = "ideal")]
    pub gens: Option<String>,
    /// Ideal file: a ring spec line, then one generator per line.
    #[arg(long)]
    pub ideal: Option<PathBuf>,
    /// Degree bound for truncated computations (default: 8, or the number
    /// of generators of an exterior algebra, raised to twice the top
    /// generator degree when larger).
    #[arg(short = 'D', long = "degree-bound")]
    pub degree_bound: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function of R/I in degrees 0..=D.
    Hf(IdealInput),
    /// Lexicographic ideal with a given Hilbert function.
    LexIdeal {
        #[arg(long)]
        ring: String,
        /// `1,3,4,4,3,3+` (trailing `+`: constant from there on).
        #[arg(long)]
        hf: String,
        #[arg(short = 'D', long = "degree-bound")]
        degree_bound: Option<usize>,
    },
    /// Lex initial ideal.
    Initial(IdealInput),
    /// Saturation by the irrelevant ideal.
    Saturate(IdealInput),
    /// Ideal of minors of a matrix.
    Minors {
        #[arg(long)]
        ring: String,
        /// Rows separated by `;`, entries by `,`.
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value_t = 2)]
        size: usize,
        #[arg(short = 'D', long = "degree-bound")]
        degree_bound: Option<usize>,
    },
    /// Dimension of the tangent space Hom(I, R/I)_0.
    Tangent {
        #[command(flatten)]
        input: IdealInput,
        /// Also print a basis of homomorphisms.
        #[arg(long)]
        basis: bool,
    },
    /// Flat limit at t = 0 of a family whose generators involve `t`.
    FlatLimit(IdealInput),
    /// Rank of an exterior quadric.
    Rank {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        elem: String,
    },
    /// Sample a point of a named locus (X3, Y3, X5, Y5, Z4, PTS4).
    Sample {
        #[arg(long)]
        locus: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "GF(101)")]
        field: String,
    },
    /// Run a verification scenario.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// thm3, thm4, thm5, lemma3-5, lemma5-1, lemma5-2, lemma5-4, fixtures,
    /// combinatorics or all.
    #[arg(long, required_unless_present = "scenario_file")]
    pub scenario: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Record per-check wall-clock times (reports are then not reproducible).
    #[arg(long)]
    pub timings: bool,
    /// Replace each scenario's default field.
    #[arg(long)]
    pub field: Option<String>,
    /// Scenario definition to use instead of the embedded data.
    #[arg(long)]
    pub scenario_file: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::dispatch(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            if out.checks_failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
