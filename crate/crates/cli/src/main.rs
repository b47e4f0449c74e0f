//! `monord`: command-line access to monomial-ideal invariants and orderings.
//!
//! Exit codes: 0 success, 64 usage error, 65 data error, 69 resource or
//! budget exhaustion. `compare` exits 10, 11 or 12 for less, equal, greater.

mod commands;
mod expr;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;
pub const EXIT_RESOURCE: u8 = 69;

#[derive(Debug, Parser)]
#[command(name = "monord", version, about = "Exact invariants and well-orderings of monomial ideals")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the ideal with its minimal generators, sorted.
    Normalize { file: PathBuf },
    /// Test whether a monomial (`x1^2*x3` or `2 0 1`) lies in the ideal.
    Contains { file: PathBuf, monomial: String },
    /// Compare two ideals; exits 10/11/12 for less/equal/greater.
    Compare(CompareArgs),
    /// Hilbert function, Hilbert-Samuel polynomial, minimizing coefficients, ψ, φ, n₀.
    Hilbert(HilbertArgs),
    /// Irredundant irreducible decomposition.
    Decompose {
        file: PathBuf,
        /// Group the components by support.
        #[arg(long)]
        by_support: bool,
    },
    /// The lex-segment ideal with the same Hilbert function.
    Lexify {
        file: PathBuf,
        /// Largest degree whose layer is built.
        #[arg(long)]
        degree: Option<u64>,
    },
    /// The same generators in one more variable.
    Cone { file: PathBuf },
    /// The sum in disjoint variables, with all mixed products added.
    Directsum { left: PathBuf, right: PathBuf },
    /// Maximal length of f-bounded lex-decreasing sequences, f(i) = p + i·q.
    Chainbound(ChainArgs),
    /// Order-type bounds for ideals in M variables.
    Bounds { m: usize },
    /// Evaluate an ordinal expression with ⊕ / (+), ⊗ / (x), **n and ot[...].
    OrdinalEval { expr: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OrderKind {
    Kb,
    Triangle,
    Mintype,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long, value_enum, default_value = "kb")]
    pub order: OrderKind,
    /// deglex, lex, or matrix:FILE (rows of integer weights).
    #[arg(long, default_value = "deglex")]
    pub term_order: String,
    pub left: PathBuf,
    pub right: PathBuf,
}

#[derive(Debug, Args)]
pub struct HilbertArgs {
    pub file: PathBuf,
    /// Print H and h on 0..=N (default: past n₀ and the threshold).
    #[arg(long)]
    pub upto: Option<u64>,
    /// Generator count above which inclusion-exclusion is refused.
    #[arg(long, default_value_t = 20)]
    pub subset_cap: usize,
    /// Fixed window for the n₀ search.
    #[arg(long)]
    pub n0_window: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    #[arg(long)]
    pub m: usize,
    /// The bound f(i) = p + i·q, as `p,q`.
    #[arg(long, value_parser = parse_affine)]
    pub affine: (u64, u64),
    /// Report t_m(f) = ℓ(m, h_m ∘ f) instead of ℓ(m, f).
    #[arg(long)]
    pub tm: bool,
    /// Also print the first N terms of a maximal sequence.
    #[arg(long)]
    pub sequence: Option<usize>,
    /// Recursion frame budget.
    #[arg(long, env = "MONORD_BUDGET", default_value_t = monord::chains::DEFAULT_BUDGET)]
    pub budget: u64,
}

fn parse_affine(s: &str) -> Result<(u64, u64), String> {
    let (p, q) = s.split_once(',').ok_or("expected p,q")?;
    let num = |x: &str| x.trim().parse::<u64>().map_err(|e| format!("{x:?}: {e}"));
    Ok((num(p)?, num(q)?))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            if !out.text.is_empty() {
                println!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("monord: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
