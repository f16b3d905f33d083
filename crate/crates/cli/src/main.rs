// SPDX-License-Identifier: Apache-2.0

//! `sigcolor`: generate signed graphs, build products, color, verify and
//! count class ratios. Exit codes: 0 success, 1 a negative answer (invalid
//! coloring, failed reproduction row, no `Δ`-coloring), 2 bad input.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use input::SignsArg;

pub const DEFAULT_GUARD_EDGES: usize = 64;

#[derive(Parser, Debug)]
#[command(name = "sigcolor", version, about = "Edge colorings of signed graphs and their products")]
pub struct Cli {
    /// Largest edge count handed to the exact search. Falls back to
    /// SG_GUARD_EDGES, then 64.
    #[arg(long, global = true)]
    pub guard_edges: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a path, cycle, complete graph or tree.
    Gen(GenArgs),
    /// Build a cartesian, tensor, strong or corona product of two graphs.
    Product(ProductArgs),
    /// Color a graph or a product with one of the constructions.
    Color(ColorArgs),
    /// Chromatic index with a witness coloring.
    Chi(ChiArgs),
    /// Check a coloring against a graph.
    Verify(VerifyArgs),
    /// Fraction of signatures that are Δ-colorable.
    ClassRatio(ClassRatioArgs),
    /// Switch a graph at a vertex set, optionally carrying a coloring along.
    Switch(SwitchArgs),
    /// Rerun the cycle-product ratio table or the clique probes.
    Reproduce(ReproduceArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Tree,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    pub family: Family,
    /// Number of vertices.
    pub size: usize,
    /// all-plus, all-minus, random(SEED) or an explicit list like +,-,+
    #[arg(default_value = "all-plus", allow_hyphen_values = true)]
    pub signs: SignsArg,
    /// Tree parents: vertex i+1 hangs off the i-th entry. Random if omitted.
    #[arg(long)]
    pub parents: Option<String>,
    /// Seed for random tree shapes.
    #[arg(long, default_value_t = 0)]
    pub tree_seed: u64,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ProductArgs {
    /// cartesian, tensor, strong or corona
    pub kind: sigcolor_core::products::ProductKind,
    #[arg(long)]
    pub first: PathBuf,
    #[arg(long)]
    pub second: PathBuf,
    /// Corona link signs, `n1 * n2` of them.
    #[arg(long, default_value = "all-plus", allow_hyphen_values = true)]
    pub links: SignsArg,
    /// Print only the product graph, without the index map.
    #[arg(long)]
    pub graph_only: bool,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Exact search; χ′ colors.
    Oracle,
    Path,
    BalancedCycle,
    Forest,
    Matching,
    /// Cartesian product of `--first` and `--second`, each Δ-colorable.
    Cartesian,
    /// Path `--first` times cycle `--second`.
    PathCycle,
    /// Cycle `--first` times cycle `--second`; exit 1 when Δ+1 is forced.
    CycleProduct,
    /// Tensor product of `--first` (Δ-colorable) and the tree `--second`.
    Tensor,
    /// Strong product of the paths `--first` and `--second`.
    Strong,
    /// Corona of `--first` and `--second` with `--links`.
    Corona,
}

#[derive(Args, Debug)]
pub struct ColorArgs {
    #[arg(long, value_enum)]
    pub method: Method,
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub first: Option<PathBuf>,
    #[arg(long)]
    pub second: Option<PathBuf>,
    #[arg(long, default_value = "all-plus", allow_hyphen_values = true)]
    pub links: SignsArg,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ChiArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub coloring: PathBuf,
}

#[derive(Args, Debug)]
pub struct ClassRatioArgs {
    /// full, cosets or product-induced
    #[arg(long)]
    pub strategy: sigcolor_core::analysis::Strategy,
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Cycle lengths R,S for product-induced.
    #[arg(long)]
    pub cycles: Option<String>,
    #[arg(long, default_value_t = 4096)]
    pub chunk: u64,
    /// Continue from a saved state file.
    #[arg(long)]
    pub resume: Option<PathBuf>,
    /// Where to save the state when stopping early.
    #[arg(long)]
    pub state_out: Option<PathBuf>,
    /// Stop after this many chunks.
    #[arg(long)]
    pub max_chunks: Option<u64>,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, default_value_t = 20)]
    pub edge_cap: usize,
    #[arg(long, default_value_t = 17)]
    pub coset_cap: usize,
    /// Run the search even where the parity certificate applies.
    #[arg(long)]
    pub no_parity: bool,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SwitchArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Comma-separated vertices.
    #[arg(long, default_value = "")]
    pub set: String,
    #[arg(long)]
    pub coloring: Option<PathBuf>,
    #[arg(long)]
    pub coloring_out: Option<PathBuf>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Table {
    CycleRatios,
    Conjectures,
}

#[derive(Args, Debug)]
pub struct ReproduceArgs {
    pub table: Table,
    #[arg(long, default_value_t = 17)]
    pub coset_cap: usize,
    #[arg(long, default_value_t = sigcolor_core::analysis::COMPLETE_PROBE_GUARD)]
    pub complete_guard: usize,
    #[arg(long, default_value_t = sigcolor_core::analysis::JOINED_PROBE_GUARD)]
    pub joined_guard: usize,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

/// A command that did not succeed, with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    pub fn negative(message: impl Into<String>) -> Failure {
        Failure { code: 1, message: message.into() }
    }
}

impl From<sigcolor_core::Error> for Failure {
    fn from(e: sigcolor_core::Error) -> Failure {
        use sigcolor_core::Error as E;
        match e {
            E::BoundViolated(_) | E::Construction(_) | E::InvalidColoring(_) => Failure::negative(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("sigcolor: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
