//! `tupledom`: generate regular graphs, build and verify k-tuple
//! (total) dominating sets, solve small instances exactly, and tabulate
//! upper bounds.

mod commands;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tupledom::exact::DEFAULT_BUDGET;
use tupledom::Variant;

use input::InputFormat;
use output::OutputFormat;

#[derive(Parser)]
#[command(
    name = "tupledom",
    version,
    about = "k-tuple domination on regular graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write graph6 lines for random regular graphs or a named graph.
    Gen(GenArgs),
    /// Build an (r-1)-tuple total or r-tuple dominating set per graph.
    Dominate(DominateArgs),
    /// Compute minimum tuple (total) dominating sets exactly.
    Exact(ExactArgs),
    /// Tabulate the coloring bounds next to the probabilistic ones.
    Bounds(BoundsArgs),
    /// Check a given vertex set on a single graph.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Vertex count of each random graph.
    #[arg(long, requires = "r", conflicts_with = "atlas")]
    n: Option<usize>,
    /// Degree of each random graph.
    #[arg(long, requires = "n")]
    r: Option<usize>,
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Graph i is drawn with seed `seed + i`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Named graph: heawood, petersen, hoffman-singleton, `pg2 <q>`,
    /// `moore <r>`, cycle:n, complete:n, kbip:a,b, hypercube:d, prism:n.
    #[arg(long, num_args = 1..=2, value_names = ["NAME", "PARAM"])]
    atlas: Option<Vec<String>>,
    /// Output file (standard output when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Sidecar file receiving a `#` metadata header.
    #[arg(long)]
    meta: Option<PathBuf>,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file; standard input when absent or `-`.
    input: Option<PathBuf>,
    /// Input format; sniffed from the extension by default
    /// (.dimacs/.col/.dim are DIMACS, anything else graph6).
    #[arg(long, value_enum)]
    format_in: Option<InputFormat>,
    /// Output format; text on a terminal, JSON lines otherwise.
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Total,
    Closed,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Total => Variant::Total,
            VariantArg::Closed => Variant::Closed,
        }
    }
}

#[derive(Args)]
struct DominateArgs {
    #[arg(long, value_enum)]
    variant: VariantArg,
    #[command(flatten)]
    io: InputArgs,
}

#[derive(Args)]
struct ExactArgs {
    #[arg(long, value_enum)]
    variant: VariantArg,
    #[arg(long)]
    k: usize,
    /// Search-node budget per graph.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(flatten)]
    io: InputArgs,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    io: InputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    variant: VariantArg,
    #[arg(long)]
    k: usize,
    /// Comma-separated vertex ids.
    #[arg(long, allow_hyphen_values = true)]
    set: String,
    #[command(flatten)]
    io: InputArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match cli.command {
        Command::Gen(a) => commands::gen(commands::GenRequest {
            n: a.n,
            r: a.r,
            count: a.count,
            seed: a.seed,
            atlas: a.atlas.map(|parts| parts.join(":")),
            out: a.out,
            meta: a.meta,
        }),
        Command::Dominate(a) => commands::dominate(a.variant.into(), &a.io.into()),
        Command::Exact(a) => commands::exact(a.variant.into(), a.k, a.budget, &a.io.into()),
        Command::Bounds(a) => commands::bounds(&a.io.into()),
        Command::Verify(a) => commands::verify(a.variant.into(), a.k, &a.set, &a.io.into()),
    };
    ExitCode::from(status as u8)
}

impl From<InputArgs> for commands::Source {
    fn from(a: InputArgs) -> commands::Source {
        commands::Source {
            path: a.input,
            format_in: a.format_in,
            format: OutputFormat::resolve(a.format),
        }
    }
}
