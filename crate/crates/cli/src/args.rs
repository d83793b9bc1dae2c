use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ghm_core::split::Kernel;

#[derive(Parser, Debug)]
#[command(name = "ghm", version, about = "Radius, diameter and eccentricities of Helly, chordal and split graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Randomized radius and diameter of Helly graphs.
    Helly {
        #[command(subcommand)]
        op: HellyOp,
    },
    /// Linear-time algorithms for C4-free Helly graphs.
    C4h {
        #[command(subcommand)]
        op: C4hOp,
        #[command(flatten)]
        io: Io,
    },
    /// Split graphs in the sparse-split format.
    Split {
        #[command(subcommand)]
        op: SplitOp,
        #[command(flatten)]
        io: Io,
        #[arg(long, global = true, value_enum, default_value = "packed")]
        kernel: KernelArg,
    },
    /// Clique-tree reduction for chordal graphs.
    Chordal {
        #[command(subcommand)]
        op: ChordalOp,
    },
    /// Class recognizers and the desk-scale Helly oracle.
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
    /// Generate a certified instance as an edge list.
    Gen(GenArgs),
    /// Time algorithms over a size ladder; prints CSV.
    Bench(BenchArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Io {
    /// Input file, `-` for stdin.
    #[arg(long, global = true, default_value = "-")]
    pub input: PathBuf,
    #[arg(long, global = true, value_enum, default_value = "edgelist")]
    pub format: Format,
    /// Print the full run report instead of the bare result.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Edgelist,
    Dimacs,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelArg {
    Naive,
    Packed,
}

impl From<KernelArg> for Kernel {
    fn from(k: KernelArg) -> Kernel {
        match k {
            KernelArg::Naive => Kernel::Naive,
            KernelArg::Packed => Kernel::Packed,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct Sampling {
    #[command(flatten)]
    pub io: Io,
    #[arg(long)]
    pub eps: Option<f64>,
    /// Oversampling constant.
    #[arg(long, default_value_t = 3.0)]
    pub c: f64,
    #[arg(long)]
    pub repeats: Option<u32>,
    /// Run the desk-scale Helly oracle first.
    #[arg(long)]
    pub verify_class: bool,
}

#[derive(Subcommand, Debug)]
pub enum HellyOp {
    /// Radius and a central vertex.
    Radius(Sampling),
    /// Diametral pair.
    Diameter(Sampling),
    /// Vertices `b` with every source within distance `k`.
    EccLe {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        k: u32,
        /// Comma-separated source vertices; all vertices when omitted.
        #[arg(long, value_delimiter = ',')]
        sources: Vec<usize>,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum C4hOp {
    /// Central vertex with a radius certificate.
    Center,
    /// Diametral pair.
    Diameter,
    /// Every eccentricity.
    AllEcc,
    /// Central vertex of a chordal Helly graph.
    CertifyChordal,
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum SplitOp {
    /// Exact diameter, at most 3.
    Diam,
    /// Diametral pair of a split Helly graph.
    Pair,
    /// Two disjoint stable neighborhoods, if any.
    Disjoint,
}

#[derive(Args, Debug, Clone)]
pub struct ChordalArgs {
    #[command(flatten)]
    pub io: Io,
    #[arg(long)]
    pub repeats: Option<u32>,
    #[arg(long, value_enum, default_value = "packed")]
    pub kernel: KernelArg,
    /// Directory for `emit-splits` output files.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum ChordalOp {
    /// Exact diameter with a witness pair.
    Diam(ChordalArgs),
    /// Eccentricities within an additive 1.
    EccApprox(ChordalArgs),
    /// Split instances built at every reduction step.
    EmitSplits(ChordalArgs),
}

#[derive(Subcommand, Debug)]
pub enum OracleOp {
    /// Class membership with certificates.
    Check {
        #[command(flatten)]
        io: Io,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    Path,
    Star,
    Tree,
    King,
    Block,
    RandomChordal,
    RandomChordalHelly,
    RandomSplitHelly,
    Fixture,
}

#[derive(Args, Debug, Clone)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: GenKind,
    #[arg(long, default_value_t = 16)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub rows: usize,
    #[arg(long, default_value_t = 3)]
    pub cols: usize,
    /// Fixture name for `--kind fixture`.
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Write the edge list here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    King,
    Chordal,
    Split,
}

#[derive(Args, Debug, Clone)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', default_value = "1000,2000,4000,8000")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 5)]
    pub runs: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Skip the quadratic baseline above this many vertices.
    #[arg(long, default_value_t = 20_000)]
    pub brute_limit: usize,
}
