use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monok_core::GraphFormat;

#[derive(Debug, Parser)]
#[command(name = "monok", version, about = "Monochromatic k-connected edge-colourings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check whether a colouring is monochromatic k-connected.
    Verify(VerifyArgs),
    /// Bound or compute mc_k of a graph.
    Solve(SolveArgs),
    /// Emit a construction as graph6 or an edge list.
    Construct(ConstructArgs),
    /// Run a reproduction suite.
    Check(CheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    G6,
    Edges,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::G6 => GraphFormat::Graph6,
            FormatArg::Edges => GraphFormat::EdgeList,
        }
    }
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph file, or `-` for stdin.
    #[arg(short = 'g', long = "graph")]
    pub graph: PathBuf,
    /// Input format; detected from the content when omitted.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Largest edge count for a full search.
    #[arg(long)]
    pub budget_edges: Option<usize>,
    /// Largest number of search nodes.
    #[arg(long)]
    pub budget_nodes: Option<u64>,
    /// Wall-clock limit per search, in seconds.
    #[arg(long)]
    pub timeout_sec: Option<f64>,
    /// Always run the full search, even when the bounds meet.
    #[arg(long)]
    pub no_shortcut: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Colouring CSV with header `u,v,colour`.
    #[arg(short = 'c', long = "colouring")]
    pub colouring: PathBuf,
    #[arg(short = 'k')]
    pub k: usize,
    /// Include one path system per pair in the report.
    #[arg(long)]
    pub witnesses: bool,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(short = 'k')]
    pub k: usize,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Write the optimal colouring here as CSV.
    #[arg(long)]
    pub witness_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub kind: Construction,
    /// Output format.
    #[arg(long, value_enum, default_value = "g6", global = true)]
    pub out_format: FormatArg,
}

#[derive(Debug, Subcommand)]
pub enum Construction {
    /// k-connected graph on n vertices with ⌈kn/2⌉ edges.
    Harary {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'k')]
        k: usize,
    },
    /// k-regular bipartite circulant with classes of size s.
    Regbip {
        #[arg(short = 's')]
        s: usize,
        #[arg(short = 'k')]
        k: usize,
    },
    /// k-connected bipartite graph with classes s ≤ t and kt edges.
    Bipharary {
        #[arg(short = 's')]
        s: usize,
        #[arg(short = 't')]
        t: usize,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Colouring with one colour on a spanning k-connected subgraph and
    /// fresh colours elsewhere.
    Lowerbound {
        #[command(flatten)]
        input: GraphInput,
        /// Spanning k-connected subgraph; a minimum one is computed when omitted.
        #[arg(long)]
        subgraph: Option<PathBuf>,
        #[arg(short = 'k')]
        k: usize,
        /// Write the colouring here instead of after the graph on stdout.
        #[arg(long)]
        colouring_out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    #[value(name = "thm-small-k")]
    SmallK,
    #[value(name = "thm-bip-small-k")]
    BipSmallK,
    #[value(name = "thm-Kn")]
    CompleteGraphs,
    #[value(name = "thm-Kst")]
    CompleteBipartite,
    #[value(name = "ineq-superpath")]
    Superpath,
    #[value(name = "conj-evidence")]
    Conjecture,
}

impl Suite {
    pub fn id(self) -> &'static str {
        match self {
            Suite::SmallK => "thm-small-k",
            Suite::BipSmallK => "thm-bip-small-k",
            Suite::CompleteGraphs => "thm-Kn",
            Suite::CompleteBipartite => "thm-Kst",
            Suite::Superpath => "ineq-superpath",
            Suite::Conjecture => "conj-evidence",
        }
    }

    /// Conjecture suites only collect evidence and never fail a run.
    pub fn is_evidence(self) -> bool {
        self == Suite::Conjecture
    }
}

/// Inclusive integer range written `a`, `a..b` or `a..=b` (both inclusive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span(pub RangeInclusive<usize>);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("bad range bound {x:?}: {e}"));
        let span = match s.split_once("..") {
            Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
            None => {
                let a = num(s)?;
                a..=a
            }
        };
        if span.is_empty() {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Span(span))
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Connectivity values, e.g. `2..4`.
    #[arg(short = 'k')]
    pub k: Option<Span>,
    /// Vertex counts (or the smaller class size for bipartite suites).
    #[arg(short = 'n')]
    pub n: Option<Span>,
    /// Larger class sizes for bipartite suites.
    #[arg(short = 't')]
    pub t: Option<Span>,
    /// Random instances (superpath fuzzing) or random supergraphs per shape.
    #[arg(long)]
    pub instances: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Print the JSON report instead of the table.
    #[arg(long)]
    pub json: bool,
    /// Also write the JSON report here.
    #[arg(long)]
    pub json_out: Option<PathBuf>,
    /// Also write the table as CSV here.
    #[arg(long)]
    pub csv_out: Option<PathBuf>,
    /// Worker threads (defaults to all cores).
    #[arg(long)]
    pub threads: Option<usize>,
}
