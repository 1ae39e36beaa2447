use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact edge-isoperimetric computations on generalized Sierpinski graphs.
#[derive(Debug, Parser)]
#[command(name = "sierpinski-eip", version, about)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for exhaustive sweeps.
    #[arg(long, global = true, env = "SIERPINSKI_EIP_JOBS")]
    pub jobs: Option<usize>,
    /// Largest number of subsets a full sweep may visit.
    #[arg(long, global = true)]
    pub budget_subsets: Option<u64>,
    /// Largest number of poset ideals a search may visit.
    #[arg(long, global = true)]
    pub budget_ideals: Option<u64>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Drop wall-clock fields so repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Dot,
}

/// Which graph to work on: `--n/--m` for `S(n, m)`, or `--graph`.
#[derive(Debug, Args, Clone)]
pub struct Target {
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    /// Decoration: number of inside corners.
    #[arg(long)]
    pub s: Option<u32>,
    /// Decoration: number of outside corners.
    #[arg(long)]
    pub t: Option<u32>,
    /// Named graph: `S(n,m)`, `SG<n>`, `S[n,m]`, `Q<n>` or `K<m>`.
    #[arg(long, conflicts_with_all = ["n", "m"])]
    pub graph: Option<String>,
}

/// Set sizes to report: one `--ell`, or an inclusive `--range a..b`.
#[derive(Debug, Args, Clone)]
pub struct Sizes {
    #[arg(long)]
    pub ell: Option<u64>,
    /// Inclusive; either end may be omitted (`3..`, `..10`).
    #[arg(long, conflicts_with = "ell")]
    pub range: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Boundary of Lex initial segments (or the exact optimum) per size.
    Profile {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        sizes: Sizes,
        #[arg(long, value_enum, default_value = "lex")]
        method: ProfileMethod,
    },
    /// Boundary and cut edges of one vertex set.
    Boundary {
        #[command(flatten)]
        target: Target,
        /// Comma-separated words, or `lex:<ell>`.
        #[arg(long)]
        set: String,
    },
    /// Exact minimum boundary per size, with a witness set.
    Solve {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        sizes: Sizes,
    },
    /// Runs a named claim suite and reports verified or a counterexample.
    Verify {
        #[arg(long, value_enum)]
        claim: Claim,
        #[command(flatten)]
        target: Target,
    },
    /// Stabilization order: components, ideals, Hasse diagram, or the
    /// weighted network of ideals.
    Poset {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "components")]
        what: PosetView,
        /// Restrict to this word and everything below it.
        #[arg(long)]
        below: Option<String>,
    },
    /// Values of the limit map on `[0, 1]`.
    Limit {
        /// Preimage coordinates `(y0, y1, y2)` of a rational in `[0, 1]`.
        #[arg(long, value_name = "A", required_unless_present = "lambda")]
        eta_inverse: Option<String>,
        /// Limit boundary value at a rational in `[0, 1]`.
        #[arg(long, value_name = "A", conflicts_with = "eta_inverse")]
        lambda: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileMethod {
    /// Edge scan of Lex initial segments.
    Lex,
    /// Three-way recursion (m = 3 only); adds the two part columns.
    Recursion,
    /// Digit-sum closed form.
    ClosedForm,
    /// Exhaustive optimum.
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    /// Lex segments are optimal on plain `S(n, m)`.
    Conjecture1,
    /// Lex segments are optimal under every decoration (or `--s/--t`).
    Conjecture2,
    /// Subadditivity and recursion identities for `m = 3`, `n <= --n`.
    Subadditivity,
    /// Existence of a nested chain of optimal sets on `--graph`.
    Nested,
    /// Lower bound `m - 1` (or 2 on gaskets) and where it is attained.
    Theorem2,
    /// The grid of (component ideal, decoration) cases.
    Cases,
    /// Properties of stabilization, compression and subadditivation.
    Operations,
    /// Optimality of subcube initial segments on `Q<n>`.
    Hypercube,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PosetView {
    Components,
    Ideals,
    Hasse,
    Network,
}
