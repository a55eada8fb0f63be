//! The `pst` command line: solve, oracle, gen, verify and bench.

mod bench;
mod gen;
mod solve;
mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use solve::{restrict_to_terminal_component, SolveReport};

#[derive(Parser, Debug)]
#[command(name = "pst", version, about = "Planar Steiner tree with terminals on few faces")]
pub struct Cli {
    /// Worker threads for the solver and the lemma sweeps.
    #[arg(long, global = true, env = "PST_THREADS", default_value_t = 1)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimum Steiner tree by the separator recursion (or an oracle).
    Solve(SolveArgs),
    /// Minimum Steiner tree by one of the reference oracles.
    Oracle(OracleArgs),
    /// Emit a generated graph as JSON.
    Gen(GenArgs),
    /// Run a verification suite and print its report.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
    /// Time the solver against Dreyfus-Wagner on random instances (CSV).
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Pbsf,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleEngine {
    Dw,
    Exhaustive,
    Oneface,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Graph JSON file, or `-` for stdin.
    pub input: String,
    #[arg(long, value_enum, env = "PST_ENGINE", default_value_t = Engine::Pbsf)]
    pub engine: Engine,
    /// Base-case threshold on |B| + |K(T)|.
    #[arg(long, env = "PST_C0", default_value_t = 8)]
    pub c0: usize,
    /// Largest separator tried.
    #[arg(long, env = "PST_SEP_MAX", default_value_t = 3)]
    pub sep_max: usize,
    /// Terminal cap for Dreyfus-Wagner.
    #[arg(long, env = "PST_DW_CAP", default_value_t = 16)]
    pub dw_cap: usize,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long, value_enum)]
    pub engine: OracleEngine,
    /// Graph JSON file, or `-` for stdin.
    pub input: String,
    #[arg(long, env = "PST_DW_CAP", default_value_t = 16)]
    pub dw_cap: usize,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(subcommand)]
    pub what: GenWhat,
    /// Write the graph here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<String>,
    /// Sidecar metadata path; defaults to `<out>.meta.json`, or stderr.
    #[arg(long, global = true)]
    pub meta: Option<String>,
    /// Also write a Graphviz rendering.
    #[arg(long, global = true)]
    pub dot: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum GenWhat {
    /// Flower gadget of size t.
    Flower {
        #[arg(long)]
        t: usize,
        /// Weight of one unit; defaults to the smallest integral scale.
        #[arg(long)]
        scale: Option<u64>,
    },
    /// Verification gadget VG_N, reduced to the selector set.
    Vg {
        #[arg(long = "n", visible_alias = "N")]
        n: usize,
        /// Selectors kept, e.g. `1,3`; all when omitted.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
        /// Base weight M; defaults to 10N + 1.
        #[arg(long)]
        m: Option<u64>,
    },
    /// Chain of L verification gadgets.
    Lvg {
        #[arg(long = "n", visible_alias = "N")]
        n: usize,
        #[arg(long = "l", visible_alias = "L")]
        l: usize,
        /// Selector sets separated by `;`, e.g. `1,2;2`; all when omitted.
        #[arg(long)]
        sets: Option<String>,
        /// Base weight M; defaults to 10NL + 1.
        #[arg(long)]
        m: Option<u64>,
    },
    /// The Grid Tiling reduction graph.
    Reduction {
        /// Grid Tiling JSON.
        #[arg(long)]
        grid: String,
        /// Replace every edge by a path of unit edges.
        #[arg(long)]
        subdivide: bool,
        /// Largest total weight to subdivide.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        /// Join each dummy terminal to its w-portals by M_6 edges instead of merging them.
        #[arg(long)]
        pendant_dummies: bool,
    },
    /// Seeded random plane graph with terminals on a few faces.
    RandomPlanar {
        #[arg(long = "n")]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        terminals: usize,
        #[arg(long, default_value_t = 2)]
        faces: usize,
        #[arg(long, default_value_t = 1)]
        min_weight: u64,
        #[arg(long, default_value_t = 10)]
        max_weight: u64,
        #[arg(long, default_value_t = 0.5)]
        extra_prob: f64,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifySuite {
    /// Flower optimum, canonical forests and the strict relaxation.
    Flower {
        #[arg(long)]
        t: usize,
    },
    /// Triangle lemma sweep on the Γ graph.
    Triangle {
        #[arg(long)]
        l: i64,
        #[arg(long, default_value_t = 4)]
        radius: u64,
    },
    /// Distance propositions on a window of Γ.
    Metric {
        #[arg(long, default_value_t = 10)]
        width: i64,
        #[arg(long, default_value_t = 6)]
        height: i64,
    },
    /// All four VG clauses for every selector set.
    Vg {
        #[arg(long = "n", visible_alias = "N")]
        n: usize,
        #[arg(long)]
        m: Option<u64>,
    },
    /// Both L-VG clauses for every family of selector sets.
    Lvg {
        #[arg(long = "n", visible_alias = "N")]
        n: usize,
        #[arg(long = "l", visible_alias = "L")]
        l: usize,
        #[arg(long)]
        m: Option<u64>,
    },
    /// Budget test against the brute-force Grid Tiling answer.
    Reduction {
        #[arg(long)]
        grid: String,
        /// Build the variant with pendant dummy terminals and budget K_M + 2k M_6.
        #[arg(long)]
        pendant_dummies: bool,
    },
    /// Length bound for minimal non-crossing sequences.
    Noncrossing {
        #[arg(long)]
        l: usize,
    },
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Vertex counts, e.g. `8,12`.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub sizes: Vec<usize>,
    /// Seeds 0..seeds per size.
    #[arg(long, default_value_t = 5)]
    pub seeds: u64,
    #[arg(long, default_value_t = 4)]
    pub terminals: usize,
    #[arg(long, default_value_t = 2)]
    pub faces: usize,
    #[arg(long, env = "PST_C0", default_value_t = 8)]
    pub c0: usize,
    #[arg(long, env = "PST_SEP_MAX", default_value_t = 3)]
    pub sep_max: usize,
}

/// What a command prints and the exit code it ends with.
#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INFEASIBLE: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Infeasible(_) => EXIT_INFEASIBLE,
            _ => EXIT_INPUT,
        }
    }
}

pub(crate) fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

pub(crate) fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        Ok(std::io::read_to_string(std::io::stdin())?)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

pub(crate) fn attachment(pendant: bool) -> reduction::DummyAttachment {
    if pendant {
        reduction::DummyAttachment::Pendant
    } else {
        reduction::DummyAttachment::Identified
    }
}

pub(crate) fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    if cli.threads > 1 {
        // Fails only when a pool already exists, which is fine.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    match &cli.command {
        Command::Solve(a) => solve::cmd_solve(a, cli.threads),
        Command::Oracle(a) => solve::cmd_oracle(a),
        Command::Gen(a) => gen::cmd_gen(a),
        Command::Verify { suite } => verify::cmd_verify(suite),
        Command::Bench(a) => bench::cmd_bench(a, cli.threads),
    }
}
