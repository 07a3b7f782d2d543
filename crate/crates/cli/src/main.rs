mod output;
mod run;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

/// Workbench for intersecting-family extremal quantities and their shades:
/// exact counts, family constructions, brute-force searches with witnesses,
/// desk-scale claim verification, and asymptotic probe tables.
#[derive(Parser)]
#[command(name = "shades", version, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; each subcommand picks a suitable default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Node cap for exhaustive searches.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    pub max_nodes: u64,

    /// Wall-clock cap in seconds for exhaustive searches. Makes outcomes
    /// machine-dependent; leave unset for reproducible runs.
    #[arg(long, global = true)]
    pub max_seconds: Option<f64>,

    /// Report the best bound found instead of failing when a budget runs out.
    #[arg(long, global = true)]
    pub allow_partial: bool,

    /// Worker threads for fanning verification tuples.
    #[arg(long, global = true, default_value_t = 1)]
    pub parallelism: usize,

    /// Seed for the randomized sampling claims.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Include wall-clock timing fields in outputs. Off by default so that
    /// repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print an exact cardinality in decimal.
    #[command(subcommand)]
    Count(CountCmd),
    /// Emit a family in the line format (header `n=<n> k=<k>`, one member
    /// per line as sorted comma-separated elements).
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Run a brute-force extremal search and print the result record.
    Search(SearchArgs),
    /// Check a claim over its parameter range, one report per tuple.
    Verify(VerifyArgs),
    /// Evaluate an asymptotic probe into a CSV table.
    #[command(subcommand)]
    Asympt(AsymptCmd),
}

#[derive(Subcommand)]
pub enum CountCmd {
    /// C(n, k).
    Binomial { n: u64, k: i64 },
    /// |F_i(n, k, t)|.
    Frankl { n: u32, k: u32, t: u32, i: u32 },
    /// |G_ij(n, k, t)|.
    G { n: u32, k: u32, t: u32, i: u32, j: u32 },
    /// |F_i(2m, m, 2s)| via the central complement identity.
    Eq68 { m: u32, s: u32, i: u32 },
}

#[derive(Subcommand)]
pub enum FamilyCmd {
    /// The family F_i(n, k, t).
    Frankl { n: u32, k: u32, t: u32, i: u32 },
    /// The family G_ij(n, k, t).
    G { n: u32, k: u32, t: u32, i: u32, j: u32 },
    /// Read a family file and emit its m-shade.
    KshadeOf {
        /// Target level m.
        #[arg(long)]
        m: u32,
        /// Family file in the line format; `-` for stdin.
        file: PathBuf,
    },
}

#[derive(Args)]
pub struct SearchArgs {
    /// Ground-set cap for the searches (raise at your own risk).
    #[arg(long, default_value_t = 12)]
    pub cap: u32,

    #[command(subcommand)]
    pub which: SearchCmd,
}

#[derive(Subcommand)]
pub enum SearchCmd {
    /// M(n, k, t): maximum t-intersecting family of k-subsets.
    #[command(name = "M")]
    M { n: u32, k: u32, t: u32 },
    /// M_0(n, m, k, t): maximum m-shade of a t-intersecting family.
    #[command(name = "M0")]
    M0 { n: u32, m: u32, k: u32, t: u32 },
    /// N(n, k, l, t): maximum |A| |B| over cross-t-intersecting pairs.
    #[command(name = "N")]
    N { n: u32, k: u32, l: u32, t: u32 },
    /// N_0(n, mk, ml, k, l, t): maximum shade product over cross pairs.
    #[command(name = "N0")]
    N0 {
        n: u32,
        mk: u32,
        ml: u32,
        k: u32,
        l: u32,
        t: u32,
    },
    /// N_1(n, m, k, t) = N_0(n, m, m, k, k, t).
    #[command(name = "N1")]
    N1 { n: u32, m: u32, k: u32, t: u32 },
    /// Maximum shade over all antichains of 2^[n], with the Sperner bound.
    Sperner { n: u32 },
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Claim identifier (eq-49, lemma-1.2, lemma-2.2, lemma-3.6, ak-eq63,
    /// conj-j1, conj-j4, conj-j5, prop-p5, mt-theorem, kostochka) or `all`.
    pub claim: String,

    /// Range override: largest ground-set size (largest m for lemma-1.2).
    #[arg(long)]
    pub n_max: Option<u32>,

    /// Range override: largest member cardinality for the shade-identity
    /// claims.
    #[arg(long)]
    pub k_max: Option<u32>,

    /// Random families per tuple for lemma-1.2.
    #[arg(long, default_value_t = 1000)]
    pub samples: u64,
}

#[derive(Subcommand)]
pub enum AsymptCmd {
    /// Central binomial partial sums against Phi(b) - Phi(-a).
    Dml {
        #[arg(long, value_delimiter = ',', default_value = "100,1000,10000")]
        n: Vec<u64>,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 1.0)]
        b: f64,
    },
    /// Convolution ratio sums against Phi(b) - Phi(-a), with k = n^k_exp.
    Lemma3 {
        #[arg(long, value_delimiter = ',', default_value = "10000,100000,1000000")]
        n: Vec<u64>,
        #[arg(long, default_value_t = 0.5)]
        k_exp: f64,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 1.0)]
        b: f64,
    },
    /// Star-family ratio |F_0(2m, m, t)| / C(2m, m) against 1/2^t.
    Eq69 {
        #[arg(long)]
        t: u64,
        #[arg(long, value_delimiter = ',', default_value = "10,100,1000,10000")]
        m: Vec<u64>,
    },
    /// Square-root-threshold construction ratio against 1 - Phi(c/sqrt 2).
    L10 {
        #[arg(long, default_value_t = 2.0)]
        c: f64,
        #[arg(long)]
        k: u64,
        #[arg(long, value_delimiter = ',')]
        m: Vec<u64>,
    },
    /// Fast-growing-threshold ratio (t = k^t_exp, index i = k), tending to 0.
    L12 {
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 0.75)]
        t_exp: f64,
        #[arg(long, value_delimiter = ',')]
        m: Vec<u64>,
    },
    /// Conjectured shade-ratio maxima over a schedule.
    J2(ScheduleArgs),
    /// Conjectured cross-pair ratio maxima over a schedule.
    Co1(ScheduleArgs),
}

#[derive(Args)]
pub struct ScheduleArgs {
    /// Built-in schedule: `shrinking` (t = k^0.75), `bounded` (fixed t = 2),
    /// or `threshold` (t = 2 sqrt k); all with k = sqrt m.
    #[arg(long, conflicts_with_all = ["k_exp", "t_exp", "t", "c"])]
    pub schedule: Option<String>,

    /// k(m) = floor(m^k_exp).
    #[arg(long)]
    pub k_exp: Option<f64>,

    /// t(m) = max(1, floor(k^t_exp)).
    #[arg(long, conflicts_with_all = ["t", "c"])]
    pub t_exp: Option<f64>,

    /// Constant t.
    #[arg(long, conflicts_with = "c")]
    pub t: Option<u64>,

    /// t(m) = max(1, floor(c sqrt k)).
    #[arg(long)]
    pub c: Option<f64>,

    /// Comma-separated m values, or `default` for the log-spaced list.
    #[arg(long, default_value = "default")]
    pub m_list: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run::dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
