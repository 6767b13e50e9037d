use std::path::PathBuf;
use std::str::FromStr;

use caring_core::graph::PatternKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Serialize, Debug)]
#[command(name = "caring", version, about = "Caring edge colorings, Kirkman systems and OR-capacity certificates")]
pub struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub workers: Option<usize>,

    /// Leave wall-clock timings out of the output.
    #[arg(long, global = true)]
    pub reproducible: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Serialize, Debug)]
pub enum Command {
    /// Build a coloring or design and write it in its text format.
    #[command(subcommand)]
    Construct(Construct),
    /// Check a coloring, a set of rounds, or a Kirkman system.
    Verify(VerifyArgs),
    /// Compute extremal parameters exactly for small n (CSV output).
    Search(SearchArgs),
    /// OR-capacity lower bounds from cliques in graph powers.
    Capacity(CapacityArgs),
}

#[derive(Subcommand, Serialize, Debug)]
pub enum Construct {
    /// Kirkman triple system on 3^t points.
    Kts {
        #[arg(long)]
        t: u32,
        /// Write the class coloring instead of the system.
        #[arg(long)]
        coloring: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Hamiltonian-decomposition coloring of K_n, n odd.
    Ham {
        #[arg(long)]
        n: usize,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Paired one-factorization coloring of K_n, n even.
    Onefact {
        #[arg(long)]
        n: usize,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Multi-round colorings from binary vertex labels.
    Rounds {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Encoding::Four)]
        encoding: Encoding,
        #[arg(long, visible_alias = "out")]
        rounds_out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Encoding {
    /// ceil(log2 n) rounds over four colors.
    Four,
    /// The four-color rounds re-encoded as twice as many three-color rounds.
    Ternary,
    /// ceil(log2 n) three-color rounds; needs the two-ones-of-four property.
    Three,
}

#[derive(ValueEnum, Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyMode {
    Caring,
    Mono,
    Rainbow,
    RoundsP4,
    RoundsTriangle,
    KtsGood,
}

#[derive(Args, Serialize, Debug)]
pub struct VerifyArgs {
    /// Check to run; may also be given as a flag such as --caring.
    #[arg(value_enum)]
    pub mode: Option<VerifyMode>,
    #[arg(long)]
    pub caring: bool,
    #[arg(long)]
    pub mono: bool,
    #[arg(long)]
    pub rainbow: bool,
    #[arg(long)]
    pub rounds_p4: bool,
    #[arg(long)]
    pub rounds_triangle: bool,
    #[arg(long)]
    pub kts_good: bool,

    #[arg(long, default_value = "P4", value_parser = PatternKind::from_str)]
    pub pattern: PatternKind,

    /// Input file (coloring, rounds or Kirkman system); stdin when absent or "-".
    #[arg(long, visible_alias = "rounds-in")]
    pub input: Option<PathBuf>,

    /// Colors each triangle must see in some round (rounds-triangle).
    #[arg(long, default_value_t = 3)]
    pub required: usize,
}

impl VerifyArgs {
    pub fn resolved_mode(&self) -> Result<VerifyMode, String> {
        let flags = [
            (self.caring, VerifyMode::Caring),
            (self.mono, VerifyMode::Mono),
            (self.rainbow, VerifyMode::Rainbow),
            (self.rounds_p4, VerifyMode::RoundsP4),
            (self.rounds_triangle, VerifyMode::RoundsTriangle),
            (self.kts_good, VerifyMode::KtsGood),
        ];
        let mut chosen: Vec<VerifyMode> = flags.iter().filter(|f| f.0).map(|f| f.1).collect();
        chosen.extend(self.mode);
        chosen.dedup();
        match chosen.as_slice() {
            [one] => Ok(*one),
            [] => Err("choose a check, e.g. `verify caring` or `verify --caring`".into()),
            _ => Err(format!("conflicting checks requested: {chosen:?}")),
        }
    }
}

#[derive(ValueEnum, Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum SearchParam {
    B,
    G,
    A,
    F,
    P,
    Ramsey,
}

/// `A` or an inclusive range `A..B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad vertex count {x:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(NRange { lo, hi })
    }
}

#[derive(Args, Serialize, Debug)]
pub struct SearchArgs {
    #[arg(value_enum)]
    pub param: SearchParam,
    /// Vertex count or inclusive range, e.g. 4..7.
    #[arg(long)]
    pub n: NRange,
    #[arg(long, default_value = "P4", value_parser = PatternKind::from_str)]
    pub pattern: PatternKind,
    /// f(n, p, q): subset size (only 4 is supported).
    #[arg(long, default_value_t = 4)]
    pub p: usize,
    /// f(n, p, q): colors each subset must see.
    #[arg(long, default_value_t = 4)]
    pub q: usize,
    /// Ramsey: number of colors.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Raise the vertex guard of the oracle.
    #[arg(long)]
    pub max_vertices: Option<usize>,
    /// Write each witness here in the coloring file format.
    #[arg(long)]
    pub witness_dir: Option<PathBuf>,
}

#[derive(Args, Serialize, Debug)]
pub struct BudgetArgs {
    /// Time cap in seconds.
    #[arg(long, env = "CARING_BUDGET_SECONDS")]
    pub budget_seconds: Option<f64>,
    #[arg(long)]
    pub node_cap: Option<u64>,
}

#[derive(ValueEnum, Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum CapacityAction {
    /// Exact clique in the materialized power, reported as a bound.
    Bound,
    /// Like bound, and also emit the clique as a certificate.
    Clique,
    /// Check a certificate file.
    Certify,
}

#[derive(Args, Serialize, Debug)]
pub struct CapacityArgs {
    /// Defaults to certify when --certificate is given, otherwise bound.
    #[arg(value_enum)]
    pub action: Option<CapacityAction>,
    /// Base graph: C<n>, K<n>, M<k>, M(<graph>) or grotzsch.
    #[arg(long)]
    pub graph: Option<String>,
    #[arg(long)]
    pub power: Option<u32>,
    #[arg(long)]
    pub certificate: Option<PathBuf>,
    /// Largest power that will be materialized.
    #[arg(long, default_value_t = caring_core::shannon::DEFAULT_MATERIALIZE_CAP)]
    pub cap: usize,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Where `clique` writes its certificate; stdout report only when absent.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

impl CapacityArgs {
    pub fn resolved_action(&self) -> CapacityAction {
        self.action.unwrap_or(if self.certificate.is_some() {
            CapacityAction::Certify
        } else {
            CapacityAction::Bound
        })
    }
}
