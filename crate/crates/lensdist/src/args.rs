use clap::{Args, Parser, Subcommand, ValueEnum};
use lensdist_core::pi1::DEFAULT_FUEL;
use lensdist_core::surgery::{BraidWord, Slope};
use lensdist_core::Convention;

#[derive(Debug, Parser)]
#[command(name = "lensdist", version, about = "Dehn-surgery calculus for lens spaces")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    #[arg(long, value_enum, default_value_t = ConventionArg::Unoriented, global = true)]
    pub convention: ConventionArg,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Oriented,
    Unoriented,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Oriented => Convention::Oriented,
            ConventionArg::Unoriented => Convention::Unoriented,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lens-space normalization and homeomorphism tests
    #[command(subcommand)]
    Lens(LensCmd),
    /// Invariants and fundamental groups of K(L(p,q);u)
    #[command(subcommand)]
    Knot(KnotCmd),
    /// Built-in surgery families
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Braid-closure surgery formula
    #[command(subcommand)]
    Surgery(SurgeryCmd),
    /// Braid words
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Distance-three hyperbolicity criterion for a surgery and a degeneracy slope
    Wu {
        #[arg(allow_hyphen_values = true, value_parser = parse_slope)]
        surgery: Slope,
        #[arg(allow_hyphen_values = true, value_parser = parse_slope)]
        degeneracy: Slope,
    },
    /// Bounds on surgical distances between lens spaces
    #[command(subcommand)]
    Distance(DistanceCmd),
}

#[derive(Debug, Args)]
pub struct PqArgs {
    #[arg(allow_hyphen_values = true)]
    pub p: i64,
    #[arg(allow_hyphen_values = true)]
    pub q: i64,
}

#[derive(Debug, Args)]
pub struct KnotArgs {
    pub p: i64,
    #[arg(allow_hyphen_values = true)]
    pub q: i64,
    pub u: i64,
}

#[derive(Debug, Subcommand)]
pub enum LensCmd {
    /// Canonical representative of L(p,q)
    Normalize(PqArgs),
    /// Whether L(p1,q1) and L(p2,q2) are homeomorphic
    Homeo {
        #[arg(allow_hyphen_values = true)]
        p1: i64,
        #[arg(allow_hyphen_values = true)]
        q1: i64,
        #[arg(allow_hyphen_values = true)]
        p2: i64,
        #[arg(allow_hyphen_values = true)]
        q2: i64,
    },
    /// Betti number, orbit and quadratic-residue obstruction of L(p,q)
    Info(PqArgs),
}

#[derive(Debug, Subcommand)]
pub enum KnotCmd {
    /// psi, phi, phi_tilde, S3 candidates and classification
    Invariants(KnotArgs),
    /// Invariants of K(L(p,q);u) for every u in a range
    Scan {
        p: i64,
        #[arg(allow_hyphen_values = true)]
        q: i64,
        /// Half-open range LO..HI of u values, default 1..p
        #[arg(long, value_parser = parse_range)]
        range: Option<(i64, i64)>,
    },
    /// The basic sequence s_j = jq mod p
    Sequence {
        p: i64,
        #[arg(allow_hyphen_values = true)]
        q: i64,
    },
    /// Presentation of r*-surgery, its abelianization and a simplification attempt
    Pi1 {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(allow_hyphen_values = true)]
        r: i64,
        #[arg(long, env = "LENSDIST_FUEL", default_value_t = DEFAULT_FUEL,
              value_parser = clap::value_parser!(u64).range(1..))]
        fuel: u64,
        /// Print relators as flat letter strings (capitals are inverses)
        #[arg(long)]
        flat: bool,
        /// Print the simplification log
        #[arg(long)]
        steps: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamilyCmd {
    /// Evaluate a named family on a surgery slope
    Eval {
        name: String,
        #[arg(allow_hyphen_values = true, value_parser = parse_slope)]
        surgery: Slope,
    },
    /// List the registered families
    List,
}

#[derive(Debug, Subcommand)]
pub enum SurgeryCmd {
    /// K(p/q, r/s) for an n-strand braid closure with a solid-torus r/s filling
    Formula {
        strands: i64,
        #[arg(allow_hyphen_values = true, value_parser = parse_slope)]
        surgery: Slope,
        #[arg(allow_hyphen_values = true, value_parser = parse_slope)]
        filling: Slope,
    },
    /// Coefficients x, y with y*n^2*s - x*r = 1
    Coeffs {
        strands: i64,
        #[arg(allow_hyphen_values = true, value_parser = parse_slope)]
        filling: Slope,
    },
}

#[derive(Debug, Subcommand)]
pub enum BraidCmd {
    /// Strand count, exponent sum and pseudo-Anosov criterion for a braid word
    Check {
        /// Comma-separated signed generator indices, e.g. 1,2,-3
        #[arg(allow_hyphen_values = true, value_parser = parse_braid)]
        word: BraidWord,
        /// Strand count, if larger than the word requires
        #[arg(long)]
        strands: Option<i64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum DistanceCmd {
    /// Bounds on d and d_H between two lens spaces
    Report {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        /// Degeneracy slope of the braid closure, to grade witnesses
        #[arg(long, allow_hyphen_values = true, value_parser = parse_slope)]
        degeneracy: Option<Slope>,
    },
    /// Family members one hyperbolic surgery away from a lens space
    Witnesses {
        #[arg(allow_hyphen_values = true)]
        lens: String,
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long = "from", allow_hyphen_values = true, default_value_t = 1)]
        q_min: i64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_slope)]
        degeneracy: Option<Slope>,
    },
    /// The 18/1 and 19/1 fillings of p/q' surgery
    Pair {
        p: i64,
        #[arg(allow_hyphen_values = true)]
        q_prime: i64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_slope)]
        degeneracy: Option<Slope>,
    },
}

fn parse_slope(s: &str) -> Result<Slope, String> {
    s.parse().map_err(|e: lensdist_core::Error| e.to_string())
}

fn parse_braid(s: &str) -> Result<BraidWord, String> {
    s.parse().map_err(|e: lensdist_core::Error| e.to_string())
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once("..").ok_or("expected LO..HI")?;
    let lo = lo.trim().parse().map_err(|_| format!("`{lo}` is not an integer"))?;
    let hi = hi.trim().parse().map_err(|_| format!("`{hi}` is not an integer"))?;
    if lo > hi {
        return Err("empty range".into());
    }
    Ok((lo, hi))
}
