//! Command line surface. Every subcommand's arguments double as the
//! parameter block of an [`ExperimentSpec`](crate::ExperimentSpec), so a run
//! can be echoed, stored and replayed.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(
    name = "curvelab",
    version,
    about = "Invariants of curves in positive characteristic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Args, Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    #[serde(default)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    #[serde(default)]
    pub out: Option<PathBuf>,

    /// Worker threads; defaults to available parallelism.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    #[serde(default)]
    pub workers: Option<u64>,

    /// Cap on enumerated candidates.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    #[serde(default)]
    pub budget: Option<u64>,

    /// Wall-clock cap in seconds, checked between units of work.
    #[arg(long, global = true, value_parser = parse_seconds)]
    #[serde(default)]
    pub time_limit: Option<f64>,
}

fn parse_seconds(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err("time limit must be positive".into())
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Subcommand, Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "name", content = "args", rename_all = "kebab-case")]
pub enum Command {
    /// Cartier–Manin matrix, p-rank and a-number of y^2 = f(x).
    Prank(CurveArgs),
    /// Supersingular Legendre parameters.
    SsLambdas(SsLambdasArgs),
    /// Genus-2 curves branched at 0, 1, inf and three supersingular values.
    Triples(TriplesArgs),
    /// Curves of every p-rank 0..=g.
    WitnessTable(WitnessTableArgs),
    /// Invariants of the three quotients of a Klein four cover.
    Klein(KleinArgs),
    /// Point counts, L-polynomial and Newton polygon.
    Zeta(CurveArgs),
    /// Dieudonné modules from presets or direct sums.
    Dm(DmArgs),
    /// Translations lifting to W^p - W = f(X).
    AsAut(AsAutArgs),
    /// Spaces of logarithmic differentials.
    #[command(subcommand)]
    Pagot(PagotCommand),
    /// Symmetric Newton polygons.
    #[command(subcommand)]
    Np(NpCommand),
    /// Generating tuples with product one and their braid orbits.
    Nielsen(NielsenArgs),
    /// Run the acceptance suite.
    Accept(AcceptArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Prank(_) => "prank",
            Command::SsLambdas(_) => "ss-lambdas",
            Command::Triples(_) => "triples",
            Command::WitnessTable(_) => "witness-table",
            Command::Klein(_) => "klein",
            Command::Zeta(_) => "zeta",
            Command::Dm(_) => "dm",
            Command::AsAut(_) => "as-aut",
            Command::Pagot(PagotCommand::Verify(_)) => "pagot verify",
            Command::Pagot(PagotCommand::Search(_)) => "pagot search",
            Command::Pagot(PagotCommand::Family(_)) => "pagot family",
            Command::Np(NpCommand::Enum(_)) => "np enum",
            Command::Np(NpCommand::Chain(_)) => "np chain",
            Command::Nielsen(_) => "nielsen",
            Command::Accept(_) => "accept",
        }
    }
}

#[derive(Args, Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveArgs {
    #[arg(long)]
    pub p: u64,
    /// Base field GF(p^k).
    #[arg(long, default_value_t = 1)]
    #[serde(default = "one")]
    pub k: usize,
    /// Right-hand side, e.g. "x^5 + 3*x + 1"; `g` names the field generator.
    #[arg(long)]
    pub f: String,
    /// Include matrices in JSON output.
    #[arg(long)]
    #[serde(default)]
    pub matrices: bool,
}

fn one() -> usize {
    1
}

fn two() -> usize {
    2
}

#[derive(Args, Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SsLambdasArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 2)]
    #[serde(default = "two")]
    pub k: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PredicateArg {
    Ordinary,
    Prank0,
}

#[derive(Args, Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriplesArgs {
    /// Primes in `a..b` (end excluded) or `a..=b`.
    #[arg(long)]
    pub p_range: String,
    #[arg(long, value_enum)]
    pub predicate: PredicateArg,
}

#[derive(Args, Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessTableArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub g: usize,
    /// Seed for the random phase of the search.
    #[arg(long, default_value_t = 1)]
    #[serde(default)]
    pub seed: u64,
}

#[derive(Args, Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KleinArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    #[serde(default = "one")]
    pub k: usize,
    #[arg(long)]
    pub f1: String,
    #[arg(long)]
    pub f2: String,
}

#[derive(Args, Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DmArgs {
    #[arg(long, default_value_t = 3)]
    #[serde(default = "default_dm_p")]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    #[serde(default = "one")]
    pub k: usize,
    /// One of mup, Zp, alphap, M, N, Q, or relation text such as "F,V^2".
    #[arg(long, conflicts_with = "sum", required_unless_present = "sum")]
    #[serde(default)]
    pub preset: Option<String>,
    /// Direct sum such as "M,M,Zp+mup" or "M^3".
    #[arg(long)]
    #[serde(default)]
    pub sum: Option<String>,
}

fn default_dm_p() -> u64 {
    3
}

#[derive(Args, Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AsAutArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    #[serde(default = "one")]
    pub k: usize,
    #[arg(long)]
    pub f: String,
    /// Search translations in GF(p^ext).
    #[arg(long)]
    pub ext: usize,
}

#[derive(Subcommand, Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "name", content = "args", rename_all = "kebab-case")]
pub enum PagotCommand {
    /// Check every nonzero combination of the forms in a JSON file.
    Verify(PagotVerifyArgs),
    /// Exhaustive search for the two-dimensional criterion.
    Search(PagotSearchArgs),
    /// Forms attached to an F_p-independent parameter list.
    Family(PagotFamilyArgs),
}

#[derive(Args, Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PagotVerifyArgs {
    #[arg(long)]
    pub file: PathBuf,
}

#[derive(Args, Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PagotSearchArgs {
    #[arg(long)]
    pub p: u64,
    /// Zero order parameter; forms have m+1 poles.
    #[arg(long)]
    pub m: usize,
    /// Search over GF(p^ext).
    #[arg(long, default_value_t = 1)]
    #[serde(default = "one")]
    pub ext: usize,
}

#[derive(Args, Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PagotFamilyArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub n: usize,
    /// Comma separated elements of GF(p^ext); defaults to 1, g, .., g^(n-1).
    #[arg(long)]
    #[serde(default)]
    pub params: Option<String>,
    /// Defaults to n.
    #[arg(long)]
    #[serde(default)]
    pub ext: Option<usize>,
}

#[derive(Subcommand, Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "name", content = "args", rename_all = "kebab-case")]
pub enum NpCommand {
    /// All symmetric polygons of genus g with their cover relations.
    Enum(NpEnumArgs),
    /// Longest chain between two polygons.
    Chain(NpChainArgs),
}

#[derive(Args, Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NpEnumArgs {
    #[arg(long)]
    pub g: usize,
    /// Also write the Hasse diagram in DOT format.
    #[arg(long)]
    #[serde(default)]
    pub dot: Option<PathBuf>,
}

#[derive(Args, Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NpChainArgs {
    #[arg(long)]
    pub g: usize,
    /// Start polygon, e.g. "5/11x11,6/11x11"; defaults to supersingular.
    #[arg(long)]
    #[serde(default)]
    pub slopes: Option<String>,
    /// End polygon; defaults to ordinary.
    #[arg(long)]
    #[serde(default)]
    pub to: Option<String>,
}

#[derive(Args, Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NielsenArgs {
    /// Sn, An, or generators such as "(1,2,3);(1,2)".
    #[arg(long)]
    pub group: String,
    /// Degree when generators are given.
    #[arg(long)]
    #[serde(default)]
    pub degree: Option<usize>,
    /// Cycle types such as "3cyc^5" or "2cyc^2,2.2".
    #[arg(long)]
    pub classes: String,
    /// Keep tuples that do not generate the group.
    #[arg(long)]
    #[serde(default)]
    pub all: bool,
    /// Compute braid orbits.
    #[arg(long)]
    #[serde(default)]
    pub orbits: bool,
    /// Report the genus distribution.
    #[arg(long)]
    #[serde(default)]
    pub genus: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Fault {
    /// Add 1 to the constant term of the Hasse polynomial.
    Hasse,
}

#[derive(Args, Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AcceptArgs {
    /// Comma separated criterion numbers; all by default.
    #[arg(long)]
    #[serde(default)]
    pub only: Option<String>,
    /// Deliberately break one computation to check the suite notices.
    #[arg(long, value_enum)]
    #[serde(default)]
    pub inject_fault: Option<Fault>,
}
