use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use silting_core::classify::SetKind;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "silting",
    version,
    about = "Count, enumerate and verify silting objects, simple-minded collections, simple-minded systems and cluster-tilting objects for Dynkin quivers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Ground field: `rational` or `prime:<p>`.
    #[arg(long, global = true, default_value = "rational")]
    pub field: FieldSpec,

    /// Worker threads for enumeration (default: one per core).
    #[arg(long, global = true, env = "SILTING_WORKERS")]
    pub workers: Option<usize>,

    /// Maximum number of search nodes before giving up.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,

    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Fuss-Catalan numbers from the closed formulas (any Dynkin type).
    Count(CountArgs),
    /// List every set of one kind.
    Enumerate(EnumerateArgs),
    /// Enumerate all families and check the bijections and counts between them.
    Verify(VerifyArgs),
    /// Apply mutations to an exceptional sequence read from a JSON file.
    Mutate(MutateArgs),
    /// Auslander-Reiten quiver of a window of D^b or of an orbit category.
    ExportAr(ExportArArgs),
    /// The indecomposable modules with their translates.
    Catalog(CatalogArgs),
}

#[derive(Args, Debug, Clone)]
pub struct QuiverArgs {
    /// Dynkin type, e.g. `A3`, `D_4`, `E6`.
    #[arg(long = "type")]
    pub ty: String,

    /// Arrows as 1-based vertex pairs, e.g. `1->2,3->2`.
    #[arg(long)]
    pub orientation: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct CountArgs {
    #[arg(long = "type")]
    pub ty: String,

    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub d: u32,
}

#[derive(Args, Debug, Clone)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub quiver: QuiverArgs,

    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub d: u32,

    /// silting, silting-dterm, smc, smc-plain, sms, ct, homleq0, homleq0-plain.
    #[arg(long, value_parser = parse_kind)]
    pub kind: SetKind,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub quiver: QuiverArgs,

    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub d: u32,
}

#[derive(Args, Debug, Clone)]
pub struct MutateArgs {
    /// JSON file with `type`, `sequence` and `operations`.
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct ExportArArgs {
    #[command(flatten)]
    pub quiver: QuiverArgs,

    #[arg(long, value_enum)]
    pub ambient: AmbientArg,

    /// Orbit parameter; for `derived` the window is shifts `0..=d`.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub d: u32,
}

#[derive(Args, Debug, Clone)]
pub struct CatalogArgs {
    #[command(flatten)]
    pub quiver: QuiverArgs,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmbientArg {
    Derived,
    Minus,
    Plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FromStr for FieldSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "rational" || s == "rationals" || s == "q" {
            return Ok(FieldSpec::Rational);
        }
        let p = s
            .strip_prefix("prime:")
            .ok_or_else(|| format!("expected `rational` or `prime:<p>`, got `{s}`"))?;
        p.parse()
            .map(FieldSpec::Prime)
            .map_err(|_| format!("`{p}` is not a number"))
    }
}

fn parse_kind(s: &str) -> Result<SetKind, String> {
    s.parse().map_err(|e: silting_core::Error| e.to_string())
}
