use std::path::PathBuf;

use cayrec_core::oracle::{Class, Model, TableKey};
use cayrec_core::psi::RecurrentLabel;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "cayrec", version, about = "Exact counts of recurrent functional digraphs, with brute-force checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a counting sequence indexed by n.
    Seq(SeqArgs),
    /// Emit an sdiff triangle or a two-sort count table.
    Table(TableArgs),
    /// Count maps of [n] by enumeration.
    Count(CountArgs),
    /// Compare formulas with enumeration; exit 1 on any mismatch.
    Verify(VerifyArgs),
    /// Show the doubly-rooted tree of an endofunction.
    Joyal(JoyalArgs),
    /// Check identities exactly; exit 1 on any failure.
    Check(CheckArgs),
    /// Emit exact ratios with decimal renderings.
    Report(ReportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn parse_class(s: &str) -> Result<Class, String> {
    s.parse().map_err(|e: cayrec_core::Error| e.to_string())
}

fn parse_model(s: &str) -> Result<Model, String> {
    s.parse().map_err(|e: cayrec_core::Error| e.to_string())
}

fn parse_label(s: &str) -> Result<RecurrentLabel, String> {
    s.parse().map_err(|e: cayrec_core::Error| e.to_string())
}

fn parse_key(s: &str) -> Result<TableKey, String> {
    s.parse().map_err(|e: cayrec_core::Error| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqKind {
    /// Cayley permutations.
    Cay,
    /// Endofunctions.
    End,
    /// Cayley permutations without fixed points.
    Cayder,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    #[arg(value_enum)]
    pub kind: SeqKind,
    /// all, tree, forest, connected, derangement, cayley, idempotent(k), indegree_bounded(k)
    #[arg(long, value_parser = parse_class)]
    pub class: Option<Class>,
    /// Recurrent structure such as S, C, Der or E_3; overrides --class.
    #[arg(long, visible_alias = "R", value_parser = parse_label, conflicts_with = "class")]
    pub structure: Option<RecurrentLabel>,
    #[arg(long)]
    pub nmax: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Sdiff,
    Psi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    /// Closed form through sdiff.
    Formula,
    /// Three-case recursion.
    Recursive,
    /// Composition with two-sort trees.
    Composition,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub kind: TableKind,
    /// Separation index of the sdiff triangle.
    #[arg(long)]
    pub r: Option<usize>,
    /// Recurrent structure of the psi table.
    #[arg(long, visible_alias = "R", value_parser = parse_label, default_value = "S")]
    pub structure: RecurrentLabel,
    #[arg(long, value_enum, default_value_t = Route::Formula)]
    pub route: Route,
    #[arg(long)]
    pub nmax: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_model, default_value = "cayley")]
    pub model: Model,
    #[arg(long, value_parser = parse_class, default_value = "all")]
    pub class: Class,
    /// Group by (i, j) or (i, j, r).
    #[arg(long, value_parser = parse_key)]
    pub by: Option<TableKey>,
    /// Enumerate beyond the default size limits.
    #[arg(long)]
    pub override_budget: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub nmax: usize,
    #[arg(long, value_parser = parse_model, default_value = "cayley")]
    pub model: Model,
    /// Defaults to all, tree, forest, connected and derangement.
    #[arg(long, value_parser = parse_class)]
    pub class: Option<Class>,
    #[arg(long)]
    pub override_budget: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Export {
    Dot,
}

#[derive(Debug, Args)]
pub struct JoyalArgs {
    #[arg(long)]
    pub n: usize,
    /// Images of 1..n, as digits (`693163933`) or comma-separated.
    #[arg(long)]
    pub input: String,
    #[arg(long, value_enum, default_value_t = Export::Dot)]
    pub export: Export,
    /// Write PREFIX-digraph.dot and PREFIX-tree.dot instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckTarget {
    Identities,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub target: CheckTarget,
    #[arg(long)]
    pub nmax: usize,
    /// Recurrent structures to check, comma-separated.
    #[arg(long, visible_alias = "R", value_parser = parse_label, value_delimiter = ',', default_value = "S,Der")]
    pub structure: Vec<RecurrentLabel>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportTarget {
    Asymptotics,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(value_enum)]
    pub target: ReportTarget,
    #[arg(long)]
    pub nmax: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}
