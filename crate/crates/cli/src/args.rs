use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "sheaf-census",
    version,
    about = "Character sheaf censuses for spin symmetric pairs"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Write output to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List nilpotent K-orbits with their component-group data.
    Orbits {
        #[command(subcommand)]
        pair: OrbitPair,
    },
    /// Enumerate character sheaves by support stratum.
    Census {
        #[command(subcommand)]
        pair: CensusPair,
    },
    /// Run the identity suite.
    Verify(VerifyArgs),
    /// Expand a product expression.
    Series(SeriesArgs),
}

#[derive(Debug, Subcommand)]
pub enum OrbitPair {
    Bdi {
        #[command(flatten)]
        sig: BdiSig,
        /// Keep only one class.
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        /// Keep only Richardson diagrams (Σ_b).
        #[arg(long)]
        richardson: bool,
    },
    Diii {
        #[arg(long)]
        n: u32,
        /// Keep only Richardson diagrams (Λ_b).
        #[arg(long)]
        richardson: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Sigma1,
    Sigma2,
    Sigma3,
}

#[derive(Debug, Args)]
pub struct BdiSig {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub q: u32,
}

#[derive(Debug, Subcommand)]
pub enum CensusPair {
    Bdi {
        #[command(flatten)]
        sig: BdiSig,
        #[command(flatten)]
        opts: CensusOpts,
    },
    Diii {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        opts: CensusOpts,
    },
}

#[derive(Debug, Args)]
pub struct CensusOpts {
    #[arg(long, value_enum, default_value_t = CentralArg::Both)]
    pub central: CentralArg,
    #[arg(long, value_enum, default_value_t = SubsetArg::All)]
    pub subset: SubsetArg,
    /// Cross-check totals against the closed formulas; exit 1 on mismatch.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CentralArg {
    K0,
    K1,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SubsetArg {
    All,
    Cuspidal,
    Nilpotent,
    Full,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `all` or a comma-separated list of check ids.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, env = "SHEAF_CENSUS_ORDER", default_value_t = 40)]
    pub order: usize,
    /// Largest p + q for census sweeps.
    #[arg(long, default_value_t = 24)]
    pub sweep: u32,
    /// Largest p + q for orbit-by-orbit sums.
    #[arg(long, default_value_t = 20)]
    pub k1_sweep: u32,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long)]
    pub expr: String,
    #[arg(long, env = "SHEAF_CENSUS_ORDER", default_value_t = 40)]
    pub order: usize,
    /// Print only the coefficient of x^k.
    #[arg(long, value_name = "K")]
    pub coeff: Option<usize>,
}
