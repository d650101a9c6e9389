use std::path::PathBuf;

use clap::{value_parser, Args, Parser, Subcommand, ValueEnum};

/// Exact verification that Z/NZ is not a torsion subgroup of an elliptic
/// curve over any number field of degree d.
#[derive(Debug, Parser)]
#[command(name = "torsion-gate", version)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Directory holding cached relation matrices, one file per level.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,

    /// Worker threads; 0 uses one per core.
    #[arg(long, env = "TORSION_GATE_WORKERS", default_value_t = 0, global = true)]
    pub workers: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether Z/NZ is excluded over fields of degree d.
    Verify(VerifyArgs),
    /// Dimension of the Manin-symbol quotient with genus and cusp count.
    Homology(LevelArg),
    /// T_n(0,1) as a sum of Manin symbols.
    Hecke(HeckeArgs),
    /// Frobenius traces over F_q: classification against exhaustive count.
    Census(CensusArgs),
    /// Verify every level of the two case lists.
    Reproduce(SearchArgs),
}

#[derive(Debug, Args)]
pub struct LevelArg {
    #[arg(long = "N", value_parser = value_parser!(u64).range(1..))]
    pub level: u64,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct SearchArgs {
    /// Degree of the number field.
    #[arg(long = "d", default_value_t = 3, value_parser = value_parser!(u32).range(1..))]
    pub degree: u32,

    /// Largest prime tried as a witness.
    #[arg(long = "p-max", default_value_t = 97, value_parser = value_parser!(u64).range(3..))]
    pub p_max: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "N", value_parser = value_parser!(u64).range(1..))]
    pub level: u64,

    #[command(flatten)]
    pub search: SearchArgs,
}

#[derive(Debug, Args)]
pub struct HeckeArgs {
    #[arg(long = "N", value_parser = value_parser!(u64).range(1..))]
    pub level: u64,

    /// Hecke index.
    #[arg(long = "n", value_parser = value_parser!(u64).range(1..=30))]
    pub index: u64,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    /// Field size, an odd prime power up to 343.
    #[arg(long = "q", value_parser = value_parser!(u64).range(2..))]
    pub q: u64,

    /// Also list admissible orders divisible by N.
    #[arg(long = "N", value_parser = value_parser!(u64).range(1..))]
    pub level: Option<u64>,
}
