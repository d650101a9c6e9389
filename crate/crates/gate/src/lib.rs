//! Command-line front end for `torsion-core`: report formatting, a cached
//! and multi-threaded search engine, and the subcommands.

pub mod cache;
pub mod cli;
pub mod commands;
pub mod engine;
pub mod error;
pub mod report;

pub use cli::RunConfig;
pub use commands::{run, Output, CASE_LEVELS, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE};
pub use engine::ParallelEngine;
pub use error::{GateError, Result};
