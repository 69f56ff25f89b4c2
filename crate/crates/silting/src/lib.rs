//! Command-line front end and IO for `silting-core`: argument parsing,
//! JSON/CSV/DOT/text output, and a rayon-backed search runner.

pub mod app;
pub mod args;
pub mod model;
pub mod runner;

pub use app::{execute, CliError, Outcome};
pub use args::Cli;
pub use runner::RayonRunner;

/// JSON schema describing every JSON output of the command-line tool.
pub const OUTPUT_SCHEMA: &str = include_str!("../../../docs/output.schema.json");
