//! Command-line front end: argument parsing, JSON documents, command
//! execution and the published-example regression fixtures.

pub mod args;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod run;

pub use args::Cli;
pub use error::CliError;
pub use run::{run, Outcome, BUDGET_ENV};
