//! Command-line front end for `cubinv-core`: input files, parallel drivers,
//! checkpointed runs and JSON/CSV reports.
//!
//! Every subcommand is a plain function from parsed arguments to an
//! [`Output`](commands::Output), so the binary in `main.rs` is only argument
//! parsing and exit-code mapping.

pub mod args;
pub mod checkpoint;
pub mod commands;
pub mod drivers;
pub mod error;
pub mod input;
pub mod json;
pub mod pool;
pub mod record;
pub mod report;

pub use error::{CliError, Verdict};
