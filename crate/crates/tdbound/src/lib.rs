//! File formats, parallel drivers and subcommands for the `tdbound` binary.

pub mod commands;
pub mod error;
pub mod output;
pub mod parallel;

pub use error::{CliError, Result};
pub use output::{Cell, Format, Table};
