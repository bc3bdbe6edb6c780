//! Command-line front end for `shifted-voa`: JSON job configs in, text
//! tables or JSON reports out.

pub mod commands;
pub mod config;

pub use commands::{CliError, Report, Suite};
pub use config::{ConfigError, JobConfig};
