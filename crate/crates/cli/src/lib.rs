//! Library side of the `fairdiv` command: document I/O, the regression
//! corpus and the command implementations.

pub mod commands;
pub mod config;
pub mod corpus;
pub mod error;
pub mod io;

pub use commands::{run, Outcome};
pub use config::{Command, Format, RunConfig};
pub use error::CliError;
