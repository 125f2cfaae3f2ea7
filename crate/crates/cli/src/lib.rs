//! Front end for `dircat`: file formats, reports and the command implementations.

pub mod bundled;
pub mod commands;
pub mod config;
pub mod error;
pub mod module_format;
pub mod quiver_format;
pub mod report;
pub mod suite;

pub use config::RunConfig;
pub use error::{CliError, ParseError};
pub use report::{Format, Outcome};
