//! Configuration, command dispatch and reports for the `thl` binary.

pub mod config;
pub mod error;
pub mod report;
pub mod run;

pub use config::{load_config, parse_config, Format, JobConfig};
pub use error::CliError;
pub use report::{emit, emit_human, emit_machine, parse_machine, Report, Row, Verdict};
pub use run::{run, COMMANDS};
