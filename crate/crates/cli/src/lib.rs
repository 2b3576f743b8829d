//! Spec parsing, command dispatch and report rendering for `insep`.

pub mod commands;
pub mod error;
pub mod expr;
pub mod report;
pub mod spec;

pub use commands::COMMANDS;
pub use error::{CliError, CliResult};
pub use expr::{parse_expression, print_poly, print_ratfunc};
pub use report::{run, Report, SCHEMA_VERSION};
pub use spec::ProblemSpec;
