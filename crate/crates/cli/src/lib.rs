//! Command-line front end for `modset`: definition files, a set expression
//! parser, and the subcommands behind the `modset` binary.

pub mod commands;
pub mod error;
pub mod expr;
pub mod format;
pub mod workspace;

pub use commands::{run, Outcome};
pub use error::CliError;
pub use expr::{parse_expression, ParseError, SetExpr};
pub use workspace::Workspace;
