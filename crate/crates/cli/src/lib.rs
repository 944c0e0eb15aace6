//! Command-line front end for `dasquare`: Markdown and JSON reports, SVG plots.

pub mod args;
pub mod commands;
pub mod fmt;
pub mod input;
pub mod report;
pub mod svg;

pub use args::{Cli, Command, Format};
pub use commands::run;

/// Two computations of the same quantity disagreed. Exit code 3.
#[derive(Debug)]
pub struct InvariantViolation(pub String);

/// Bad flag values not caught by argument parsing. Exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InvariantViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "internal invariant violated: {}", self.0)
    }
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InvariantViolation {}
impl std::error::Error for InputError {}

pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

/// Input problems (bad files, names, shapes, preconditions) exit with 2;
/// anything else is treated as an internal failure.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<InvariantViolation>() {
            return EXIT_INTERNAL;
        }
        if let Some(e) = cause.downcast_ref::<dasquare::Error>() {
            return match e {
                dasquare::Error::NoConvergence(_) | dasquare::Error::NotNilpotent => EXIT_INTERNAL,
                _ => EXIT_INPUT,
            };
        }
        if cause.is::<InputError>() || cause.is::<std::io::Error>() || cause.is::<csv::Error>() {
            return EXIT_INPUT;
        }
    }
    EXIT_INTERNAL
}
