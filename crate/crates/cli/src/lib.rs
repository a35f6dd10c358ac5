//! Command-line front end: reading tables, law-check suites and stored witnesses.

pub mod input;
pub mod report;
pub mod suites;
pub mod witnesses;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}:{line}: {msg}")]
    Parse { path: String, line: usize, msg: String },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] contscope::Error),
}

impl CliError {
    pub fn parse(path: &str, line: usize, msg: impl Into<String>) -> Self {
        CliError::Parse { path: path.to_string(), line, msg: msg.into() }
    }
}

/// Exit status: checks passed.
pub const EXIT_OK: i32 = 0;
/// Exit status: at least one check failed.
pub const EXIT_FAILED: i32 = 1;
/// Exit status: unreadable or inconsistent input.
pub const EXIT_INPUT: i32 = 2;
