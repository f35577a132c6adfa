//! Library half of the `stableform` binary: report builders for the
//! classify / pipeline / curvature commands and the seeded
//! verification engine behind `verify`.

pub mod report;
pub mod verify;

use thiserror::Error;

/// Top-level failure classes, keyed to the process exit codes: 1 for
/// a failed verification, 2 for unreadable or invalid input, 3 for
/// inputs outside the mathematical domain of the requested map.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Input(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}
