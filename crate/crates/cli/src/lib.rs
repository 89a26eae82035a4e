//! Library side of the `suzuki-chars` command: parameter parsing, the
//! table document format and the acceptance corpus runner.

pub mod acceptance;
pub mod document;
pub mod params;

use std::fmt;

pub use acceptance::{run_acceptance, CriterionOutcome, Deviation, KNOWN_DEVIATIONS};
pub use document::{CharacterEntry, ClassEntry, Metadata, TableDocument};
pub use params::{parse_list, GroupSpec};

/// A failed command, classified by exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Verification found a counterexample (exit 1).
    Verification(String),
    /// The group parameters are invalid (exit 2).
    Params(String),
    /// Unreadable, unwritable or ill-formed files (exit 3).
    Io(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Params(_) => 2,
            Failure::Io(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Verification(m) => write!(f, "verification failed: {m}"),
            Failure::Params(m) => write!(f, "invalid parameters: {m}"),
            Failure::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl std::error::Error for Failure {}
