//! Algebra file format, report documents and command implementations for the
//! `leibniz` binary.

pub mod commands;
pub mod format;
pub mod report;
pub mod spec_file;

use leibniz_core::Error as CoreError;
use thiserror::Error;

pub use commands::{run, Cli, Command, OutputFormat};
pub use format::AlgebraFile;
pub use report::ReportDocument;

/// Exit code for an affirmative result.
pub const EXIT_OK: i32 = 0;
/// Exit code for a negative verdict accompanied by a witness.
pub const EXIT_NEGATIVE: i32 = 1;
/// Exit code for usage and format errors.
pub const EXIT_USAGE: i32 = 2;
/// Exit code for unsupported inputs (non-split or undecidable).
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("format error: {0}")]
    Format(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Format(_) | CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Unsupported(_) => EXIT_UNSUPPORTED,
            CliError::Core(e) => match e {
                CoreError::NonSplitUnsupported
                | CoreError::UndecidableIrreducibility(_)
                | CoreError::NotSl2Component(_) => EXIT_UNSUPPORTED,
                CoreError::NotLeibniz(_) | CoreError::NotSemisimple | CoreError::NotLie => {
                    EXIT_NEGATIVE
                }
                _ => EXIT_USAGE,
            },
        }
    }
}
