use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {}: {source}", path.display())]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cannot write {}: {source}", path.display())]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A lexical resource loaded but is unusable.
    #[error("resource {}: {message}", path.display())]
    Resource { path: PathBuf, message: String },

    #[error("{}:{line}: {message}", path.display())]
    Config {
        path: PathBuf,
        line: usize,
        message: String,
    },

    /// Malformed corpus, annotation or record data.
    #[error("{}:{line}: {message}", path.display())]
    Data {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("gazetteer type must be PER, LOC or ORG, got {0}")]
    NotPlo(crate::text::NeType),

    #[error("entry {entry:?} has {count} diacritic positions, above the expansion cap of {cap}")]
    TooManyVariants {
        entry: String,
        count: usize,
        cap: usize,
    },

    #[error("invalid span {start}..{end}")]
    InvalidSpan { start: usize, end: usize },
}

impl Error {
    /// Process exit code: 1 for bad input data, 2 for resource or configuration problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Data { .. } | Error::InvalidSpan { .. } => 1,
            _ => 2,
        }
    }
}
