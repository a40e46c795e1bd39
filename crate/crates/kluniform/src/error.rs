use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: kluniform_core::Error,
    },
    #[error(transparent)]
    Core(#[from] kluniform_core::Error),
    #[error("no census source for n = {n}: brute force stops at 6, pass a catalog")]
    SourceUnavailable { n: usize },
    #[error("catalog mixes ground set sizes {expected} and {found}")]
    MixedCatalog { expected: usize, found: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}
