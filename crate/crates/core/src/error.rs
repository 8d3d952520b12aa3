use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("involution split inapplicable: {0}")]
    DecompositionInapplicable(String),

    /// A connected graph has exactly one zero Laplacian eigenvalue.
    #[error("expected exactly one zero eigenvalue, found {found}")]
    ZeroEigenvalueCount { found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
