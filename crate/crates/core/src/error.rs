use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("subspace is not contained in the ambient space")]
    Containment,
    #[error("not a cocycle: {0}")]
    NotCocycle(String),
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("generators do not generate the algebra")]
    NotGenerating,
    #[error("inconsistent generator images")]
    Inconsistent,
    #[error("generator images do not generate the target")]
    ImageNotGenerating,
    #[error("zero annihilator")]
    ZeroAnnihilator,
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("guard violated: {0}")]
    Guard(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
