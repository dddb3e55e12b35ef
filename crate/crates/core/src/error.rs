use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed face {face:?}: {reason}")]
    MalformedFace { face: Vec<usize>, reason: String },
    #[error("not a sphere: {0}")]
    NotASphere(String),
    #[error("sphere has a non-triangular face of length {0}")]
    NotSimplicial(usize),
    #[error("too many vertices: {n} (limit {limit})")]
    TooManyVertices { n: usize, limit: usize },
    #[error("face {0:?} is not a face of the triangulation")]
    FaceNotPresent([usize; 3]),
    #[error("vertex count {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("b2 = {0} does not correspond to any simplicial 3-polytope")]
    NotRealizable(i64),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("invalid gluing: {0}")]
    InvalidGluing(String),
    #[error("{0:?} is not a 3-belt")]
    NotABelt(Vec<usize>),
    #[error("invalid vertex split: {0}")]
    InvalidSplit(String),
    #[error("unknown polytope name `{0}`")]
    UnknownName(String),
    #[error("census is incomplete for n = {0}")]
    IncompleteCensus(usize),
    #[error("corrupt census database: {0}")]
    CorruptDatabase(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid canonical code: {0}")]
    InvalidCode(String),
    #[error("homology differs between coefficient fields at W = {0:?}")]
    FieldMismatch(Vec<usize>),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
