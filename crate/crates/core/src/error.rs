//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("a point needs at least one coordinate")]
    ZeroDimension,

    #[error("coordinate {0} is not finite")]
    NonFinite(f64),

    #[error("empty input")]
    EmptyInput,

    #[error("degenerate segment: endpoints closer than {eps}")]
    DegenerateSegment { eps: f64 },

    #[error("invalid box: lo[{axis}] = {lo} exceeds hi[{axis}] = {hi}")]
    InvalidBox { axis: usize, lo: f64, hi: f64 },

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid dimensions must be sorted ascending, got {0:?}")]
    UnsortedDims(Vec<usize>),

    #[error("out of domain: {0}")]
    Domain(String),

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("malformed chain document: {0}")]
    Parse(String),

    #[error("unsupported projection {projection} for a {dim}-dimensional chain")]
    UnsupportedProjection { projection: String, dim: usize },
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
