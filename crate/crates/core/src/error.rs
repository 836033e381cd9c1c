use thiserror::Error;

/// Errors raised by the computational pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("rank deficient: {0}")]
    Rank(String),

    #[error("configuration is not pointed: {0}")]
    NonPointed(String),

    #[error("resource budget exceeded: {0}")]
    Resource(String),

    #[error("weight does not induce a triangulation; non-simplicial cell {cell:?}")]
    NotTriangulation { cell: Vec<usize> },

    #[error("facet {0:?} is singular")]
    DegenerateFacet(Vec<usize>),

    #[error("fiber over {0:?} is empty")]
    NoRepresentative(Vec<i64>),

    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<usize>),

    #[error("no shelling found: {0}")]
    NoShelling(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("support violation: root {root} over facet {facet:?} leaves sigma_in")]
    SupportViolation { root: String, facet: Vec<usize> },

    #[error("unknown root {0}")]
    UnknownRoot(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
