use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group descriptor `{0}`")]
    InvalidSpec(String),

    #[error("{what} exceeds size guard: {got} > {limit}")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("vertex count mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("Cayley table is not a group: {0}")]
    NotAGroup(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("invalid central cover: {0}")]
    InvalidCover(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("argument {got} outside supported range (max {max})")]
    BoundExceeded { got: u64, max: u64 },

    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),

    #[error("result cap of {0} exceeded")]
    CapExceeded(usize),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph has no transitive orientation; forcing conflict at edges {witness:?}")]
    NoTransitiveOrientation { witness: Vec<(usize, usize)> },

    #[error("Jordan certificate is indeterminate for this pair")]
    Indeterminate,

    #[error("subgroup family does not cover every non-identity element (missing {0})")]
    CoverageViolation(usize),

    #[error("{0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by size guards rather than malformed input.
    pub fn is_size_guard(&self) -> bool {
        matches!(
            self,
            Error::SizeGuard { .. } | Error::CapExceeded(_) | Error::BoundExceeded { .. }
        )
    }
}
