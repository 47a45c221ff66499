use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group too large: order exceeds cap {cap}")]
    GroupTooLarge { cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPerm(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("unit law fails on basis element {0}")]
    UnitLaw(usize),

    #[error("subspace not closed: {0}")]
    NotClosed(String),

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("field too small: residue fields need F_(p^{required_degree})")]
    FieldTooSmall { required_degree: u32 },

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("invalid group spec {spec:?}: {reason}")]
    InvalidSpec { spec: String, reason: String },

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
