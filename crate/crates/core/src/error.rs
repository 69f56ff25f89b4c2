use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown Dynkin label `{0}`")]
    UnknownLabel(String),
    #[error("rank {rank} is outside the range of family {family}")]
    RankOutOfRange { family: char, rank: usize },
    #[error("enumeration requires simply-laced; use `count` for {0}")]
    Unsupported(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("catalog construction failed: {0}")]
    Construction(String),
    #[error("vector length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("malformed map: {0}")]
    MalformedMap(String),
    #[error("internal arithmetic error: {0}")]
    Arithmetic(String),
    #[error("objects live in different orbit categories")]
    AmbientMismatch,
    #[error("set kinds differ or are not ordered")]
    KindMismatch,
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = core::result::Result<T, Error>;
