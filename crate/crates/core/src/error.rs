use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("specialization pole")]
    SpecializationPole,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("insufficient rank: need at least {needed}, got {got}")]
    InsufficientRank { needed: usize, got: usize },
    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("position {position} out of range for degree {degree}")]
    PositionOutOfRange { position: usize, degree: usize },
    #[error("mode mismatch: {0} vs {1}")]
    ModeMismatch(String, String),
    #[error("superspace mismatch")]
    SignatureMismatch,
    #[error("operator is not degree preserving (shift {0})")]
    NotDegreePreserving(i64),
    #[error("element does not lie in the module: {0}")]
    OutsideModule(String),
    #[error("matrix size mismatch: {0}")]
    SizeMismatch(String),
    #[error("module dimension {dim} exceeds cap {cap}")]
    ResourceCap { dim: usize, cap: usize },
    #[error("unknown relation: {0}")]
    UnknownRelation(String),
    #[error("unknown check: {0}")]
    UnknownCheck(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
