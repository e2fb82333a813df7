use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cyclotomic modulus mismatch: {0} vs {1}")]
    ModulusMismatch(usize, usize),
    #[error("series exponential needs a zero constant term")]
    NonzeroConstantTerm,
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group closure exceeds limit {limit}")]
    ClosureTooLarge { limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("invalid subgroup embedding: {0}")]
    InvalidEmbedding(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("size {size} exceeds limit {limit}")]
    SizeExceeded { size: u128, limit: u128 },
    #[error("invalid group action: {0}")]
    InvalidAction(String),
    #[error(
        "orbifold Euler characteristic disagreement: commuting pairs {pairs} vs sectors {sectors}"
    )]
    EulerDisagreement { pairs: String, sectors: String },
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
