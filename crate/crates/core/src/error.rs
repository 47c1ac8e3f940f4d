use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different fields (GF({left}) vs GF({right}))")]
    FieldMismatch { left: u32, right: u32 },

    #[error("unsupported field size {0}")]
    UnsupportedField(u32),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("invalid argument: {0}")]
    Usage(String),

    #[error("no coset leader available for syndrome")]
    DecodeFailure,

    #[error("coset leader needs {needed} changes, bound is {bound}")]
    BoundExceeded { needed: usize, bound: usize },

    #[error("dry part of the parity check has rank {rank} < {required}; system unsolvable")]
    RankDeficient { rank: usize, required: usize },

    #[error("randomized embedding infeasible: {0}")]
    Infeasible(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("no randomization level yields a positive payload")]
    NoFeasiblePlan,

    #[error("stego data carries the embedding-failure marker")]
    EmbeddingFailure,

    #[error("parse error: {0}")]
    Parse(String),
}
