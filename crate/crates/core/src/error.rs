use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown group descriptor `{0}`")]
    UnknownDescriptor(String),

    #[error("rank {rank} out of supported range for type {kind}")]
    RankOutOfRange { kind: String, rank: usize },

    #[error("invalid root datum: {0}")]
    InvalidRootDatum(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("side mismatch: cannot compare a weight with a coweight")]
    SideMismatch,

    #[error("parabolic index {index} out of range (the datum has {simple} simple roots)")]
    IndexOutOfRange { index: usize, simple: usize },

    #[error("Weyl group order exceeds the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("weight is not dominant: pairing with simple coroot {index} is {pairing}")]
    NotDominant { index: usize, pairing: String },

    #[error("degree is not dominant P-regular: pairing with simple root {index} is {pairing}")]
    NotDominantRegular { index: usize, pairing: String },

    #[error("Weyl element is not a minimal double-coset representative")]
    NotMinimal,

    #[error("parabolic mismatch: {0:?} vs {1:?}")]
    ParabolicMismatch(Vec<usize>, Vec<usize>),

    #[error("degree classes lie over different components of the moduli")]
    ComponentMismatch,

    #[error("malformed class: {0}")]
    MalformedClass(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
