use thiserror::Error;

use crate::spec::AlgebraSpec;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("algebra mismatch: {left} vs {right}")]
    SpecMismatch { left: AlgebraSpec, right: AlgebraSpec },

    #[error("generator index x{index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("invalid algebra: {0}")]
    InvalidSpec(String),

    #[error("wrong variety: expected {expected}, got {got}")]
    WrongVariety { expected: &'static str, got: AlgebraSpec },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("word {0} is not a Lyndon word")]
    NotLyndon(String),

    #[error("element is not a Lie element: {0}")]
    NotLieElement(String),

    #[error("module action requires an element of the commutator ideal (nonzero linear part)")]
    NonzeroLinearPart,

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("linear map is not invertible: {0}")]
    Singular(String),

    #[error("only linear substitutions are supported on the free Lie algebra")]
    NonlinearFreeSubstitution,

    #[error("linear system has no unique solution: {0}")]
    NoUniqueSolution(String),

    #[error("image count {got} does not match rank {rank}")]
    ImageCount { got: usize, rank: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
