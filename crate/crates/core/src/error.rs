use alloc::string::String;

/// Errors raised by the exact engine.
///
/// Variants marked "internal" indicate an arithmetic or convention bug rather
/// than bad input: a division that the mathematics guarantees to be exact left
/// a remainder.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("letter {letter} out of range for S_{n}")]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("weight is not strictly increasing: {0}")]
    NotStrictlyDominant(String),
    #[error("invalid face diagram: {0}")]
    InvalidFace(String),
    #[error("face diagram mixes L and R edges")]
    MixedFace,
    #[error("face is not a reduced Kogan face")]
    NotReducedKogan,
    #[error("face has no lattice points")]
    EmptyFace,
    #[error("row {row} out of range for rank {n}")]
    RowOutOfRange { row: usize, n: usize },
    #[error("variable index {index} out of range ({nvars} variables)")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("internal: inexact division in {0}")]
    InexactDivision(&'static str),
    #[error("internal: {0}")]
    Internal(String),
    #[error("paradiagram is not reduced: {0}")]
    NotReduced(String),
    #[error("invalid paradiagram: {0}")]
    InvalidParadiagram(String),
    #[error("paradiagram {diagram} inconsistent with parallelepiped: {reason}")]
    InconsistentDiagram { diagram: String, reason: String },
    #[error("invalid parallelepiped: {0}")]
    InvalidParallelepiped(String),
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("pairing needs total degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("structure constant is not a nonnegative integer: {0}")]
    NonIntegral(String),
    #[error("preconditions of the exchange construction fail: {0}")]
    WitnessPrecondition(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
