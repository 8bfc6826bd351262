use alloc::string::String;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alphabet mismatch between operands")]
    AlphabetMismatch,
    #[error("letter {0} is outside the alphabet")]
    LetterOutOfRange(u32),
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("precedence is not a permutation of the alphabet")]
    BadPrecedence,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid kill set: {0}")]
    InvalidKillSet(&'static str),
    #[error("operation requires a single-vertex presentation")]
    NotLocal,
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("builtin parameter must be at least 1")]
    ZeroParameter,
    #[error("zero generator passed to completion")]
    ZeroGenerator,
    #[error("degree cap {cap} is below the generator degree {degree}")]
    CapTooSmall { cap: usize, degree: usize },
    #[error("completion exceeded its element budget below degree cap {cap}")]
    GroebnerBudget { cap: usize },
    #[error("dimension is infinite or not determined below degree cap {cap}")]
    InfiniteOrUnknown { cap: usize },
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("malformed multiplication table: {0}")]
    BadTable(&'static str),
    #[error("augmentation ideal is not nilpotent")]
    NotNilpotent,
    #[error("assignment for generator `{0}` is not in the augmentation ideal")]
    NotAugmented(String),
    #[error("assignment has {got} entries, expected {expected}")]
    AssignmentArity { expected: usize, got: usize },
    #[error("invalid presentation: {0}")]
    Invalid(crate::quiverpres::Diagnostics),
}

pub type Result<T> = core::result::Result<T, Error>;
