use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("degenerate code: {0}")]
    DegenerateCode(String),

    #[error("duplicate codeword: words {first} and {second} are equal")]
    DuplicateWord { first: usize, second: usize },

    #[error("pair enumeration needs {needed} ordered pairs, budget is {budget}")]
    PairBudgetExceeded { needed: u128, budget: u64 },

    #[error("channel with p = 0 has infinite r")]
    InfiniteR,

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("variable x{index} out of range for m = {m}")]
    VariableOutOfRange { index: usize, m: u32 },

    #[error("too large: {0}")]
    TooLarge(String),

    #[error("functions {first} and {second} agree on every evaluation point")]
    Collision { first: usize, second: usize },

    #[error("function is not bent")]
    NotBent,

    #[error("modulus {modulus:#x} is not irreducible of degree {degree}")]
    Reducible { modulus: u32, degree: u32 },

    #[error("field element context mismatch ({left:#x} vs {right:#x})")]
    ContextMismatch { left: u32, right: u32 },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
