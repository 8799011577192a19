use thiserror::Error;

use crate::word::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("empty period")]
    EmptyPeriod,
    #[error("letter {letter} exceeds the maximum {max}")]
    LetterOverflow { letter: u64, max: Letter },
    #[error("phi exponent {n} exceeds the cap {cap}")]
    PhiCapExceeded { n: usize, cap: usize },
    #[error("u_{n} would need {letters} letters, over the budget of {budget}")]
    PhiTooLong { n: usize, letters: usize, budget: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("no difference from the fixed point within {cap} letters")]
    PhiCompareCap { cap: usize },
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LyndonError {
    #[error("{0} is not an alternate Lyndon word")]
    NotLyndon(String),
    #[error("{0} has an odd minimal period ending in 0")]
    ZeroLastLetter(String),
    #[error("{0} is not a purely periodic word with minimal period ending in a nonzero letter")]
    BadCompanion(String),
    #[error("zero-entropy verdict for {0} matches no known zero-entropy word")]
    UnclassifiedZero(String),
    #[error("witness {witness} and {word} have different bases")]
    BetaMismatch { word: String, witness: String },
    #[error("letter overflow while building a candidate for {0}")]
    LetterOverflow(String),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("{0} is not an alternate Lyndon word")]
    NotLyndon(String),
    #[error("words have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("{0} is not in the language of the system")]
    NotInLanguage(String),
    #[error("{a} is greater than {b}")]
    Reversed { a: String, b: String },
    #[error("enumeration of {states} words exceeds the cap {cap}")]
    CapExceeded { states: u128, cap: u128 },
    #[error("first letter {a} must lie in 1..={max}")]
    BadLetter { a: Letter, max: Letter },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("no sign change in (1, {top}]: the word is not Lyndon or has zero entropy")]
    NoSignChange { top: u32 },
    #[error("precision of {bits} bits not reached")]
    PrecisionUnattainable { bits: u32 },
    #[error("orbit point on a digit boundary near {boundary} could not be resolved")]
    BoundaryAmbiguity { boundary: String },
    #[error("point {0} cannot be brought into the expansion interval")]
    OutOfRange(String),
    #[error("z = {z} lies outside the disk of convergence (beta <= {beta_hi})")]
    OutsideDisk { z: String, beta_hi: String },
    #[error("base must exceed 1, got {0}")]
    BaseTooSmall(String),
    #[error("division by an enclosure containing zero")]
    DivisionByZero,
    #[error("{0} is not an alternate Lyndon word")]
    NotLyndon(String),
    #[error("digit {0} does not fit in a letter")]
    DigitOverflow(String),
}

/// Umbrella error for callers that mix modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Lyndon(#[from] LyndonError),
    #[error(transparent)]
    Counting(#[from] CountingError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}
