use thiserror::Error;

use crate::penalty::MetricViolation;
use crate::text::Symbol;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("Hamming distance is undefined for lengths {left} and {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("wildcard byte {0:?} may not appear in the alphabet")]
    WildcardInAlphabet(char),

    #[error("symbol {0:?} is declared twice in the alphabet")]
    DuplicateSymbol(char),

    #[error("byte {:?} at offset {pos} is not in the alphabet", *.byte as char)]
    UnknownByte { byte: u8, pos: usize },

    #[error("symbol {symbol} is outside an alphabet of size {sigma}")]
    SymbolOutOfRange { symbol: Symbol, sigma: usize },

    #[error("penalty matrix shape: {0}")]
    PenaltyShape(String),

    #[error("penalty matrix is not a metric: {0}")]
    NotAMetric(MetricViolation),

    #[error("index {index} outside [0, {bound}]")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("table of length {got} does not match text of length {expected}")]
    TableLength { expected: usize, got: usize },

    #[error("precomputed index was built for a different text or penalty matrix")]
    IndexMismatch,

    #[error("range-minimum query [{from}, {to}] touches unmaterialized entries")]
    Unmaterialized { from: usize, to: usize },

    #[error("search space of {candidates} candidates exceeds the budget of {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },

    #[error("expected a binary symbol, found {0}")]
    NonBinary(u8),

    #[error("input of length {got} is shorter than the required {needed}")]
    TooShort { needed: usize, got: usize },

    #[error("invalid consensus instance: {0}")]
    InvalidInstance(String),

    #[error("the Levenshtein wave algorithm needs a text without wildcards")]
    WildcardUnsupported,

    #[error("parse error: {0}")]
    Parse(String),
}
