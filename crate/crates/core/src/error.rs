use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported atom `{0}`")]
    UnsupportedAtom(String),
    #[error("truncation mismatch: {left} vs {right}")]
    Shape { left: usize, right: usize },
    #[error("derivative of a truncation-0 sequence is empty")]
    EmptyResult,
    #[error("composition requires an inner argument with no structures on the empty set")]
    CompositionDomain,
    #[error("logarithm requires constant coefficient 1")]
    LogarithmDomain,
    #[error("index {index} exceeds truncation {truncation}")]
    OutOfTruncation { index: usize, truncation: usize },
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("expression error: {0}")]
    Expression(String),
    #[error("enumeration of size {n} exceeds the budget {budget} for {model}")]
    BudgetExceeded { n: usize, budget: usize, model: &'static str },
    #[error("malformed structure: {0}")]
    Structure(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
