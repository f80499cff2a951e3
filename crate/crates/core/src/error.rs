use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },
    #[error("division leaves a nonzero remainder")]
    NonzeroRemainder,
    #[error("divisor must be nonzero and free of x-variables")]
    BadDivisor,
    #[error("index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("parts sum to {sum}, expected {n}")]
    PartsSumMismatch { n: usize, sum: usize },
    #[error("cell ({col},{row}) is not in the diagram")]
    CellOutsideDiagram { col: usize, row: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("columns have different heights ({0} and {1})")]
    HeightMismatch(usize, usize),
    #[error("columns {0} and {1} are identical, no flip row exists")]
    IdenticalColumns(usize, usize),
    #[error("shape is not weakly increasing")]
    NotWeaklyIncreasing,
    #[error("need at least {needed} variables, got {nvars}")]
    TooFewVariables { needed: usize, nvars: usize },
    #[error("not quasisymmetric: coefficient of {left:?} differs from {right:?}")]
    NotQuasisymmetric { left: Vec<u32>, right: Vec<u32> },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
