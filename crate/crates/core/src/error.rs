use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("enumeration needs {needed} items but the budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("the code is the zero code")]
    ZeroCode,

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("matrix is empty or ragged")]
    BadShape,

    #[error("matrix is not square")]
    NotSquare,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("border requires gamma = +beta or gamma = -beta")]
    BadBorder,

    #[error("code is not self-dual")]
    NotSelfDual,

    #[error("division by {divisor} is not exact")]
    NonExactDivision { divisor: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("symbolic expansion too large (length {0})")]
    ExpansionTooLarge(usize),

    #[error("vector of odd length {0} has no Gray preimage")]
    OddLength(usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Io(String),

    #[error("no table {0}")]
    NoTable(u8),
}

pub type Result<T> = std::result::Result<T, CodeError>;
