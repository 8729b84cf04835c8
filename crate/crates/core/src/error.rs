//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^16]")]
    NotPrime(u64),

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("enumeration needs {needed} states but the budget is {budget}; raise the budget or use an algebraic criterion")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("dual codes are not orthogonal: <{c:?}, {c_prime:?}> != 0 (C_X-dual basis vector {c_index}, C_Z-dual basis vector {c_prime_index})")]
    NotOrthogonal {
        c: Vec<u64>,
        c_prime: Vec<u64>,
        c_index: usize,
        c_prime_index: usize,
    },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("columns of the basis matrix are linearly dependent")]
    DependentColumns,

    #[error("column {column} of the basis matrix lies outside the ambient code")]
    NotInAmbient { column: usize },

    #[error("the excluded code is not a subcode: generator column {column} fails a parity check")]
    NotSubcode { column: usize },

    #[error("the code has no nonzero codeword")]
    ZeroDimensional,

    #[error("check row {row} is not in the dual code")]
    CheckNotInDual { row: usize },

    #[error("distance search exhausted its budget; the minimum weight is certified to be at least {bound} but that does not decide the predicate; raise the budget")]
    DistanceInconclusive { bound: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
