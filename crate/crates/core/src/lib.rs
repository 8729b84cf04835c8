//! Exact coding-theory toolkit over prime fields.
//!
//! The crate implements classical linear codes, randomized encoders with
//! zero-knowledge criteria, quantum CSS code pairs, the constructive
//! transforms between the two, and a local-testability harness. Everything is
//! computed exactly: field arithmetic is modular, probabilities are rational
//! counts, and distance searches either finish exhaustively or report a
//! certified bound.
//!
//! Conventions used throughout:
//!
//! - A generator matrix is `n x k` and codewords are `G * z` for `z` in
//!   `F^k`; a parity-check matrix is `(n - k) x n` and codewords are its
//!   kernel.
//! - Index sets are zero-based and strictly increasing.
//! - Programmer errors (mismatched fields, mismatched lengths) panic; domain
//!   and capability errors (no inverse, degenerate inputs, enumeration budget
//!   exceeded, parse failures) return [`Error`].

pub mod code;
pub mod css;
pub mod equiv;
pub mod error;
pub mod field;
pub mod format;
pub mod ltc;
pub mod matrix;
pub mod ratio;
pub mod rng;
pub mod zkenc;

pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use matrix::Matrix;
pub use ratio::Ratio;

/// Cap on the number of states an exhaustive enumeration may visit.
///
/// Operations that enumerate message spaces, randomness spaces, or candidate
/// vectors take a `Budget` and return [`Error::BudgetExceeded`] instead of
/// silently approximating when the state count is too large.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    /// Default enumeration budget: `2^22` states.
    pub const DEFAULT: Budget = Budget(1 << 22);

    /// Checks that `states` fits in the budget.
    pub fn admit(self, states: u128) -> Result<()> {
        if states > self.0 as u128 {
            Err(Error::BudgetExceeded {
                needed: states,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}
