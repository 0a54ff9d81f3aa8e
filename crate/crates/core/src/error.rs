use thiserror::Error;

use crate::poly::Basis;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable mismatch: `{left}` vs `{right}`")]
    VariableMismatch { left: String, right: String },

    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: Basis, right: Basis },

    #[error("operation requires the monomial basis, got {0}")]
    NotMonomial(Basis),

    #[error("degree {degree} does not fit in the gamma basis of degree bound {bound}")]
    GammaDegreeOverflow { degree: usize, bound: usize },

    #[error("{what}: n = {n} exceeds the enumeration budget (max {max})")]
    BudgetExceeded { what: &'static str, n: usize, max: usize },

    #[error("{what}: n = {n} is outside the domain")]
    Domain { what: &'static str, n: usize },

    #[error("malformed partition at column {column}: {message}")]
    Partition { column: usize, message: String },

    /// A computed quantity violated a property that the mathematics guarantees.
    #[error("internal consistency failure in {what}: {detail}")]
    Inconsistent { what: &'static str, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
