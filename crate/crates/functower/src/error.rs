//! Crate-wide error type.

use std::fmt;

use crate::series::Monomial;

/// Errors arising from data-dependent preconditions. Structural misuse
/// (mismatched variable counts, out-of-range indices) panics instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An operation required a reduced series (no terms of arity degree 0).
    NotReduced { context: &'static str },
    /// `log` requires the arity-degree-0 part to be exactly 1.
    ConstantTermNotOne,
    /// Requested order exceeds the truncation order of an input series.
    OrderTooLarge { requested: u32, available: u32 },
    /// The degree-by-degree solver hit an inconsistent equation: after
    /// pinning the new coefficient the residual was still nonzero here.
    SolverInconsistent { monomial: Monomial },
    /// No dimension-series model is defined for the requested kind.
    UnsupportedModel { kind: &'static str },
    /// Plethysm input had terms in odd q-degree, where sign conventions
    /// for symmetrization are not defined here.
    OddQDegree { monomial: Monomial },
    /// Plethysm input must have non-negative integer coefficients.
    NonIntegerInput { monomial: Monomial },
    /// A dimension count came out non-integral or negative; this indicates
    /// an internal inconsistency, not bad user input.
    NonIntegerOutput { monomial: Monomial },
    /// Enumeration was refused because the search space is too large.
    BudgetExceeded { size: u128, budget: u128 },
    /// The input series is not concentrated in q-degree 0 with a
    /// non-negative integer value.
    NotConstantDimension,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotReduced { context } => {
                write!(f, "{context}: argument must be reduced (no arity-degree-0 terms)")
            }
            Error::ConstantTermNotOne => {
                write!(f, "log: arity-degree-0 part of the argument must be exactly 1")
            }
            Error::OrderTooLarge { requested, available } => write!(
                f,
                "requested order {requested} exceeds input truncation order {available}"
            ),
            Error::SolverInconsistent { monomial } => {
                write!(f, "functional equation inconsistent at monomial {monomial}")
            }
            Error::UnsupportedModel { kind } => {
                write!(f, "no dimension-series model is defined for kind {kind}")
            }
            Error::OddQDegree { monomial } => {
                write!(f, "plethysm input has odd q-degree term {monomial}")
            }
            Error::NonIntegerInput { monomial } => write!(
                f,
                "plethysm input must have non-negative integer coefficients; offending term {monomial}"
            ),
            Error::NonIntegerOutput { monomial } => write!(
                f,
                "internal consistency error: non-integer dimension at {monomial}"
            ),
            Error::BudgetExceeded { size, budget } => {
                write!(f, "enumeration of {size} words exceeds budget {budget}")
            }
            Error::NotConstantDimension => write!(
                f,
                "input must be concentrated in q-degree 0 with non-negative integer dimension"
            ),
        }
    }
}

impl std::error::Error for Error {}
