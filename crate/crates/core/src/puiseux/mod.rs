//! Puiseux parametrizations `y = Σ α_s x^s` of plane curve branches, the
//! text format they are written in, and the classical branch invariants.

mod curve;
mod parse;
mod series;

pub use curve::{Branch, ConjugacyWarning, Curve};
pub use parse::parse_series;
pub use series::{PuiseuxPair, PuiseuxSeries, Term};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PuiseuxError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent {0} is below 1; change coordinates so the branch is transverse to the y-axis")]
    ExponentBelowOne(String),
    #[error("zero coefficient at exponent {0}")]
    ZeroCoefficient(String),
    #[error("exponent {0} appears more than once")]
    RepeatedExponent(String),
    #[error("duplicate branch: {0} and {1} have identical parametrizations")]
    DuplicateBranch(String, String),
    #[error("branch id {0:?} is used twice")]
    DuplicateId(String),
    #[error("a curve needs at least one branch")]
    EmptyCurve,
    #[error("invalid curve JSON: {0}")]
    Json(String),
}
