//! Brute-force cross-checks of the curve homology computed from the tree.
//!
//! The truncation oracle groups branches by their truncated series. The
//! covering oracle realizes each projection between levels as simplicial
//! circle covers and reads the induced maps off integer homology.

mod covering;
mod crosscheck;
mod random;
mod truncation;

pub use covering::{covering_maps, CircleCover};
pub use crosscheck::{crosscheck, Check, CrosscheckReport};
pub use random::{random_curve, random_curves, random_irreducible, CurveSpec};
pub use truncation::{truncation_components, TruncationClass};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("levels out of order: {b1} < {b2}")]
    Order { b1: String, b2: String },
    #[error("level {0} is below 1")]
    BelowOne(String),
    #[error("sheet multiplicity {upper} is not a multiple of base multiplicity {lower}")]
    Divisibility { upper: String, lower: String },
    #[error(transparent)]
    Simplicial(#[from] crate::simplicial::SimplicialError),
}
