//! Eggers-Wall trees: rooted trees with rational vertex heights and
//! integer edge weights whose leaves are the branches of a curve.
//!
//! The height function `r` is stored per node; a point on an edge is
//! identified by the edge (i.e. by its upper node) and a height strictly
//! between the endpoint heights.

mod build;
mod export;
mod iso;
mod tree;

pub use build::{build_tree, build_tree_from_profile, BranchProfile};
pub use export::{export_tree, parse_tree_json, TreeFormat};
pub use iso::{canonical_form, tree_isomorphic};
pub use tree::{Edge, EggersWallTree, LevelSlice, NodeId, SlicePoint};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EggersError {
    #[error("contacts of {0}, {1}, {2} are not ultrametric: the minimum contact must be attained at least twice")]
    NonArchimedean(String, String, String),
    #[error("branches {0} and {1} disagree on characteristic exponents below their contact {2}")]
    InconsistentBranches(String, String, String),
    #[error("contact {contact} of {first} and {second} is below 1")]
    ContactBelowOne {
        first: String,
        second: String,
        contact: String,
    },
    #[error(transparent)]
    Puiseux(#[from] crate::puiseux::PuiseuxError),
    #[error("level {0} is below 1; the curve diagram starts at b = 1")]
    LevelBelowOne(String),
    #[error("invalid tree: {0}")]
    Invalid(String),
    #[error("invalid tree JSON: {0}")]
    Json(String),
}
