//! Integer simplicial homology of pairs `(L, L1)`, b-cone diagrams, and
//! the homology of curve links.

mod complex;
mod cone;
mod homology;

pub use complex::SimplicialPair;
pub use cone::{bcone_diagram, curve_link_profile, BConeDiagram};
pub use homology::{homology, induced_map, DegreeHomology, HomologyBasis, HomologyProfile};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("empty simplex")]
    EmptySimplex,
    #[error("simplex {0:?} repeats a vertex")]
    RepeatedVertex(Vec<usize>),
    #[error("subcomplex simplex {0:?} is not in the complex")]
    SubNotContained(Vec<usize>),
    #[error("vertex map does not cover vertex {0}")]
    MapDomain(usize),
    #[error("image of {0:?} is not a simplex of the target")]
    NotSimplicial(Vec<usize>),
    #[error("image of subcomplex simplex {0:?} leaves the target subcomplex")]
    SubNotPreserved(Vec<usize>),
    #[error("cone exponent must be at least 1, got {0}")]
    BelowOne(String),
    #[error("invalid complex JSON: {0}")]
    Json(String),
}
