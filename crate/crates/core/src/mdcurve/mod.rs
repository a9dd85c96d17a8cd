//! MD homology of plane curve germs with the outer metric.
//!
//! For `b >= 1` both `MDH_0^b` and `MDH_1^b` are free of rank `l_b`, the
//! number of points of the Eggers-Wall tree just above height `b`. A point
//! `p'` above `b1` maps to the point `p` below it above `b2`: in degree 0 by
//! 1, in degree 1 by the weight ratio `w(p') / w(p)`. Below 1 the groups are
//! `ℤ` in degree 0 and `0` in degree 1.

mod diagram;
mod framed;
mod table;

pub use diagram::{diagram_of_tree, md_diagram, CurveHomology};
pub use framed::{
    detect_smooth, reconstruct_tree, relative_multiplicities, tangent_lines, MultiplicityReport, TangentEntry,
    TangentLine,
};
pub use table::render_table;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MdError {
    #[error(transparent)]
    Eggers(#[from] crate::eggers::EggersError),
    #[error(transparent)]
    Diagram(#[from] crate::bdiagram::DiagramError),
    #[error("diagram is not curve-shaped: {0}")]
    NotCurveShaped(String),
}
