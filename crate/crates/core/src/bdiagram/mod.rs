//! Diagrams of free ℤ-modules indexed by `b ∈ (0, ∞]`.
//!
//! A diagram is constant on the intervals `I_0 = (0,1)`, `I_j = [t_j, t_{j+1})`
//! and `I_N = [t_N, ∞]` cut out by its breakpoints `1 = t_1 < … < t_N`, and
//! is described by one step matrix per breakpoint mapping the group above it
//! to the group below.

mod compare;
mod diagram;
mod framed;
mod json;

pub use compare::{compare_unframed, invariant_signature, jumping_rates, InvariantSignature, Verdict};
pub use diagram::BDiagram;
pub use framed::{compare_framed, FramedDiagram};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("breakpoints must start at 1 and strictly increase")]
    Ladder,
    #[error("expected {expected} ranks for {breakpoints} breakpoints, got {got}")]
    RankCount {
        expected: usize,
        breakpoints: usize,
        got: usize,
    },
    #[error("expected {expected} step matrices, got {got}")]
    StepCount { expected: usize, got: usize },
    #[error("step {index} should be {rows}x{cols}")]
    StepShape { index: usize, rows: usize, cols: usize },
    #[error("b = {0} is outside (0, inf]")]
    OutOfRange(String),
    #[error("morphism from b1 = {b1} to b2 = {b2} needs b1 >= b2")]
    Order { b1: String, b2: String },
    #[error("{which} basis has {got} labels for rank {rank}")]
    Basis {
        which: &'static str,
        got: usize,
        rank: usize,
    },
    #[error("degree-0 and degree-1 diagrams have different breakpoints")]
    Mismatch,
    #[error("invalid diagram JSON: {0}")]
    Json(String),
}
