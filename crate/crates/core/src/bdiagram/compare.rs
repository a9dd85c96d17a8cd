use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::diagram::BDiagram;
use crate::exactnum::{snf, Rational, SnfResult};

/// The breakpoints at which some diagram's step into the interval below
/// is not an isomorphism (rank changes included).
pub fn jumping_rates(diagrams: &[&BDiagram]) -> Vec<Rational> {
    let set: BTreeSet<Rational> = diagrams.iter().flat_map(|d| d.non_iso_breakpoints()).collect();
    set.into_iter().collect()
}

/// Isomorphism invariants of a diagram: breakpoints, ranks, and the Smith
/// invariants of the morphism between every ordered pair of intervals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantSignature {
    pub degree: usize,
    #[serde(with = "crate::exactnum::repr::rational_vec")]
    pub ladder: Vec<Rational>,
    pub ranks: Vec<usize>,
    /// `(upper, lower, snf)` for every `upper > lower`.
    pub composites: Vec<(usize, usize, SnfResult)>,
}

pub fn invariant_signature(d: &BDiagram) -> InvariantSignature {
    let n = d.interval_count();
    let composites = (0..n)
        .flat_map(|upper| (0..upper).map(move |lower| (upper, lower)))
        .map(|(upper, lower)| (upper, lower, snf(&d.composite(upper, lower))))
        .collect();
    InvariantSignature {
        degree: d.degree(),
        ladder: d.ladder().to_vec(),
        ranks: d.ranks().to_vec(),
        composites,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Distinguished,
    /// The invariants agree; this does not prove isomorphism.
    NotDistinguished,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Distinguished => "Distinguished",
            Verdict::NotDistinguished => "NotDistinguished",
        })
    }
}

/// Compares `(degree 0, degree 1)` pairs by their invariant signatures.
pub fn compare_unframed(a: (&BDiagram, &BDiagram), b: (&BDiagram, &BDiagram)) -> Verdict {
    let pairs = [(a.0, b.0), (a.1, b.1)];
    if pairs.iter().any(|(x, y)| x.ladder() != y.ladder()) {
        return Verdict::Distinguished;
    }
    if pairs
        .iter()
        .all(|(x, y)| invariant_signature(x) == invariant_signature(y))
    {
        Verdict::NotDistinguished
    } else {
        Verdict::Distinguished
    }
}
