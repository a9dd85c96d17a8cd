use num_traits::One;

use super::DiagramError;
use crate::exactnum::{is_unimodular, ExtRat, IntMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BDiagram {
    degree: usize,
    ladder: Vec<Rational>,
    ranks: Vec<usize>,
    steps: Vec<IntMatrix>,
}

impl BDiagram {
    /// `ranks[j]` is the rank on `I_j` (so there are `ladder.len() + 1`);
    /// `steps[j]` maps `I_{j+1}` into `I_j` and is `ranks[j] x ranks[j+1]`.
    pub fn new(
        degree: usize,
        ladder: Vec<Rational>,
        ranks: Vec<usize>,
        steps: Vec<IntMatrix>,
    ) -> Result<Self, DiagramError> {
        if ladder.first().is_none_or(|t| !t.is_one()) || ladder.windows(2).any(|w| w[0] >= w[1]) {
            return Err(DiagramError::Ladder);
        }
        if ranks.len() != ladder.len() + 1 {
            return Err(DiagramError::RankCount {
                expected: ladder.len() + 1,
                breakpoints: ladder.len(),
                got: ranks.len(),
            });
        }
        if steps.len() != ladder.len() {
            return Err(DiagramError::StepCount {
                expected: ladder.len(),
                got: steps.len(),
            });
        }
        for (j, s) in steps.iter().enumerate() {
            if s.rows() != ranks[j] || s.cols() != ranks[j + 1] {
                return Err(DiagramError::StepShape {
                    index: j,
                    rows: ranks[j],
                    cols: ranks[j + 1],
                });
            }
        }
        Ok(BDiagram {
            degree,
            ladder,
            ranks,
            steps,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ladder(&self) -> &[Rational] {
        &self.ladder
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn steps(&self) -> &[IntMatrix] {
        &self.steps
    }

    /// Number of intervals, `N + 1`.
    pub fn interval_count(&self) -> usize {
        self.ranks.len()
    }

    /// Index of the interval containing `b`; the value at a breakpoint
    /// belongs to the interval starting there.
    pub fn interval_of(&self, b: &ExtRat) -> Result<usize, DiagramError> {
        if b.is_zero() {
            return Err(DiagramError::OutOfRange(b.to_string()));
        }
        Ok(self.ladder.iter().take_while(|t| *b >= **t).count())
    }

    /// A point of interval `j`: its left end, or 1/2 for `I_0`.
    pub fn representative(&self, j: usize) -> ExtRat {
        if j == 0 {
            ExtRat::ratio(1, 2)
        } else {
            ExtRat::from(self.ladder[j - 1].clone())
        }
    }

    /// A point strictly inside interval `j` (also for the last one).
    pub fn interior_point(&self, j: usize) -> ExtRat {
        match j {
            0 => ExtRat::ratio(1, 2),
            j if j == self.ladder.len() => ExtRat::from(&self.ladder[j - 1] + Rational::one()),
            j => ExtRat::from((&self.ladder[j - 1] + &self.ladder[j]) / Rational::from_integer(2.into())),
        }
    }

    pub fn evaluate(&self, b: &ExtRat) -> Result<usize, DiagramError> {
        Ok(self.ranks[self.interval_of(b)?])
    }

    /// The morphism from interval `upper` into interval `lower`.
    pub fn composite(&self, upper: usize, lower: usize) -> IntMatrix {
        assert!(upper >= lower && upper < self.ranks.len());
        let mut acc = IntMatrix::identity(self.ranks[lower]);
        for s in &self.steps[lower..upper] {
            acc = acc.matmul(s).expect("step shapes chain");
        }
        acc
    }

    /// `h^{b1,b2}` for `b1 >= b2`.
    pub fn morphism_matrix(&self, b1: &ExtRat, b2: &ExtRat) -> Result<IntMatrix, DiagramError> {
        if b1 < b2 {
            return Err(DiagramError::Order {
                b1: b1.to_string(),
                b2: b2.to_string(),
            });
        }
        Ok(self.composite(self.interval_of(b1)?, self.interval_of(b2)?))
    }

    /// Breakpoints whose step fails to be an isomorphism.
    pub fn non_iso_breakpoints(&self) -> Vec<Rational> {
        self.ladder
            .iter()
            .zip(&self.steps)
            .filter(|(_, s)| !is_unimodular(s))
            .map(|(t, _)| t.clone())
            .collect()
    }
}
