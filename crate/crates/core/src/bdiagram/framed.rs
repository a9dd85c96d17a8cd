use num_bigint::BigInt;

use super::diagram::BDiagram;
use super::DiagramError;
use crate::exactnum::{ExtRat, IntMatrix};

/// Degree-0 and degree-1 diagrams with distinguished bases at `b = ∞`
/// (one class per branch) and on the interval containing `b = 1` (one class
/// per tangent line).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedDiagram {
    deg0: BDiagram,
    deg1: BDiagram,
    inf_basis: Vec<String>,
    one_basis: Vec<String>,
}

impl FramedDiagram {
    pub fn new(
        deg0: BDiagram,
        deg1: BDiagram,
        inf_basis: Vec<String>,
        one_basis: Vec<String>,
    ) -> Result<Self, DiagramError> {
        if deg0.ladder() != deg1.ladder() {
            return Err(DiagramError::Mismatch);
        }
        let top = deg0.interval_count() - 1;
        let one = deg0.interval_of(&ExtRat::integer(1))?;
        for d in [&deg0, &deg1] {
            if d.ranks()[top] != inf_basis.len() {
                return Err(DiagramError::Basis {
                    which: "inf",
                    got: inf_basis.len(),
                    rank: d.ranks()[top],
                });
            }
            if d.ranks()[one] != one_basis.len() {
                return Err(DiagramError::Basis {
                    which: "one",
                    got: one_basis.len(),
                    rank: d.ranks()[one],
                });
            }
        }
        Ok(FramedDiagram {
            deg0,
            deg1,
            inf_basis,
            one_basis,
        })
    }

    pub fn deg0(&self) -> &BDiagram {
        &self.deg0
    }

    pub fn deg1(&self) -> &BDiagram {
        &self.deg1
    }

    pub fn degree(&self, n: usize) -> Option<&BDiagram> {
        match n {
            0 => Some(&self.deg0),
            1 => Some(&self.deg1),
            _ => None,
        }
    }

    pub fn inf_basis(&self) -> &[String] {
        &self.inf_basis
    }

    pub fn one_basis(&self) -> &[String] {
        &self.one_basis
    }

    pub fn top(&self) -> usize {
        self.deg0.interval_count() - 1
    }
}

// Per-branch data that any framed isomorphism must preserve.
fn column_profile(composites: &[[IntMatrix; 2]], col: usize) -> Vec<(Vec<String>, usize)> {
    composites
        .iter()
        .flat_map(|pair| {
            pair.iter().map(move |m| {
                let mut entries: Vec<String> = m.column(col).iter().map(ToString::to_string).collect();
                entries.sort();
                let twins = (0..m.cols()).filter(|&c| m.column(c) == m.column(col)).count();
                (entries, twins)
            })
        })
        .collect()
}

struct Side<'a> {
    diagram: &'a FramedDiagram,
    composites: Vec<[IntMatrix; 2]>,
    profiles: Vec<Vec<(Vec<String>, usize)>>,
}

impl<'a> Side<'a> {
    fn new(diagram: &'a FramedDiagram) -> Self {
        let top = diagram.top();
        let composites: Vec<[IntMatrix; 2]> = (0..=top)
            .map(|j| [diagram.deg0.composite(top, j), diagram.deg1.composite(top, j)])
            .collect();
        let profiles = (0..diagram.inf_basis.len())
            .map(|c| column_profile(&composites, c))
            .collect();
        Side {
            diagram,
            composites,
            profiles,
        }
    }

    fn same_column(&self, j: usize, d: usize, x: usize, y: usize) -> bool {
        let m = &self.composites[j][d];
        m.column(x) == m.column(y)
    }
}

/// True iff some bijection of the `∞` bases, extended by permutations of
/// the bases on every lower interval, carries all step matrices of `a`
/// onto those of `b` in both degrees.
///
/// On curve-shaped diagrams (block-indicator degree-0 steps) every framed
/// isomorphism is of this form, so the test is exact there.
pub fn compare_framed(a: &FramedDiagram, b: &FramedDiagram) -> bool {
    for d in 0..2 {
        let (x, y) = (a.degree(d).unwrap(), b.degree(d).unwrap());
        if x.ladder() != y.ladder() || x.ranks() != y.ranks() {
            return false;
        }
    }
    let (sa, sb) = (Side::new(a), Side::new(b));
    let n = a.inf_basis.len();
    let mut sigma = Vec::with_capacity(n);
    let mut used = vec![false; n];
    assign(&sa, &sb, &mut sigma, &mut used)
}

fn assign(a: &Side, b: &Side, sigma: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let i = sigma.len();
    if i == used.len() {
        return (0..2).all(|d| {
            let (x, y) = (a.diagram.degree(d).unwrap(), b.diagram.degree(d).unwrap());
            match_levels(x, y, x.interval_count() - 1, sigma)
        });
    }
    for cand in 0..used.len() {
        if used[cand] || a.profiles[i] != b.profiles[cand] {
            continue;
        }
        let consistent = sigma.iter().enumerate().all(|(l, &ml)| {
            (0..a.composites.len()).all(|j| (0..2).all(|d| a.same_column(j, d, i, l) == b.same_column(j, d, cand, ml)))
        });
        if !consistent {
            continue;
        }
        used[cand] = true;
        sigma.push(cand);
        if assign(a, b, sigma, used) {
            return true;
        }
        sigma.pop();
        used[cand] = false;
    }
    false
}

/// `upper_perm` maps bases of `a` on interval `upper` to those of `b`.
/// Finds row permutations for each lower step so that every step agrees.
fn match_levels(a: &BDiagram, b: &BDiagram, upper: usize, upper_perm: &[usize]) -> bool {
    if upper == 0 {
        return true;
    }
    let (sa, sb) = (&a.steps()[upper - 1], &b.steps()[upper - 1]);
    // row r of `a` rewritten in `b`'s column order
    let rows_a: Vec<Vec<_>> = (0..sa.rows())
        .map(|r| {
            let mut v = vec![Default::default(); sa.cols()];
            for c in 0..sa.cols() {
                v[upper_perm[c]] = sa[(r, c)].clone();
            }
            v
        })
        .collect();
    let rows_b: Vec<Vec<_>> = (0..sb.rows()).map(|r| sb.row(r).to_vec()).collect();
    let mut perm = Vec::with_capacity(rows_a.len());
    let mut used = vec![false; rows_b.len()];
    match_rows(a, b, upper, &rows_a, &rows_b, &mut perm, &mut used)
}

fn match_rows(
    a: &BDiagram,
    b: &BDiagram,
    upper: usize,
    rows_a: &[Vec<BigInt>],
    rows_b: &[Vec<BigInt>],
    perm: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let r = perm.len();
    if r == rows_a.len() {
        return match_levels(a, b, upper - 1, perm);
    }
    // equal rows of `b` still lead to different column orders one level
    // down, so each of them is tried
    for cand in 0..rows_b.len() {
        if used[cand] || rows_a[r] != rows_b[cand] {
            continue;
        }
        used[cand] = true;
        perm.push(cand);
        if match_rows(a, b, upper, rows_a, rows_b, perm, used) {
            return true;
        }
        perm.pop();
        used[cand] = false;
    }
    false
}
