use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::MdError;
use crate::bdiagram::{BDiagram, FramedDiagram};
use crate::eggers::{build_tree, EggersWallTree, LevelSlice};
use crate::exactnum::{ExtRat, IntMatrix, Rational};
use crate::puiseux::Curve;

/// A curve's tree together with its framed diagram.
#[derive(Debug, Clone)]
pub struct CurveHomology {
    pub tree: EggersWallTree,
    pub framed: FramedDiagram,
}

impl CurveHomology {
    pub fn of(curve: &Curve) -> Result<Self, MdError> {
        let tree = build_tree(curve)?;
        let framed = diagram_of_tree(&tree);
        Ok(CurveHomology { tree, framed })
    }
}

pub fn md_diagram(curve: &Curve) -> Result<FramedDiagram, MdError> {
    Ok(CurveHomology::of(curve)?.framed)
}

/// Degree-0 and degree-1 step from the slice `upper` into the slice `lower`.
fn step_pair(upper: &LevelSlice, lower: &LevelSlice) -> (IntMatrix, IntMatrix) {
    let (rows, cols) = (lower.len(), upper.len());
    let mut m0 = IntMatrix::zeros(rows, cols);
    let mut m1 = IntMatrix::zeros(rows, cols);
    for (c, p) in upper.points.iter().enumerate() {
        let r = lower
            .point_of(p.branch_indices[0])
            .expect("every branch crosses every level");
        let w = &lower.points[r].weight;
        debug_assert!(p.weight.is_multiple_of(w), "weights divide along paths");
        m0[(r, c)] = BigInt::one();
        m1[(r, c)] = &p.weight / w;
    }
    (m0, m1)
}

/// The framed diagram of the curve whose tree is `tree`.
///
/// Breakpoints are 1 and the heights of all interior vertices; bases at
/// every level follow the canonical point order (least branch first), so
/// the basis at `∞` is the branch input order.
pub fn diagram_of_tree(tree: &EggersWallTree) -> FramedDiagram {
    let mut ladder = vec![Rational::one()];
    ladder.extend(tree.interior_heights().into_iter().filter(|h| *h > Rational::one()));
    let slices: Vec<LevelSlice> = ladder
        .iter()
        .map(|t| {
            tree.level_slice(&ExtRat::from(t.clone()))
                .expect("breakpoints are >= 1")
        })
        .collect();

    let mut ranks0 = vec![1];
    let mut ranks1 = vec![0];
    ranks0.extend(slices.iter().map(LevelSlice::len));
    ranks1.extend(slices.iter().map(LevelSlice::len));

    let first = slices[0].len();
    let mut steps0 = vec![IntMatrix::from_fn(1, first, |_, _| BigInt::one())];
    let mut steps1 = vec![IntMatrix::zeros(0, first)];
    for w in slices.windows(2) {
        let (m0, m1) = step_pair(&w[1], &w[0]);
        steps0.push(m0);
        steps1.push(m1);
    }

    let inf_basis = tree.branch_ids().to_vec();
    let one_basis = (1..=first).map(|i| format!("T{i}")).collect();
    let deg0 = BDiagram::new(0, ladder.clone(), ranks0, steps0).expect("well-formed");
    let deg1 = BDiagram::new(1, ladder, ranks1, steps1).expect("well-formed");
    FramedDiagram::new(deg0, deg1, inf_basis, one_basis).expect("bases match ranks")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::IntMatrix;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn eggers_example() -> Curve {
        Curve::parse_all(&[
            "x^(3/2) + x^(5/2)",
            "x^(3/2) + x^(11/4)",
            "x^(3/2) + x^(11/4) + x^(37/12)",
            "x^(5/2) + x^(11/4)",
        ])
        .unwrap()
    }

    fn reducible_c() -> Curve {
        Curve::parse_all(&[
            "x + x^2 + x^(5/2)",
            "x + 2*x^2",
            "2*x + x^2",
            "2*x + 2*x^2",
            "2*x + 3*x^2",
        ])
        .unwrap()
    }

    fn reducible_d() -> Curve {
        Curve::parse_all(&[
            "x + x^2",
            "x + 2*x^2",
            "2*x + x^2",
            "2*x + 2*x^2",
            "2*x + 3*x^2 + x^(5/2)",
        ])
        .unwrap()
    }

    #[test]
    fn example_block_structure() {
        let f = md_diagram(&eggers_example()).unwrap();
        let m = f
            .deg1()
            .morphism_matrix(&ExtRat::ratio(11, 4), &ExtRat::ratio(3, 2))
            .unwrap();
        assert_eq!(m, IntMatrix::from_i64(&[&[1, 2, 0], &[0, 0, 4]]));
        let m0 = f
            .deg0()
            .morphism_matrix(&ExtRat::integer(3), &ExtRat::integer(2))
            .unwrap();
        assert_eq!(m0, IntMatrix::from_i64(&[&[1, 1, 0], &[0, 0, 1]]));
        assert_eq!(f.deg0().ladder(), &[q(1, 1), q(3, 2), q(5, 2), q(11, 4), q(37, 12)]);
    }

    #[test]
    fn reducible_example_matrices() {
        let mc = md_diagram(&reducible_c()).unwrap();
        let md = md_diagram(&reducible_d()).unwrap();
        let b1 = ExtRat::ratio(5, 2);
        let b2 = ExtRat::integer(1);
        assert_eq!(
            mc.deg1().morphism_matrix(&b1, &b2).unwrap(),
            IntMatrix::from_i64(&[&[2, 1, 0, 0, 0], &[0, 0, 1, 1, 1]])
        );
        assert_eq!(
            md.deg1()
                .morphism_matrix(&ExtRat::infinity(), &ExtRat::ratio(3, 2))
                .unwrap(),
            IntMatrix::from_i64(&[&[1, 1, 0, 0, 0], &[0, 0, 1, 1, 2]])
        );
    }

    #[test]
    fn irreducible_cusp_multiplies_by_two() {
        let f = md_diagram(&Curve::parse_all(&["x^(3/2)"]).unwrap()).unwrap();
        let m = f
            .deg1()
            .morphism_matrix(&ExtRat::integer(2), &ExtRat::ratio(5, 4))
            .unwrap();
        assert_eq!(m, IntMatrix::from_i64(&[&[2]]));
        let h0 = f
            .deg0()
            .morphism_matrix(&ExtRat::infinity(), &ExtRat::integer(1))
            .unwrap();
        assert!(h0.is_identity());
    }

    #[test]
    fn ranks_match_slices() {
        let curve = eggers_example();
        let h = CurveHomology::of(&curve).unwrap();
        for b in ["1", "3/2", "2", "5/2", "11/4", "3", "37/12", "4", "inf"] {
            let b: ExtRat = b.parse().unwrap();
            let l = h.tree.level_slice(&b).unwrap().len();
            assert_eq!(h.framed.deg0().evaluate(&b).unwrap(), l, "b = {b}");
            assert_eq!(h.framed.deg1().evaluate(&b).unwrap(), l, "b = {b}");
        }
        assert_eq!(h.framed.deg1().evaluate(&ExtRat::ratio(1, 2)).unwrap(), 0);
        assert_eq!(h.framed.deg0().evaluate(&ExtRat::ratio(1, 2)).unwrap(), 1);
        assert_eq!(h.framed.deg0().evaluate(&ExtRat::infinity()).unwrap(), 4);
    }
}
