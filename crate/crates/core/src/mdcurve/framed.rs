use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::MdError;
use crate::bdiagram::FramedDiagram;
use crate::eggers::{build_tree_from_profile, BranchProfile, EggersWallTree};
use crate::exactnum::repr::IntRepr;
use crate::exactnum::{ExtRat, GaussRat, IntMatrix, Rational};
use crate::puiseux::Curve;

/// A line `y = slope·x` of the tangent cone with the branches tangent to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TangentLine {
    pub id: String,
    pub slope: GaussRat,
    pub branches: Vec<String>,
}

/// Tangent lines in canonical order (least branch first), named `T1, T2, …`
/// to match the `b = 1` basis of the framed diagram.
pub fn tangent_lines(curve: &Curve) -> Vec<TangentLine> {
    let mut lines: Vec<TangentLine> = Vec::new();
    for b in curve.branches() {
        let slope = b.series.tangent_slope();
        match lines.iter_mut().find(|l| l.slope == slope) {
            Some(l) => l.branches.push(b.id.clone()),
            None => lines.push(TangentLine {
                id: String::new(),
                slope,
                branches: vec![b.id.clone()],
            }),
        }
    }
    for (i, l) in lines.iter_mut().enumerate() {
        l.id = format!("T{}", i + 1);
    }
    lines
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentEntry {
    pub tangent: TangentLine,
    /// `(branch id, multiplicity)` for each branch tangent to the line.
    pub branches: Vec<(String, BigInt)>,
    pub total: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub per_tangent: Vec<TangentEntry>,
}

impl MultiplicityReport {
    /// `{"per_tangent": {T: [[branch, m], ...]}, "totals": {T: n}, "slopes": {T: slope}}`
    pub fn to_json_value(&self) -> serde_json::Value {
        let int = |v: &BigInt| serde_json::to_value(IntRepr::from_bigint(v)).expect("integer");
        let mut per = serde_json::Map::new();
        let mut totals = serde_json::Map::new();
        let mut slopes = serde_json::Map::new();
        for e in &self.per_tangent {
            let id = e.tangent.id.clone();
            per.insert(
                id.clone(),
                e.branches.iter().map(|(b, m)| serde_json::json!([b, int(m)])).collect(),
            );
            totals.insert(id.clone(), int(&e.total));
            slopes.insert(id, serde_json::to_value(&e.tangent.slope).expect("slope"));
        }
        serde_json::json!({ "per_tangent": per, "totals": totals, "slopes": slopes })
    }

    /// One line per tangent: id, slope, total, then `branch:m` pairs.
    pub fn render(&self) -> String {
        self.per_tangent
            .iter()
            .map(|e| {
                let parts: Vec<String> = e.branches.iter().map(|(b, m)| format!("{b}:{m}")).collect();
                format!(
                    "{}  y = {}*x  total {}  {}\n",
                    e.tangent.id,
                    e.tangent.slope,
                    e.total,
                    parts.join(" ")
                )
            })
            .collect()
    }
}

/// Reads each branch's covering degree over its tangent line off the
/// framed degree-1 morphism from `b = ∞` to `b = 1`.
pub fn relative_multiplicities(curve: &Curve) -> Result<MultiplicityReport, MdError> {
    let framed = super::md_diagram(curve)?;
    let h = framed
        .deg1()
        .morphism_matrix(&ExtRat::infinity(), &ExtRat::integer(1))?;
    let lines = tangent_lines(curve);
    if lines.len() != h.rows() {
        return Err(MdError::NotCurveShaped(format!(
            "{} tangent lines but rank {} at b = 1",
            lines.len(),
            h.rows()
        )));
    }
    let per_tangent = lines
        .into_iter()
        .enumerate()
        .map(|(row, tangent)| {
            let branches: Vec<(String, BigInt)> = (0..h.cols())
                .filter(|&c| !h[(row, c)].is_zero())
                .map(|c| (framed.inf_basis()[c].clone(), h[(row, c)].clone()))
                .collect();
            let total = h.row(row).iter().sum();
            TangentEntry {
                tangent,
                branches,
                total,
            }
        })
        .collect();
    Ok(MultiplicityReport { per_tangent })
}

fn shape_error<T>(msg: String) -> Result<T, MdError> {
    Err(MdError::NotCurveShaped(msg))
}

/// Checks the block shape of a curve diagram and returns, for each level
/// `j >= 1` and each branch, the point carrying it and the degree-1
/// multiplier from `∞` down to that level.
fn branch_tracks(f: &FramedDiagram) -> Result<Vec<Vec<(usize, BigInt)>>, MdError> {
    let (d0, d1) = (f.deg0(), f.deg1());
    let top = f.top();
    let n = f.inf_basis().len();
    if d0.ranks()[0] != 1 || d1.ranks()[0] != 0 {
        return shape_error("ranks below 1 must be (1, 0)".into());
    }
    if d0.ranks()[1..] != d1.ranks()[1..] {
        return shape_error("degree-0 and degree-1 ranks differ above 1".into());
    }
    if !d0.steps()[0].row(0).iter().all(One::is_one) {
        return shape_error("the step into (0,1) must be all ones".into());
    }
    for j in 1..top {
        let (s0, s1) = (&d0.steps()[j], &d1.steps()[j]);
        for c in 0..s0.cols() {
            let ones: Vec<usize> = (0..s0.rows()).filter(|&r| !s0[(r, c)].is_zero()).collect();
            if ones.len() != 1 || !s0[(ones[0], c)].is_one() {
                return shape_error(format!("degree-0 step {j}, column {c} is not a unit vector"));
            }
            for r in 0..s1.rows() {
                let v = &s1[(r, c)];
                let ok = if r == ones[0] { *v > BigInt::zero() } else { v.is_zero() };
                if !ok {
                    return shape_error(format!("degree-1 step {j} has a bad entry at ({r},{c})"));
                }
            }
        }
        for r in 0..s0.rows() {
            if s0.row(r).iter().all(Zero::is_zero) {
                return shape_error(format!("degree-0 step {j}, row {r} is empty"));
            }
        }
        if s0.is_identity() && s1.is_identity() {
            let t = crate::exactnum::fmt_rational(&d0.ladder()[j]);
            return shape_error(format!("breakpoint {t} is not a jump"));
        }
    }
    let mut tracks = vec![Vec::with_capacity(top); n];
    for j in 1..=top {
        let c0: IntMatrix = d0.composite(top, j);
        let c1: IntMatrix = d1.composite(top, j);
        for (i, track) in tracks.iter_mut().enumerate() {
            let row = (0..c0.rows())
                .find(|&r| c0[(r, i)].is_one())
                .expect("unit columns compose to unit columns");
            track.push((row, c1[(row, i)].clone()));
        }
    }
    Ok(tracks)
}

/// Rebuilds the labeled Eggers-Wall tree from a framed curve diagram.
///
/// Two branches have contact `t_j` when `t_j` is the first breakpoint at
/// which the degree-0 morphism from `∞` sends them to different
/// generators. A branch has a characteristic exponent at `t_j` when its
/// weight, i.e. its multiplicity divided by its degree-1 multiplier,
/// jumps there.
pub fn reconstruct_tree(f: &FramedDiagram) -> Result<EggersWallTree, MdError> {
    let tracks = branch_tracks(f)?;
    let ladder = f.deg0().ladder();
    let n = tracks.len();
    if tracks.iter().any(|t| t.iter().any(|(_, m)| m.is_zero())) {
        return shape_error("zero degree-1 multiplier".into());
    }

    let mut exponents = Vec::with_capacity(n);
    for (i, track) in tracks.iter().enumerate() {
        let kappa = &track[0].1;
        let mut prev = BigInt::one();
        let mut exps = Vec::new();
        for (j, (_, mult)) in track.iter().enumerate() {
            if !kappa.is_multiple_of(mult) {
                return shape_error(format!("branch {i}: multiplier {mult} does not divide {kappa}"));
            }
            let weight = kappa / mult;
            if j > 0 && weight != prev {
                if !weight.is_multiple_of(&prev) {
                    return shape_error(format!("branch {i}: weights do not divide"));
                }
                exps.push((ladder[j].clone(), &weight / &prev));
            } else if j == 0 && !weight.is_one() {
                return shape_error(format!("branch {i}: weight above 1 must be 1"));
            }
            prev = weight;
        }
        exponents.push(exps);
    }

    let mut contacts = vec![vec![Rational::one(); n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let j = (0..tracks[a].len())
                .find(|&j| tracks[a][j].0 != tracks[b][j].0)
                .ok_or_else(|| MdError::NotCurveShaped(format!("branches {a} and {b} never separate")))?;
            contacts[a][b] = ladder[j].clone();
            contacts[b][a] = ladder[j].clone();
        }
    }
    let profile = BranchProfile {
        ids: f.inf_basis().to_vec(),
        exponents,
        contacts,
    };
    Ok(build_tree_from_profile(&profile)?)
}

/// True iff `f` is the diagram of one smooth branch.
pub fn detect_smooth(f: &FramedDiagram) -> bool {
    let (d0, d1) = (f.deg0(), f.deg1());
    d0.ladder() == [Rational::one()]
        && d0.ranks() == [1, 1]
        && d1.ranks() == [0, 1]
        && d0.steps()[0] == IntMatrix::identity(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eggers::{build_tree, tree_isomorphic};
    use crate::mdcurve::md_diagram;

    fn curve(texts: &[&str]) -> Curve {
        Curve::parse_all(texts).unwrap()
    }

    fn reducible_c() -> Curve {
        curve(&[
            "x + x^2 + x^(5/2)",
            "x + 2*x^2",
            "2*x + x^2",
            "2*x + 2*x^2",
            "2*x + 3*x^2",
        ])
    }

    fn reducible_d() -> Curve {
        curve(&[
            "x + x^2",
            "x + 2*x^2",
            "2*x + x^2",
            "2*x + 2*x^2",
            "2*x + 3*x^2 + x^(5/2)",
        ])
    }

    #[test]
    fn cusp_multiplicity() {
        let r = relative_multiplicities(&curve(&["x^(3/2)"])).unwrap();
        assert_eq!(r.per_tangent.len(), 1);
        assert_eq!(r.per_tangent[0].tangent.slope, GaussRat::zero());
        assert_eq!(r.per_tangent[0].total, 2.into());
        assert_eq!(r.per_tangent[0].branches, vec![("C1".to_string(), BigInt::from(2))]);
    }

    #[test]
    fn smooth_multiplicity() {
        let r = relative_multiplicities(&curve(&["x + x^2"])).unwrap();
        assert_eq!(r.per_tangent[0].tangent.slope, GaussRat::from_int(1));
        assert_eq!(r.per_tangent[0].total, 1.into());
    }

    #[test]
    fn reducible_multiplicities() {
        let r = relative_multiplicities(&reducible_c()).unwrap();
        let totals: Vec<(GaussRat, BigInt)> = r
            .per_tangent
            .iter()
            .map(|e| (e.tangent.slope.clone(), e.total.clone()))
            .collect();
        assert_eq!(
            totals,
            vec![(GaussRat::from_int(1), 3.into()), (GaussRat::from_int(2), 3.into())]
        );
        assert_eq!(
            r.per_tangent[0].branches,
            vec![("C1".to_string(), BigInt::from(2)), ("C2".to_string(), BigInt::from(1))]
        );
    }

    #[test]
    fn round_trips() {
        for c in [
            curve(&[
                "x^(3/2) + x^(5/2)",
                "x^(3/2) + x^(11/4)",
                "x^(3/2) + x^(11/4) + x^(37/12)",
                "x^(5/2) + x^(11/4)",
            ]),
            curve(&["x^(3/2)"]),
            curve(&["x"]),
            reducible_c(),
            reducible_d(),
        ] {
            let t = build_tree(&c).unwrap();
            let back = reconstruct_tree(&md_diagram(&c).unwrap()).unwrap();
            assert!(tree_isomorphic(&back, &t, true));
            assert_eq!(back, t);
        }
    }

    #[test]
    fn reconstructs_d_not_c() {
        let back = reconstruct_tree(&md_diagram(&reducible_d()).unwrap()).unwrap();
        let tc = build_tree(&reducible_c()).unwrap();
        let td = build_tree(&reducible_d()).unwrap();
        assert!(tree_isomorphic(&back, &td, true));
        assert!(!tree_isomorphic(&back, &tc, false));
    }

    #[test]
    fn cusp_reconstruction_path() {
        let t = reconstruct_tree(&md_diagram(&curve(&["x^(3/2)"])).unwrap()).unwrap();
        let e = t.edges();
        assert_eq!(e.len(), 2);
        assert_eq!(*t.height(e[0].to), ExtRat::ratio(3, 2));
        assert_eq!((e[0].weight.clone(), e[1].weight.clone()), (1.into(), 2.into()));
    }

    #[test]
    fn report_json() {
        let r = relative_multiplicities(&reducible_c()).unwrap();
        let v = r.to_json_value();
        assert_eq!(v["totals"], serde_json::json!({"T1": 3, "T2": 3}));
        assert_eq!(v["per_tangent"]["T1"], serde_json::json!([["C1", 2], ["C2", 1]]));
        assert_eq!(r.render().lines().next(), Some("T1  y = 1*x  total 3  C1:2 C2:1"));
    }

    #[test]
    fn smoothness() {
        assert!(detect_smooth(&md_diagram(&curve(&["x + x^2"])).unwrap()));
        assert!(!detect_smooth(&md_diagram(&curve(&["x^(3/2)"])).unwrap()));
        assert!(!detect_smooth(&md_diagram(&curve(&["x", "2*x"])).unwrap()));
    }

    #[test]
    fn rejects_redundant_breakpoint() {
        use crate::bdiagram::BDiagram;
        let ladder = vec![Rational::one(), Rational::new(3.into(), 1.into())];
        let d0 = BDiagram::new(
            0,
            ladder.clone(),
            vec![1, 1, 1],
            vec![IntMatrix::from_i64(&[&[1]]), IntMatrix::identity(1)],
        )
        .unwrap();
        let d1 = BDiagram::new(
            1,
            ladder,
            vec![0, 1, 1],
            vec![IntMatrix::zeros(0, 1), IntMatrix::identity(1)],
        )
        .unwrap();
        let f = FramedDiagram::new(d0, d1, vec!["C1".into()], vec!["T1".into()]).unwrap();
        assert!(matches!(reconstruct_tree(&f), Err(MdError::NotCurveShaped(_))));
    }

    #[test]
    fn rejects_non_curve_shapes() {
        use crate::bdiagram::BDiagram;
        let one = Rational::one();
        let d0 = BDiagram::new(0, vec![one.clone()], vec![1, 1], vec![IntMatrix::from_i64(&[&[2]])]).unwrap();
        let d1 = BDiagram::new(1, vec![one], vec![0, 1], vec![IntMatrix::zeros(0, 1)]).unwrap();
        let f = FramedDiagram::new(d0, d1, vec!["C1".into()], vec!["T1".into()]).unwrap();
        assert!(matches!(reconstruct_tree(&f), Err(MdError::NotCurveShaped(_))));
    }
}
