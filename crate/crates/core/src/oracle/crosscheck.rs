use std::fmt::Write;

use serde::Serialize;

use super::{covering_maps, truncation_components};
use crate::bdiagram::FramedDiagram;
use crate::exactnum::{ExtRat, Rational};
use crate::mdcurve::CurveHomology;
use crate::puiseux::Curve;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub kind: String,
    pub levels: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub branches: Vec<String>,
    pub checks: Vec<Check>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn render(&self) -> String {
        let kw = self.checks.iter().map(|c| c.kind.len()).max().unwrap_or(0);
        let lw = self.checks.iter().map(|c| c.levels.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{verdict}  {:<kw$}  {:<lw$}  {}", c.kind, c.levels, c.detail);
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        out
    }
}

fn finite(b: &ExtRat) -> Rational {
    b.as_finite().cloned().expect("interior points are finite")
}

fn level_checks(c: &Curve, h: &CurveHomology, checks: &mut Vec<Check>) {
    let d0 = h.framed.deg0();
    for j in 1..d0.interval_count() {
        for b in [d0.representative(j), d0.interior_point(j)] {
            let classes = truncation_components(c, &finite(&b));
            let rank = d0.ranks()[j];
            checks.push(Check {
                kind: "count".into(),
                levels: format!("b={b}"),
                passed: classes.len() == rank,
                detail: format!("{} classes, rank {rank}", classes.len()),
            });
            let slice = h.tree.level_slice(&b).expect("b >= 1");
            let kappas: Vec<_> = classes.iter().map(|k| k.kappa.clone()).collect();
            let weights: Vec<_> = slice.points.iter().map(|p| p.weight.clone()).collect();
            let members: Vec<_> = classes.iter().map(|k| k.member_indices.clone()).collect();
            let points: Vec<_> = slice.points.iter().map(|p| p.branch_indices.clone()).collect();
            checks.push(Check {
                kind: "classes".into(),
                levels: format!("b={b}"),
                passed: kappas == weights && members == points,
                detail: format!("kappa {kappas:?}, weights {weights:?}"),
            });
        }
    }
}

fn pairs(f: &FramedDiagram) -> Vec<(usize, usize)> {
    let top = f.top();
    let mut out: Vec<(usize, usize)> = (1..top).map(|j| (j + 1, j)).collect();
    for j in 1..top {
        out.push((top, j));
        if j > 1 {
            out.push((j, 1));
        }
    }
    out.extend((1..=top).map(|j| (j, j)));
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

fn map_checks(c: &Curve, f: &FramedDiagram, checks: &mut Vec<Check>) {
    for (upper, lower) in pairs(f) {
        let b1 = f.deg0().interior_point(upper);
        let b2 = f.deg0().interior_point(lower);
        let levels = format!("{b1}->{b2}");
        match covering_maps(c, &finite(&b1), &finite(&b2)) {
            Ok((h0, h1)) => {
                for (kind, got, want) in [
                    ("h0", h0, f.deg0().composite(upper, lower)),
                    ("h1", h1, f.deg1().composite(upper, lower)),
                ] {
                    checks.push(Check {
                        kind: kind.into(),
                        levels: levels.clone(),
                        passed: got == want,
                        detail: if got == want {
                            format!("{}x{}", got.rows(), got.cols())
                        } else {
                            format!("cover {got:?} vs {want:?}")
                        },
                    });
                }
            }
            Err(e) => checks.push(Check {
                kind: "cover".into(),
                levels,
                passed: false,
                detail: e.to_string(),
            }),
        }
    }
}

/// Runs both oracles against the tree-derived diagram of `c`.
pub fn crosscheck(c: &Curve) -> CrosscheckReport {
    let mut checks = Vec::new();
    match CurveHomology::of(c) {
        Ok(h) => {
            level_checks(c, &h, &mut checks);
            map_checks(c, &h.framed, &mut checks);
        }
        Err(e) => checks.push(Check {
            kind: "diagram".into(),
            levels: String::new(),
            passed: false,
            detail: e.to_string(),
        }),
    }
    CrosscheckReport {
        branches: c.ids(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_curves_pass() {
        for texts in [
            &[
                "x^(3/2) + x^(5/2)",
                "x^(3/2) + x^(11/4)",
                "x^(3/2) + x^(11/4) + x^(37/12)",
                "x^(5/2) + x^(11/4)",
            ][..],
            &[
                "x + x^2 + x^(5/2)",
                "x + 2*x^2",
                "2*x + x^2",
                "2*x + 2*x^2",
                "2*x + 3*x^2",
            ],
            &[
                "x + x^2",
                "x + 2*x^2",
                "2*x + x^2",
                "2*x + 2*x^2",
                "2*x + 3*x^2 + x^(5/2)",
            ],
            &["x^(3/2)"],
            &["x"],
        ] {
            let r = crosscheck(&Curve::parse_all(texts).unwrap());
            assert!(r.passed(), "{}", r.render());
            assert!(r.checks.iter().any(|c| c.kind == "h1"));
        }
    }

    #[test]
    fn render_summary() {
        let r = crosscheck(&Curve::parse_all(&["x^(3/2)"]).unwrap());
        let text = r.render();
        assert!(text.starts_with("PASS  count"));
        assert!(text.ends_with(&format!("{} checks, 0 failed\n", r.checks.len())));
        assert_eq!(r.to_json_value()["branches"], serde_json::json!(["C1"]));
    }
}
