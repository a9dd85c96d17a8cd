//! JSON form of diagrams:
//! `{"degree":1,"breakpoints":[[1,1],[3,2]],"ranks":[0,1,1],"steps":[[],[[2]]],
//!   "inf_basis":["C1"],"one_basis":["T1"]}`.
//! Step shapes come from `ranks`, so empty matrices need no extra data.
//! A framed diagram is `{"degrees":[<degree 0>, <degree 1>]}` with both
//! entries carrying the bases.

use serde::{Deserialize, Serialize};

use super::{BDiagram, DiagramError, FramedDiagram};
use crate::exactnum::repr::{nested_to_bigints, rational_vec, IntRepr};
use crate::exactnum::{IntMatrix, Rational};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramWire {
    degree: usize,
    #[serde(with = "rational_vec")]
    breakpoints: Vec<Rational>,
    ranks: Vec<usize>,
    steps: Vec<Vec<Vec<IntRepr>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inf_basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    one_basis: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FramedWire {
    degrees: Vec<DiagramWire>,
}

fn to_wire(d: &BDiagram, bases: Option<(&[String], &[String])>) -> DiagramWire {
    DiagramWire {
        degree: d.degree(),
        breakpoints: d.ladder().to_vec(),
        ranks: d.ranks().to_vec(),
        steps: d
            .steps()
            .iter()
            .map(|s| {
                (0..s.rows())
                    .map(|i| s.row(i).iter().map(IntRepr::from_bigint).collect())
                    .collect()
            })
            .collect(),
        inf_basis: bases.map(|b| b.0.to_vec()),
        one_basis: bases.map(|b| b.1.to_vec()),
    }
}

fn from_wire(w: DiagramWire) -> Result<BDiagram, DiagramError> {
    let json = |e: String| DiagramError::Json(e);
    if w.steps.len() != w.breakpoints.len() {
        return Err(DiagramError::StepCount {
            expected: w.breakpoints.len(),
            got: w.steps.len(),
        });
    }
    if w.ranks.len() != w.breakpoints.len() + 1 {
        return Err(DiagramError::RankCount {
            expected: w.breakpoints.len() + 1,
            breakpoints: w.breakpoints.len(),
            got: w.ranks.len(),
        });
    }
    let steps = w
        .steps
        .into_iter()
        .enumerate()
        .map(|(j, rows)| {
            let rows = nested_to_bigints::<serde_json::Error>(rows).map_err(|e| json(e.to_string()))?;
            IntMatrix::from_rows_shaped(w.ranks[j], w.ranks[j + 1], rows).map_err(|_| DiagramError::StepShape {
                index: j,
                rows: w.ranks[j],
                cols: w.ranks[j + 1],
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    BDiagram::new(w.degree, w.breakpoints, w.ranks, steps)
}

impl BDiagram {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(to_wire(self, None)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, DiagramError> {
        let w: DiagramWire = serde_json::from_str(text).map_err(|e| DiagramError::Json(e.to_string()))?;
        from_wire(w)
    }
}

impl FramedDiagram {
    pub fn to_json_value(&self) -> serde_json::Value {
        let bases = Some((self.inf_basis(), self.one_basis()));
        let wire = FramedWire {
            degrees: vec![to_wire(self.deg0(), bases), to_wire(self.deg1(), bases)],
        };
        serde_json::to_value(wire).expect("serializable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, DiagramError> {
        let w: FramedWire = serde_json::from_str(text).map_err(|e| DiagramError::Json(e.to_string()))?;
        let [d0, d1]: [DiagramWire; 2] = w
            .degrees
            .try_into()
            .map_err(|_| DiagramError::Json("expected exactly two degrees".into()))?;
        if d0.degree != 0 || d1.degree != 1 {
            return Err(DiagramError::Json("degrees must be listed as 0 then 1".into()));
        }
        let bases0 = (d0.inf_basis.clone(), d0.one_basis.clone());
        let bases1 = (d1.inf_basis.clone(), d1.one_basis.clone());
        if bases0 != bases1 {
            return Err(DiagramError::Json("degrees carry different bases".into()));
        }
        let (Some(inf), Some(one)) = bases0 else {
            return Err(DiagramError::Json("missing inf_basis or one_basis".into()));
        };
        FramedDiagram::new(from_wire(d0)?, from_wire(d1)?, inf, one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagram_json_shape() {
        let one = Rational::from_integer(1.into());
        let d = BDiagram::new(
            1,
            vec![one.clone(), Rational::new(3.into(), 2.into())],
            vec![0, 1, 1],
            vec![IntMatrix::zeros(0, 1), IntMatrix::from_i64(&[&[2]])],
        )
        .unwrap();
        let v = d.to_json_value();
        assert_eq!(
            v.to_string(),
            r#"{"breakpoints":[[1,1],[3,2]],"degree":1,"ranks":[0,1,1],"steps":[[],[[2]]]}"#
        );
        assert_eq!(BDiagram::from_json(&v.to_string()).unwrap(), d);
    }

    #[test]
    fn rejects_bad_json() {
        let bad = r#"{"degree":1,"breakpoints":[[1,1]],"ranks":[0,1],"steps":[[[1]]]}"#;
        assert!(matches!(BDiagram::from_json(bad), Err(DiagramError::StepShape { .. })));
        let bad = r#"{"degree":1,"breakpoints":[[2,1]],"ranks":[0,1],"steps":[[]]}"#;
        assert_eq!(BDiagram::from_json(bad), Err(DiagramError::Ladder));
        assert!(matches!(BDiagram::from_json("[]"), Err(DiagramError::Json(_))));
        let bad = r#"{"degree":0,"breakpoints":[[1,0]],"ranks":[1,1],"steps":[[[1]]]}"#;
        assert!(matches!(BDiagram::from_json(bad), Err(DiagramError::Json(_))));
    }
}
