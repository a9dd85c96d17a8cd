use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::parse::parse_series;
use super::series::{PuiseuxSeries, Term};
use super::PuiseuxError;
use crate::exactnum::{ExtRat, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub id: String,
    pub series: PuiseuxSeries,
}

impl Branch {
    pub fn new(id: impl Into<String>, series: PuiseuxSeries) -> Self {
        Branch { id: id.into(), series }
    }

    pub fn parse(id: impl Into<String>, text: &str) -> Result<Self, PuiseuxError> {
        Ok(Branch {
            id: id.into(),
            series: parse_series(text)?,
        })
    }
}

/// A reduced plane curve germ given by one parametrization per branch.
/// Branch order is significant: it fixes every basis downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    branches: Vec<Branch>,
}

/// A pair of branches whose contact would grow if the second were
/// replaced by a Galois-conjugate parametrization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyWarning {
    pub first: String,
    pub second: String,
    pub contact: ExtRat,
    /// `inf` when a conjugate parametrization coincides exactly.
    pub conjugate_contact: ExtRat,
}

impl Curve {
    pub fn new(branches: Vec<Branch>) -> Result<Self, PuiseuxError> {
        if branches.is_empty() {
            return Err(PuiseuxError::EmptyCurve);
        }
        let mut ids = HashSet::new();
        for b in &branches {
            if !ids.insert(b.id.as_str()) {
                return Err(PuiseuxError::DuplicateId(b.id.clone()));
            }
        }
        for (i, a) in branches.iter().enumerate() {
            for b in &branches[i + 1..] {
                if a.series == b.series {
                    return Err(PuiseuxError::DuplicateBranch(a.id.clone(), b.id.clone()));
                }
            }
        }
        Ok(Curve { branches })
    }

    /// Branches `C1, C2, ...` from series texts.
    pub fn parse_all(texts: &[&str]) -> Result<Self, PuiseuxError> {
        let branches = texts
            .iter()
            .enumerate()
            .map(|(i, t)| Branch::parse(format!("C{}", i + 1), t))
            .collect::<Result<_, _>>()?;
        Curve::new(branches)
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn len(&self) -> usize {
        self.branches.len()
    }

    pub fn is_empty(&self) -> bool {
        self.branches.is_empty()
    }

    pub fn ids(&self) -> Vec<String> {
        self.branches.iter().map(|b| b.id.clone()).collect()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.branches.iter().position(|b| b.id == id)
    }

    /// Contact exponent of branches `i` and `j` (`i != j`).
    pub fn contact(&self, i: usize, j: usize) -> Rational {
        self.branches[i]
            .series
            .contact(&self.branches[j].series)
            .expect("branches of a curve are distinct")
    }

    pub fn contact_matrix(&self) -> Vec<Vec<Option<Rational>>> {
        let n = self.len();
        (0..n)
            .map(|i| (0..n).map(|j| (i != j).then(|| self.contact(i, j))).collect())
            .collect()
    }

    /// Pairs whose contact depends on the choice of conjugate
    /// parametrization. Contacts are always computed on the given
    /// parametrizations; this only reports.
    pub fn conjugacy_warnings(&self) -> Vec<ConjugacyWarning> {
        let mut out = Vec::new();
        for (i, a) in self.branches.iter().enumerate() {
            for (j, b) in self.branches.iter().enumerate() {
                if i == j {
                    continue;
                }
                let c = self.contact(i, j);
                let best = a.series.max_conjugate_contact(&b.series);
                let grows = best.as_ref().is_none_or(|m| *m > c);
                if grows {
                    out.push(ConjugacyWarning {
                        first: a.id.clone(),
                        second: b.id.clone(),
                        contact: ExtRat::from(c),
                        conjugate_contact: best.map_or_else(ExtRat::infinity, ExtRat::from),
                    });
                }
            }
        }
        out
    }

    pub fn from_json(text: &str) -> Result<Self, PuiseuxError> {
        let wire: CurveWire = serde_json::from_str(text).map_err(|e| PuiseuxError::Json(e.to_string()))?;
        let branches = wire
            .branches
            .into_iter()
            .map(|b| {
                let series = match (b.series, b.terms) {
                    (Some(text), None) => parse_series(&text)?,
                    (None, Some(terms)) => PuiseuxSeries::new(terms)?,
                    _ => {
                        return Err(PuiseuxError::Json(format!(
                            "branch {:?} needs exactly one of \"series\" or \"terms\"",
                            b.id
                        )))
                    }
                };
                Ok(Branch { id: b.id, series })
            })
            .collect::<Result<_, _>>()?;
        Curve::new(branches)
    }

    /// Canonical JSON: explicit term arrays.
    pub fn to_json(&self) -> String {
        let wire = CurveWire {
            branches: self
                .branches
                .iter()
                .map(|b| BranchWire {
                    id: b.id.clone(),
                    series: None,
                    terms: Some(b.series.terms().to_vec()),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&wire).expect("serializable")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveWire {
    branches: Vec<BranchWire>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BranchWire {
    id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    series: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    terms: Option<Vec<Term>>,
}
