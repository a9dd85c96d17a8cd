use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::tree::{Edge, EggersWallTree, NodeId};
use super::EggersError;
use crate::exactnum::{fmt_rational, ExtRat, Rational};
use crate::puiseux::Curve;

/// The per-branch data an Eggers-Wall tree is built from: each branch's
/// characteristic exponents with the ramification index `k` gained there,
/// and all pairwise contacts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchProfile {
    pub ids: Vec<String>,
    pub exponents: Vec<Vec<(Rational, BigInt)>>,
    /// `contacts[i][j]` for `i != j`; the diagonal is ignored.
    pub contacts: Vec<Vec<Rational>>,
}

impl BranchProfile {
    pub fn from_curve(curve: &Curve) -> Self {
        let ids = curve.ids();
        let exponents = curve
            .branches()
            .iter()
            .map(|b| {
                let s = &b.series;
                s.characteristic_exponents()
                    .into_iter()
                    .zip(s.puiseux_pairs())
                    .map(|(e, p)| (e, p.k))
                    .collect()
            })
            .collect();
        let n = curve.len();
        let contacts = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rational::one() } else { curve.contact(i, j) })
                    .collect()
            })
            .collect();
        BranchProfile {
            ids,
            exponents,
            contacts,
        }
    }

    fn len(&self) -> usize {
        self.ids.len()
    }

    /// Checks that the minimum of any three pairwise contacts is attained
    /// at least twice.
    pub fn check_ultrametric(&self) -> Result<(), EggersError> {
        let n = self.len();
        for i in 0..n {
            for j in i + 1..n {
                if self.contacts[i][j] != self.contacts[j][i] {
                    return Err(EggersError::Invalid(format!(
                        "contact of {} and {} is not symmetric",
                        self.ids[i], self.ids[j]
                    )));
                }
                if self.contacts[i][j] < Rational::one() {
                    return Err(EggersError::ContactBelowOne {
                        first: self.ids[i].clone(),
                        second: self.ids[j].clone(),
                        contact: fmt_rational(&self.contacts[i][j]),
                    });
                }
                for k in j + 1..n {
                    let mut c = [&self.contacts[i][j], &self.contacts[i][k], &self.contacts[j][k]];
                    c.sort();
                    if c[0] != c[1] {
                        return Err(EggersError::NonArchimedean(
                            self.ids[i].clone(),
                            self.ids[j].clone(),
                            self.ids[k].clone(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn build_tree(curve: &Curve) -> Result<EggersWallTree, EggersError> {
    build_tree_from_profile(&BranchProfile::from_curve(curve))
}

struct Builder<'a> {
    profile: &'a BranchProfile,
    heights: Vec<ExtRat>,
    edges: Vec<Edge>,
    leaves: BTreeMap<NodeId, String>,
}

impl Builder<'_> {
    fn node(&mut self, height: ExtRat, from: Option<(NodeId, &BigInt)>) -> NodeId {
        let id = self.heights.len();
        self.heights.push(height);
        if let Some((parent, weight)) = from {
            self.edges.push(Edge {
                from: parent,
                to: id,
                weight: weight.clone(),
            });
        }
        id
    }

    fn exponents_between<'p>(
        &'p self,
        branch: usize,
        low: &'p Rational,
        high: Option<&'p Rational>,
    ) -> impl Iterator<Item = &'p (Rational, BigInt)> + 'p {
        self.profile.exponents[branch]
            .iter()
            .filter(move |(e, _)| e > low && high.is_none_or(|h| e < h))
    }

    /// Grows the subtree for `group`, which shares the path up to node
    /// `from` at height `low` and leaves it with edge weight `weight`.
    fn grow(
        &mut self,
        group: &[usize],
        mut from: NodeId,
        low: &Rational,
        mut weight: BigInt,
    ) -> Result<(), EggersError> {
        if let [branch] = *group {
            let steps: Vec<(Rational, BigInt)> = self.exponents_between(branch, low, None).cloned().collect();
            for (e, k) in steps {
                from = self.node(ExtRat::from(e), Some((from, &weight)));
                weight *= k;
            }
            let leaf = self.node(ExtRat::infinity(), Some((from, &weight)));
            self.leaves.insert(leaf, self.profile.ids[branch].clone());
            return Ok(());
        }

        let contacts = &self.profile.contacts;
        let split = group
            .iter()
            .enumerate()
            .flat_map(|(a, &i)| group[a + 1..].iter().map(move |&j| &contacts[i][j]))
            .min()
            .expect("at least two branches")
            .clone();
        let lead = group[0];
        let shared: Vec<(Rational, BigInt)> = self.exponents_between(lead, low, Some(&split)).cloned().collect();
        for &other in &group[1..] {
            let theirs: Vec<&(Rational, BigInt)> = self.exponents_between(other, low, Some(&split)).collect();
            if theirs.len() != shared.len() || theirs.iter().zip(&shared).any(|(a, b)| *a != b) {
                return Err(EggersError::InconsistentBranches(
                    self.profile.ids[lead].clone(),
                    self.profile.ids[other].clone(),
                    fmt_rational(&split),
                ));
            }
        }
        for (e, k) in shared {
            from = self.node(ExtRat::from(e), Some((from, &weight)));
            weight *= k;
        }
        let vertex = self.node(ExtRat::from(split.clone()), Some((from, &weight)));

        // classes of "contact > split", ordered by least member
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &i in group {
            match classes.iter_mut().find(|c| contacts[c[0]][i] > split) {
                Some(c) => c.push(i),
                None => classes.push(vec![i]),
            }
        }
        for class in classes {
            let gain: BigInt = self.profile.exponents[class[0]]
                .iter()
                .filter(|(e, _)| *e == split)
                .map(|(_, k)| k.clone())
                .product();
            for &other in &class[1..] {
                let at_split = self.profile.exponents[other].iter().any(|(e, _)| *e == split);
                if at_split != (gain > BigInt::one()) {
                    return Err(EggersError::InconsistentBranches(
                        self.profile.ids[class[0]].clone(),
                        self.profile.ids[other].clone(),
                        fmt_rational(&split),
                    ));
                }
            }
            self.grow(&class, vertex, &split, &weight * gain)?;
        }
        Ok(())
    }
}

/// Builds the tree by splitting the branch set at the least contact,
/// recursively, and inserting each branch's characteristic exponents on
/// its path. Node ids follow a pre-order walk in canonical child order.
pub fn build_tree_from_profile(profile: &BranchProfile) -> Result<EggersWallTree, EggersError> {
    if profile.ids.is_empty() {
        return Err(EggersError::Puiseux(crate::puiseux::PuiseuxError::EmptyCurve));
    }
    profile.check_ultrametric()?;
    let mut b = Builder {
        profile,
        heights: Vec::new(),
        edges: Vec::new(),
        leaves: BTreeMap::new(),
    };
    let root = b.node(ExtRat::integer(0), None);
    let all: Vec<usize> = (0..profile.len()).collect();
    b.grow(&all, root, &Rational::from_integer(0.into()), BigInt::one())?;
    EggersWallTree::from_parts(b.heights, b.edges, b.leaves, profile.ids.clone())
}
