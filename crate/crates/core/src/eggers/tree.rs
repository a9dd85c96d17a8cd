use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::EggersError;
use crate::exactnum::{ExtRat, Rational};

pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub from: NodeId,
    pub to: NodeId,
    #[serde(serialize_with = "crate::exactnum::repr::ser_bigint")]
    pub weight: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EggersWallTree {
    heights: Vec<ExtRat>,
    // indexed by the child node; None for the root
    parent_edge: Vec<Option<Edge>>,
    children: Vec<Vec<NodeId>>,
    leaves: BTreeMap<NodeId, String>,
    branches: Vec<String>,
    leaf_of: Vec<NodeId>,
    below: Vec<Vec<usize>>,
}

/// One point of `r^{-1}(b + ε)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlicePoint {
    /// Upper node of the edge carrying the point.
    pub component: NodeId,
    #[serde(serialize_with = "crate::exactnum::repr::ser_bigint")]
    pub weight: BigInt,
    /// Branch ids through the point, in input order.
    pub branches: Vec<String>,
    #[serde(skip)]
    pub branch_indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelSlice {
    pub height: ExtRat,
    pub points: Vec<SlicePoint>,
}

impl LevelSlice {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Index of the point carrying branch `branch`.
    pub fn point_of(&self, branch: usize) -> Option<usize> {
        self.points.iter().position(|p| p.branch_indices.contains(&branch))
    }
}

impl EggersWallTree {
    /// Assembles a tree from raw parts: node heights, edges, leaf labels and
    /// the input order of branches. Children are put in canonical order
    /// (by least branch index below them) and every invariant is checked.
    pub fn from_parts(
        heights: Vec<ExtRat>,
        edges: Vec<Edge>,
        leaves: BTreeMap<NodeId, String>,
        branches: Vec<String>,
    ) -> Result<Self, EggersError> {
        let n = heights.len();
        let invalid = |m: String| Err(EggersError::Invalid(m));
        if n == 0 {
            return invalid("no nodes".into());
        }
        let mut parent_edge: Vec<Option<Edge>> = vec![None; n];
        let mut children = vec![Vec::new(); n];
        for e in edges {
            if e.from >= n || e.to >= n {
                return invalid(format!("edge {}->{} references a missing node", e.from, e.to));
            }
            if parent_edge[e.to].is_some() {
                return invalid(format!("node {} has two parents", e.to));
            }
            children[e.from].push(e.to);
            let to = e.to;
            parent_edge[to] = Some(e);
        }
        let roots: Vec<NodeId> = (0..n).filter(|&i| parent_edge[i].is_none()).collect();
        if roots != [0] {
            return invalid(format!("expected node 0 to be the only root, found roots {roots:?}"));
        }
        let mut leaf_of = Vec::with_capacity(branches.len());
        for id in &branches {
            match leaves.iter().find(|(_, l)| *l == id) {
                Some((&node, _)) => leaf_of.push(node),
                None => return invalid(format!("branch {id:?} has no leaf")),
            }
        }
        if leaves.len() != branches.len() {
            return invalid("leaf labels and branch list differ".into());
        }

        // reachability from the root and branch sets, post-order
        let mut below = vec![Vec::new(); n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(children[v].iter().copied());
            if order.len() > n {
                return invalid("cycle".into());
            }
        }
        if order.len() != n {
            return invalid("tree is not connected".into());
        }
        for (b, &leaf) in leaf_of.iter().enumerate() {
            below[leaf].push(b);
        }
        for &v in order.iter().rev() {
            let mut acc = below[v].clone();
            for &c in &children[v] {
                acc.extend(below[c].iter().copied());
            }
            acc.sort_unstable();
            below[v] = acc;
        }
        for ch in children.iter_mut() {
            ch.sort_by_key(|&c| below[c].first().copied().unwrap_or(usize::MAX));
        }
        let tree = EggersWallTree {
            heights,
            parent_edge,
            children,
            leaves,
            branches,
            leaf_of,
            below,
        };
        tree.check_invariants()?;
        Ok(tree)
    }

    pub fn check_invariants(&self) -> Result<(), EggersError> {
        let fail = |m: String| Err(EggersError::Invalid(m));
        if !self.heights[0].is_zero() {
            return fail("root must be at height 0".into());
        }
        for v in 0..self.heights.len() {
            let is_leaf = self.leaves.contains_key(&v);
            if is_leaf != self.heights[v].is_infinite() {
                return fail(format!("node {v}: leaves must be exactly the nodes at infinity"));
            }
            if is_leaf && !self.children[v].is_empty() {
                return fail(format!("leaf {v} has children"));
            }
            if !is_leaf && self.children[v].is_empty() {
                return fail(format!("node {v} is a dead end below infinity"));
            }
            if let Some(e) = &self.parent_edge[v] {
                if self.heights[e.from] >= self.heights[v] {
                    return fail(format!("heights do not increase along {}->{}", e.from, v));
                }
                if e.weight < BigInt::one() {
                    return fail(format!("edge {}->{} has non-positive weight", e.from, v));
                }
                match &self.parent_edge[e.from] {
                    None if !e.weight.is_one() => {
                        return fail(format!("first edge {}->{} must have weight 1", e.from, v))
                    }
                    Some(up) if !e.weight.is_multiple_of(&up.weight) => {
                        return fail(format!(
                            "weight {} on {}->{} is not a multiple of {}",
                            e.weight, e.from, v, up.weight
                        ))
                    }
                    _ => {}
                }
            }
            if v != 0 && !is_leaf && self.children[v].len() == 1 {
                let into = self.weight_into(v).expect("non-root");
                let out = self.weight_into(self.children[v][0]).expect("child");
                if into == out {
                    return fail(format!("node {v} neither branches nor increases the weight"));
                }
            }
        }
        Ok(())
    }

    pub fn root(&self) -> NodeId {
        0
    }

    pub fn node_count(&self) -> usize {
        self.heights.len()
    }

    pub fn height(&self, v: NodeId) -> &ExtRat {
        &self.heights[v]
    }

    pub fn children(&self, v: NodeId) -> &[NodeId] {
        &self.children[v]
    }

    pub fn parent_edge(&self, v: NodeId) -> Option<&Edge> {
        self.parent_edge[v].as_ref()
    }

    pub fn weight_into(&self, v: NodeId) -> Option<&BigInt> {
        self.parent_edge[v].as_ref().map(|e| &e.weight)
    }

    /// Edges ordered by their upper node.
    pub fn edges(&self) -> Vec<Edge> {
        self.parent_edge.iter().flatten().cloned().collect()
    }

    pub fn leaves(&self) -> &BTreeMap<NodeId, String> {
        &self.leaves
    }

    /// Branch ids in input order.
    pub fn branch_ids(&self) -> &[String] {
        &self.branches
    }

    pub fn leaf_of(&self, branch: usize) -> NodeId {
        self.leaf_of[branch]
    }

    /// Branch indices below `v`, ascending.
    pub fn branches_below(&self, v: NodeId) -> &[usize] {
        &self.below[v]
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.leaves.contains_key(&v)
    }

    /// Nodes on the path from the root to the leaf of `branch`.
    pub fn path(&self, branch: usize) -> Vec<NodeId> {
        let mut v = self.leaf_of[branch];
        let mut out = vec![v];
        while let Some(e) = &self.parent_edge[v] {
            v = e.from;
            out.push(v);
        }
        out.reverse();
        out
    }

    pub fn lowest_common_ancestor(&self, a: usize, b: usize) -> NodeId {
        let (pa, pb) = (self.path(a), self.path(b));
        pa.iter()
            .zip(&pb)
            .take_while(|(x, y)| x == y)
            .last()
            .map(|(x, _)| *x)
            .expect("paths share the root")
    }

    /// Heights of the nodes that are neither the root nor leaves, ascending.
    pub fn interior_heights(&self) -> Vec<Rational> {
        let mut hs: Vec<Rational> = (1..self.heights.len())
            .filter(|v| !self.is_leaf(*v))
            .filter_map(|v| self.heights[v].as_finite().cloned())
            .collect();
        hs.sort();
        hs.dedup();
        hs
    }

    /// The points of `r^{-1}(b + ε)` for infinitesimal ε > 0, in canonical
    /// order. At `b = ∞` these are the leaves.
    pub fn level_slice(&self, b: &ExtRat) -> Result<LevelSlice, EggersError> {
        if *b < ExtRat::integer(1) {
            return Err(EggersError::LevelBelowOne(b.to_string()));
        }
        let mut points: Vec<SlicePoint> = self
            .parent_edge
            .iter()
            .flatten()
            .filter(|e| {
                if b.is_infinite() {
                    self.heights[e.to].is_infinite()
                } else {
                    self.heights[e.from] <= *b && *b < self.heights[e.to]
                }
            })
            .map(|e| SlicePoint {
                component: e.to,
                weight: e.weight.clone(),
                branches: self.below[e.to].iter().map(|&i| self.branches[i].clone()).collect(),
                branch_indices: self.below[e.to].clone(),
            })
            .collect();
        points.sort_by_key(|p| p.branch_indices[0]);
        Ok(LevelSlice {
            height: b.clone(),
            points,
        })
    }

    /// Weight of the edge carrying branch `branch` just above height `b`.
    pub fn weight_above(&self, branch: usize, b: &ExtRat) -> BigInt {
        let path = self.path(branch);
        for w in path.windows(2) {
            if b.is_infinite() {
                continue;
            }
            if self.heights[w[0]] <= *b && *b < self.heights[w[1]] {
                return self.weight_into(w[1]).cloned().expect("edge");
            }
        }
        self.weight_into(*path.last().expect("leaf"))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }
}
