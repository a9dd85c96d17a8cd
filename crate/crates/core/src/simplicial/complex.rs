use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::SimplicialError;

/// A finite simplicial complex `L` with a subcomplex `L1`, both closed
/// under faces. Simplices are sorted vertex lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialPair {
    cells: Vec<Vec<Vec<usize>>>,
    sub: BTreeSet<Vec<usize>>,
}

fn normalize(s: &[usize]) -> Result<Vec<usize>, SimplicialError> {
    if s.is_empty() {
        return Err(SimplicialError::EmptySimplex);
    }
    let mut v = s.to_vec();
    v.sort_unstable();
    if v.windows(2).any(|w| w[0] == w[1]) {
        return Err(SimplicialError::RepeatedVertex(s.to_vec()));
    }
    Ok(v)
}

fn close(generators: &[Vec<usize>]) -> Result<BTreeSet<Vec<usize>>, SimplicialError> {
    let mut all = BTreeSet::new();
    let mut stack = generators.iter().map(|s| normalize(s)).collect::<Result<Vec<_>, _>>()?;
    while let Some(s) = stack.pop() {
        if s.len() > 1 {
            for i in 0..s.len() {
                let mut f = s.clone();
                f.remove(i);
                if !all.contains(&f) {
                    stack.push(f);
                }
            }
        }
        all.insert(s);
    }
    Ok(all)
}

impl SimplicialPair {
    /// Builds the pair generated by `simplices` and `sub`; faces are added.
    pub fn new(simplices: &[Vec<usize>], sub: &[Vec<usize>]) -> Result<Self, SimplicialError> {
        let all = close(simplices)?;
        let sub = close(sub)?;
        if let Some(s) = sub.iter().find(|s| !all.contains(*s)) {
            return Err(SimplicialError::SubNotContained(s.clone()));
        }
        let dim = all.iter().map(Vec::len).max().unwrap_or(0);
        let mut cells = vec![Vec::new(); dim];
        for s in all {
            cells[s.len() - 1].push(s);
        }
        Ok(SimplicialPair { cells, sub })
    }

    /// Hollow `n`-gon on vertices `offset..offset+n`.
    pub fn cycle(n: usize, offset: usize) -> Self {
        assert!(n >= 3, "a simplicial circle needs at least 3 vertices");
        let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![offset + i, offset + (i + 1) % n]).collect();
        Self::new(&edges, &[]).expect("cycle edges are valid")
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &SimplicialPair) -> SimplicialPair {
        let shift = self.vertices().last().map_or(0, |v| v + 1);
        let moved = |s: &Vec<usize>| s.iter().map(|v| v + shift).collect::<Vec<_>>();
        let mut simplices: Vec<Vec<usize>> = self.simplices().cloned().collect();
        simplices.extend(other.simplices().map(moved));
        let mut sub: Vec<Vec<usize>> = self.sub.iter().cloned().collect();
        sub.extend(other.sub.iter().map(moved));
        Self::new(&simplices, &sub).expect("union of valid pairs")
    }

    pub fn dimension(&self) -> Option<usize> {
        self.cells.len().checked_sub(1)
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.cells
            .first()
            .map_or_else(Vec::new, |vs| vs.iter().map(|v| v[0]).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.cells.first().map_or(0, Vec::len)
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.cells.iter().flatten()
    }

    pub fn simplices_of_dim(&self, n: usize) -> &[Vec<usize>] {
        self.cells.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.simplices_of_dim(s.len().wrapping_sub(1))
            .binary_search_by(|c| c.as_slice().cmp(s))
            .is_ok()
    }

    pub fn in_sub(&self, s: &[usize]) -> bool {
        self.sub.contains(s)
    }

    pub fn sub_is_empty(&self) -> bool {
        self.sub.is_empty()
    }

    /// Basis of the relative chain group `C_n(L, L1)`.
    pub fn chain_basis(&self, n: usize) -> Vec<&Vec<usize>> {
        self.simplices_of_dim(n)
            .iter()
            .filter(|s| !self.sub.contains(*s))
            .collect()
    }

    pub(crate) fn chain_index(&self, n: usize) -> BTreeMap<&[usize], usize> {
        self.chain_basis(n)
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect()
    }

    /// Alternating count of relative simplices.
    pub fn euler_characteristic(&self) -> i64 {
        (0..self.cells.len())
            .map(|n| {
                let c = self.chain_basis(n).len() as i64;
                if n % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum()
    }

    pub fn to_json(&self) -> String {
        let wire = Wire {
            simplices: self.simplices().cloned().collect(),
            sub: self.sub.iter().cloned().collect(),
        };
        serde_json::to_string(&wire).expect("complex serializes")
    }

    /// Reads `{"simplices": [...], "sub": [...]}`; `sub` may be omitted and
    /// faces need not be listed.
    pub fn from_json(text: &str) -> Result<Self, SimplicialError> {
        let w: Wire = serde_json::from_str(text).map_err(|e| SimplicialError::Json(e.to_string()))?;
        Self::new(&w.simplices, &w.sub)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Wire {
    simplices: Vec<Vec<usize>>,
    #[serde(default)]
    sub: Vec<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closes_under_faces() {
        let p = SimplicialPair::new(&[vec![2, 0, 1]], &[]).unwrap();
        assert_eq!(p.dimension(), Some(2));
        assert_eq!(p.simplices().count(), 7);
        assert!(p.contains(&[0, 2]));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(SimplicialPair::new(&[vec![]], &[]), Err(SimplicialError::EmptySimplex));
        assert!(matches!(
            SimplicialPair::new(&[vec![1, 1]], &[]),
            Err(SimplicialError::RepeatedVertex(_))
        ));
        assert!(matches!(
            SimplicialPair::new(&[vec![0, 1]], &[vec![2]]),
            Err(SimplicialError::SubNotContained(_))
        ));
        assert!(matches!(
            SimplicialPair::from_json("{\"simplices\":1}"),
            Err(SimplicialError::Json(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let p = SimplicialPair::from_json(r#"{"simplices":[[0,1],[1,2],[0,2]],"sub":[[0]]}"#).unwrap();
        assert_eq!(p.vertex_count(), 3);
        assert!(p.in_sub(&[0]));
        assert_eq!(SimplicialPair::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn union_shifts() {
        let two = SimplicialPair::cycle(3, 0).disjoint_union(&SimplicialPair::cycle(3, 0));
        assert_eq!(two.vertices(), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(two.simplices_of_dim(1).len(), 6);
    }
}
