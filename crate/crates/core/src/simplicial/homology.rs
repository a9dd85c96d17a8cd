use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{SimplicialError, SimplicialPair};
use crate::exactnum::{snf, snf_decompose, IntMatrix, SnfDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeHomology {
    pub rank: usize,
    /// Invariant factors greater than 1.
    #[serde(serialize_with = "crate::exactnum::repr::bigint_vec::serialize")]
    pub torsion: Vec<BigInt>,
}

/// `H_n(L, L1; ℤ)` for `n = 0..=dim L`; higher degrees vanish.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub degrees: Vec<DegreeHomology>,
}

impl HomologyProfile {
    pub fn free(ranks: &[usize]) -> Self {
        HomologyProfile {
            degrees: ranks
                .iter()
                .map(|&rank| DegreeHomology {
                    rank,
                    torsion: Vec::new(),
                })
                .collect(),
        }
    }

    pub fn rank(&self, n: usize) -> usize {
        self.degrees.get(n).map_or(0, |d| d.rank)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.rank).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .enumerate()
            .map(|(n, d)| if n % 2 == 0 { d.rank as i64 } else { -(d.rank as i64) })
            .sum()
    }
}

fn sign(i: usize) -> BigInt {
    if i.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Matrix of `∂_n : C_n(L, L1) → C_{n-1}(L, L1)`.
pub(crate) fn boundary(p: &SimplicialPair, n: usize) -> IntMatrix {
    let cols = p.chain_basis(n);
    if n == 0 {
        return IntMatrix::zeros(0, cols.len());
    }
    let rows = p.chain_index(n - 1);
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (j, s) in cols.iter().enumerate() {
        for i in 0..s.len() {
            let mut face = (*s).clone();
            face.remove(i);
            if let Some(&r) = rows.get(face.as_slice()) {
                m[(r, j)] += sign(i);
            }
        }
    }
    m
}

pub fn homology(p: &SimplicialPair) -> HomologyProfile {
    let Some(dim) = p.dimension() else {
        return HomologyProfile { degrees: Vec::new() };
    };
    let snfs: Vec<_> = (0..=dim + 1).map(|n| snf(&boundary(p, n))).collect();
    let degrees = (0..=dim)
        .map(|n| {
            let c = p.chain_basis(n).len();
            DegreeHomology {
                rank: c - snfs[n].rank - snfs[n + 1].rank,
                torsion: snfs[n + 1]
                    .invariant_factors
                    .iter()
                    .filter(|f| !f.is_one())
                    .cloned()
                    .collect(),
            }
        })
        .collect();
    HomologyProfile { degrees }
}

/// Coordinates on `H_n(L, L1)`. With `∂_n` in Smith form the cycles are
/// the last columns of its right transform; the boundaries, written in
/// those cycle coordinates, are reduced once more.
#[derive(Debug, Clone)]
pub struct HomologyBasis {
    degree: usize,
    chain_dim: usize,
    kernel: SnfDecomposition,
    image: SnfDecomposition,
}

impl HomologyBasis {
    pub fn new(p: &SimplicialPair, n: usize) -> Self {
        let kernel = snf_decompose(&boundary(p, n));
        let next = boundary(p, n + 1);
        let in_kernel = kernel.right_inv.matmul(&next).expect("boundary shapes");
        let z = in_kernel.rows() - kernel.rank;
        let a = IntMatrix::from_fn(z, next.cols(), |i, j| in_kernel[(kernel.rank + i, j)].clone());
        debug_assert!((0..kernel.rank).all(|i| in_kernel.row(i).iter().all(Zero::is_zero)));
        let image = snf_decompose(&a);
        HomologyBasis {
            degree: n,
            chain_dim: next.rows(),
            kernel,
            image,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn free_rank(&self) -> usize {
        self.image.left.rows() - self.image.rank
    }

    pub fn torsion(&self) -> Vec<BigInt> {
        self.image.factors().into_iter().filter(|f| !f.is_one()).collect()
    }

    /// Free-part coordinates of the class of `cycle`; `None` if `cycle` is
    /// not a relative cycle.
    pub fn coordinates(&self, cycle: &[BigInt]) -> Option<Vec<BigInt>> {
        if cycle.len() != self.chain_dim {
            return None;
        }
        let y = self.kernel.right_inv.mul_vec(cycle).ok()?;
        if y[..self.kernel.rank].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let c = self.image.left.mul_vec(&y[self.kernel.rank..]).ok()?;
        Some(c[self.image.rank..].to_vec())
    }

    /// Cycles representing the free generators, as chains.
    pub fn generators(&self) -> Vec<Vec<BigInt>> {
        let r = self.kernel.rank;
        (self.image.rank..self.image.left.rows())
            .map(|g| {
                let in_kernel = self.image.left_inv.column(g);
                (0..self.chain_dim)
                    .map(|i| {
                        in_kernel
                            .iter()
                            .enumerate()
                            .map(|(k, v)| v * &self.kernel.right[(i, r + k)])
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }
}

/// Pushes a relative chain of `dom` forward along the vertex map.
pub(crate) fn push_chain(
    dom: &SimplicialPair,
    cod: &SimplicialPair,
    vertex_map: &[usize],
    n: usize,
    chain: &[BigInt],
) -> Result<Vec<BigInt>, SimplicialError> {
    let target = cod.chain_index(n);
    let mut out = vec![BigInt::zero(); target.len()];
    for (s, c) in dom.chain_basis(n).into_iter().zip(chain) {
        if c.is_zero() {
            continue;
        }
        let mut image = Vec::with_capacity(s.len());
        for &v in s {
            image.push(*vertex_map.get(v).ok_or(SimplicialError::MapDomain(v))?);
        }
        let mut swaps = 0;
        for i in 0..image.len() {
            for j in 0..image.len() - 1 - i {
                if image[j] > image[j + 1] {
                    image.swap(j, j + 1);
                    swaps += 1;
                }
            }
        }
        if image.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        if !cod.contains(&image) {
            return Err(SimplicialError::NotSimplicial(s.clone()));
        }
        if let Some(&k) = target.get(image.as_slice()) {
            out[k] += c * sign(swaps);
        }
    }
    Ok(out)
}

fn check_map(dom: &SimplicialPair, cod: &SimplicialPair, vertex_map: &[usize]) -> Result<(), SimplicialError> {
    for s in dom.simplices() {
        let mut image = s
            .iter()
            .map(|&v| vertex_map.get(v).copied().ok_or(SimplicialError::MapDomain(v)))
            .collect::<Result<Vec<_>, _>>()?;
        image.sort_unstable();
        image.dedup();
        if !cod.contains(&image) {
            return Err(SimplicialError::NotSimplicial(s.clone()));
        }
        if dom.in_sub(s) && !cod.in_sub(&image) {
            return Err(SimplicialError::SubNotPreserved(s.clone()));
        }
    }
    Ok(())
}

/// The map `H_n(dom) → H_n(cod)` on free parts, in the coordinates of
/// [`HomologyBasis`] on both sides.
pub fn induced_map(
    dom: &SimplicialPair,
    cod: &SimplicialPair,
    vertex_map: &[usize],
    n: usize,
) -> Result<IntMatrix, SimplicialError> {
    check_map(dom, cod, vertex_map)?;
    let source = HomologyBasis::new(dom, n);
    let target = HomologyBasis::new(cod, n);
    let gens = source.generators();
    let mut m = IntMatrix::zeros(target.free_rank(), gens.len());
    for (j, g) in gens.iter().enumerate() {
        let pushed = push_chain(dom, cod, vertex_map, n, g)?;
        let coords = target.coordinates(&pushed).expect("chain maps send cycles to cycles");
        for (i, v) in coords.into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    Ok(m)
}
