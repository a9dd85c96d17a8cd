use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{truncation_components, OracleError};
use crate::exactnum::{fmt_rational, unimodular_inverse, IntMatrix, Rational};
use crate::puiseux::Curve;
use crate::simplicial::{induced_map, HomologyBasis, SimplicialPair};

/// `l` base circles; base circle `i` is covered by sheets of the listed
/// degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleCover {
    pub base_circles: usize,
    pub sheets: Vec<Vec<BigInt>>,
    /// Base circle and degree of each sheet, in sheet order.
    pub sheet_targets: Vec<(usize, BigInt)>,
}

impl CircleCover {
    /// The cover of the level-`b2` truncation classes by the level-`b1` ones.
    pub fn between(c: &Curve, b1: &Rational, b2: &Rational) -> Result<Self, OracleError> {
        if b2 < &Rational::one() {
            return Err(OracleError::BelowOne(fmt_rational(b2)));
        }
        if b1 < b2 {
            return Err(OracleError::Order {
                b1: fmt_rational(b1),
                b2: fmt_rational(b2),
            });
        }
        let base = truncation_components(c, b2);
        let upper = truncation_components(c, b1);
        let mut sheets = vec![Vec::new(); base.len()];
        let mut sheet_targets = Vec::with_capacity(upper.len());
        for s in &upper {
            let i = base
                .iter()
                .position(|k| k.member_indices.contains(&s.member_indices[0]))
                .expect("every branch has a class at every level");
            if !s.kappa.is_multiple_of(&base[i].kappa) {
                return Err(OracleError::Divisibility {
                    upper: s.kappa.to_string(),
                    lower: base[i].kappa.to_string(),
                });
            }
            let degree = &s.kappa / &base[i].kappa;
            sheets[i].push(degree.clone());
            sheet_targets.push((i, degree));
        }
        Ok(CircleCover {
            base_circles: base.len(),
            sheets,
            sheet_targets,
        })
    }
}

/// Oriented cycle `offset → offset+1 → … → offset` as a chain of `p`.
fn fundamental_cycle(p: &SimplicialPair, n: usize, offset: usize) -> Vec<BigInt> {
    let basis = p.chain_basis(1);
    let mut z = vec![BigInt::zero(); basis.len()];
    for i in 0..n {
        let (a, b) = (offset + i, offset + (i + 1) % n);
        let e = [a.min(b), a.max(b)];
        let k = basis.iter().position(|s| s.as_slice() == e).expect("cycle edge");
        z[k] += if a < b { 1 } else { -1 };
    }
    z
}

fn vertex_chain(p: &SimplicialPair, v: usize) -> Vec<BigInt> {
    p.chain_basis(0)
        .iter()
        .map(|s| BigInt::from(u8::from(s[0] == v)))
        .collect()
}

/// Columns of `m` expressed in a new target basis: solves `change · x = m`.
fn in_basis(change: &IntMatrix, m: &IntMatrix) -> IntMatrix {
    let inv = unimodular_inverse(change).expect("canonical classes form a basis");
    inv.matmul(m).expect("shapes")
}

fn coordinate_matrix(basis: &HomologyBasis, chains: &[Vec<BigInt>]) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = chains
        .iter()
        .map(|z| basis.coordinates(z).expect("chain is a cycle"))
        .collect();
    IntMatrix::from_fn(basis.free_rank(), cols.len(), |i, j| cols[j][i].clone())
}

/// The maps induced in `H_0` and `H_1` by the projection from level `b1`
/// to level `b2`, in the bases of truncation classes (vertex 0 for `H_0`,
/// the positively oriented circle for `H_1`).
pub fn covering_maps(c: &Curve, b1: &Rational, b2: &Rational) -> Result<(IntMatrix, IntMatrix), OracleError> {
    let cover = CircleCover::between(c, b1, b2)?;
    let l = cover.base_circles;
    let target = (1..l).fold(SimplicialPair::cycle(3, 0), |acc, _| {
        acc.disjoint_union(&SimplicialPair::cycle(3, 0))
    });

    let tb0 = HomologyBasis::new(&target, 0);
    let tb1 = HomologyBasis::new(&target, 1);
    let change0 = coordinate_matrix(&tb0, &(0..l).map(|i| vertex_chain(&target, 3 * i)).collect::<Vec<_>>());
    let change1 = coordinate_matrix(
        &tb1,
        &(0..l).map(|i| fundamental_cycle(&target, 3, 3 * i)).collect::<Vec<_>>(),
    );

    let sheets = cover.sheet_targets.len();
    let mut h0 = IntMatrix::zeros(l, sheets);
    let mut h1 = IntMatrix::zeros(l, sheets);
    for (j, (i, degree)) in cover.sheet_targets.iter().enumerate() {
        let k = usize::try_from(degree).expect("small degree");
        let sheet = SimplicialPair::cycle(3 * k, 0);
        let map: Vec<usize> = (0..3 * k).map(|v| 3 * i + v % 3).collect();
        for (n, out, change) in [(0, &mut h0, &change0), (1, &mut h1, &change1)] {
            let source = HomologyBasis::new(&sheet, n);
            let canonical = if n == 0 {
                vertex_chain(&sheet, 0)
            } else {
                fundamental_cycle(&sheet, 3 * k, 0)
            };
            let src = coordinate_matrix(&source, &[canonical]);
            let induced = induced_map(&sheet, &target, &map, n)?;
            let col = in_basis(change, &induced.matmul(&src).expect("shapes"));
            for r in 0..l {
                out[(r, j)] = col[(r, 0)].clone();
            }
        }
    }
    Ok((h0, h1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn reducible_m1() {
        let c = Curve::parse_all(&[
            "x + x^2 + x^(5/2)",
            "x + 2*x^2",
            "2*x + x^2",
            "2*x + 2*x^2",
            "2*x + 3*x^2",
        ])
        .unwrap();
        let (h0, h1) = covering_maps(&c, &q(3, 1), &q(3, 2)).unwrap();
        assert_eq!(h1, IntMatrix::from_i64(&[&[2, 1, 0, 0, 0], &[0, 0, 1, 1, 1]]));
        assert_eq!(h0, IntMatrix::from_i64(&[&[1, 1, 0, 0, 0], &[0, 0, 1, 1, 1]]));
        let cover = CircleCover::between(&c, &q(3, 1), &q(3, 2)).unwrap();
        assert_eq!(
            cover.sheets,
            vec![vec![2.into(), 1.into()], vec![1.into(), 1.into(), 1.into()]]
        );
    }

    #[test]
    fn cusp() {
        let c = Curve::parse_all(&["x^(3/2)"]).unwrap();
        let (h0, h1) = covering_maps(&c, &q(3, 2), &q(1, 1)).unwrap();
        assert_eq!(h1, IntMatrix::from_i64(&[&[2]]));
        assert!(h0.is_identity());
    }

    #[test]
    fn equal_levels_are_identities() {
        let c = Curve::parse_all(&["x^(3/2) + x^(5/2)", "x^(3/2) + x^(11/4)", "x^(5/2)"]).unwrap();
        for b in [q(1, 1), q(2, 1), q(21, 8), q(9, 1)] {
            let (h0, h1) = covering_maps(&c, &b, &b).unwrap();
            assert!(h0.is_identity() && h1.is_identity());
        }
    }

    #[test]
    fn rejects_bad_levels() {
        let c = Curve::parse_all(&["x"]).unwrap();
        assert!(matches!(
            covering_maps(&c, &q(1, 1), &q(2, 1)),
            Err(OracleError::Order { .. })
        ));
        assert!(matches!(
            covering_maps(&c, &q(2, 1), &q(1, 2)),
            Err(OracleError::BelowOne(_))
        ));
    }
}
