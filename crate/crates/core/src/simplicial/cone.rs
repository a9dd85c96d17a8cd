use serde::Serialize;

use super::{homology, HomologyProfile, SimplicialError, SimplicialPair};
use crate::exactnum::{fmt_rational, Rational};

/// MD homology of the b-cone over `(L, L1)` at `b' < b`, at `b' = b`, and
/// at `b' = ∞`. Values for `b < b' < ∞` are not computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BConeDiagram {
    #[serde(serialize_with = "crate::exactnum::repr::ser_rational")]
    pub b: Rational,
    /// Ranks per degree on `(0, b)`.
    pub below: Vec<usize>,
    pub at_b: HomologyProfile,
    pub at_infinity: HomologyProfile,
}

impl BConeDiagram {
    /// `(rank below b, rank at b)` in degree `n`.
    pub fn ranks(&self, n: usize) -> (usize, usize) {
        (self.below.get(n).copied().unwrap_or(0), self.at_b.rank(n))
    }
}

pub fn bcone_diagram(p: &SimplicialPair, b: &Rational) -> Result<BConeDiagram, SimplicialError> {
    if *b < Rational::from_integer(1.into()) {
        return Err(SimplicialError::BelowOne(fmt_rational(b)));
    }
    let h = homology(p);
    let degrees = h.degrees.len().max(1);
    let mut below = vec![0; degrees];
    if p.sub_is_empty() && p.vertex_count() > 0 {
        below[0] = 1;
    }
    Ok(BConeDiagram {
        b: b.clone(),
        below,
        at_b: h.clone(),
        at_infinity: h,
    })
}

/// Homology of the link of a plane curve with `n` branches: `n` circles.
pub fn curve_link_profile(n: usize) -> HomologyProfile {
    HomologyProfile::free(&[n, n])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn circle_cone() {
        let d = bcone_diagram(&SimplicialPair::cycle(3, 0), &r(3, 2)).unwrap();
        assert_eq!(d.ranks(0), (1, 1));
        assert_eq!(d.ranks(1), (0, 1));
        assert_eq!(d.at_infinity.ranks(), vec![1, 1]);
    }

    #[test]
    fn relative_circle_cone() {
        let p = SimplicialPair::new(&[vec![0, 1], vec![1, 2], vec![0, 2]], &[vec![0]]).unwrap();
        let d = bcone_diagram(&p, &r(2, 1)).unwrap();
        assert_eq!(d.ranks(0), (0, 0));
        assert_eq!(d.ranks(1), (0, 1));
    }

    #[test]
    fn point_cone() {
        let p = SimplicialPair::new(&[vec![0]], &[]).unwrap();
        for b in [r(1, 1), r(7, 3)] {
            let d = bcone_diagram(&p, &b).unwrap();
            assert_eq!(d.ranks(0), (1, 1));
            assert_eq!(d.at_infinity.rank(0), 1);
        }
    }

    #[test]
    fn rejects_small_b() {
        assert_eq!(
            bcone_diagram(&SimplicialPair::cycle(3, 0), &r(1, 2)),
            Err(SimplicialError::BelowOne("1/2".into()))
        );
    }

    #[test]
    fn link_profiles() {
        for n in [1, 4, 5] {
            assert_eq!(curve_link_profile(n).ranks(), vec![n, n]);
        }
    }
}
