use num_bigint::BigInt;

use crate::exactnum::Rational;
use crate::puiseux::{Curve, PuiseuxSeries};

/// Branches whose series agree in every term of exponent `<= b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncationClass {
    pub representative: PuiseuxSeries,
    pub members: Vec<String>,
    pub member_indices: Vec<usize>,
    /// lcm of the denominators of the truncated exponents.
    pub kappa: BigInt,
}

/// Classes ordered by least member, matching the tree's slice order.
pub fn truncation_components(c: &Curve, b: &Rational) -> Vec<TruncationClass> {
    let mut classes: Vec<TruncationClass> = Vec::new();
    for (i, branch) in c.branches().iter().enumerate() {
        let t = branch.series.truncate(b);
        match classes.iter_mut().find(|k| k.representative == t) {
            Some(k) => {
                k.members.push(branch.id.clone());
                k.member_indices.push(i);
            }
            None => classes.push(TruncationClass {
                kappa: t.multiplicity(),
                representative: t,
                members: vec![branch.id.clone()],
                member_indices: vec![i],
            }),
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn members(c: &Curve, b: Rational) -> Vec<Vec<String>> {
        truncation_components(c, &b).into_iter().map(|k| k.members).collect()
    }

    #[test]
    fn eggers_example_counts() {
        let c = Curve::parse_all(&[
            "x^(3/2) + x^(5/2)",
            "x^(3/2) + x^(11/4)",
            "x^(3/2) + x^(11/4) + x^(37/12)",
            "x^(5/2) + x^(11/4)",
        ])
        .unwrap();
        let at = truncation_components(&c, &q(11, 4));
        assert_eq!(at.len(), 3);
        let kappas: Vec<BigInt> = at.iter().map(|k| k.kappa.clone()).collect();
        assert_eq!(kappas, vec![2.into(), 4.into(), 4.into()]);
        assert_eq!(truncation_components(&c, &q(3, 2)).len(), 2);
        assert_eq!(truncation_components(&c, &q(1, 1)).len(), 1);
        assert_eq!(truncation_components(&c, &q(100, 1)).len(), 4);
    }

    #[test]
    fn reducible_classes() {
        let c = Curve::parse_all(&[
            "x + x^2 + x^(5/2)",
            "x + 2*x^2",
            "2*x + x^2",
            "2*x + 2*x^2",
            "2*x + 3*x^2",
        ])
        .unwrap();
        assert_eq!(members(&c, q(3, 2)), vec![vec!["C1", "C2"], vec!["C3", "C4", "C5"]]);
        assert_eq!(members(&c, q(7, 1)).len(), 5);
    }
}
