use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::PuiseuxError;
use crate::exactnum::{fmt_rational, lcm_denominators, ExtRat, GaussRat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Term {
    #[serde(rename = "exp", serialize_with = "crate::exactnum::repr::ser_rational")]
    #[serde(deserialize_with = "crate::exactnum::repr::de_rational")]
    pub exponent: Rational,
    pub coeff: GaussRat,
}

impl Term {
    pub fn new(exponent: Rational, coeff: GaussRat) -> Self {
        Term { exponent, coeff }
    }
}

/// A finite Puiseux series with exponents `>= 1`, strictly increasing,
/// and non-zero coefficients. The empty series is the branch `y = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PuiseuxSeries {
    terms: Vec<Term>,
}

/// `(m, k)` with `k >= 2`; the matching characteristic exponent is
/// `m / (k_1 ⋯ k_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PuiseuxPair {
    #[serde(serialize_with = "crate::exactnum::repr::ser_bigint")]
    #[serde(deserialize_with = "crate::exactnum::repr::de_bigint")]
    pub m: BigInt,
    #[serde(serialize_with = "crate::exactnum::repr::ser_bigint")]
    #[serde(deserialize_with = "crate::exactnum::repr::de_bigint")]
    pub k: BigInt,
}

impl PuiseuxSeries {
    /// Sorts the terms and validates them; equal exponents are rejected,
    /// not merged.
    pub fn new(mut terms: Vec<Term>) -> Result<Self, PuiseuxError> {
        terms.sort_by(|a, b| a.exponent.cmp(&b.exponent));
        for t in &terms {
            if t.exponent < Rational::one() {
                return Err(PuiseuxError::ExponentBelowOne(fmt_rational(&t.exponent)));
            }
            if t.coeff.is_zero() {
                return Err(PuiseuxError::ZeroCoefficient(fmt_rational(&t.exponent)));
            }
        }
        if let Some(w) = terms.windows(2).find(|w| w[0].exponent == w[1].exponent) {
            return Err(PuiseuxError::RepeatedExponent(fmt_rational(&w[0].exponent)));
        }
        Ok(PuiseuxSeries { terms })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Rational> {
        self.terms.iter().map(|t| &t.exponent)
    }

    /// Coefficient of `x^s`, zero when the term is absent.
    pub fn coeff_at(&self, s: &Rational) -> GaussRat {
        self.terms
            .binary_search_by(|t| t.exponent.cmp(s))
            .map(|i| self.terms[i].coeff.clone())
            .unwrap_or_else(|_| GaussRat::zero())
    }

    /// The terms with exponent `<= b`.
    pub fn truncate(&self, b: &Rational) -> PuiseuxSeries {
        PuiseuxSeries {
            terms: self.terms.iter().filter(|t| &t.exponent <= b).cloned().collect(),
        }
    }

    /// κ: the lcm of the exponent denominators.
    pub fn multiplicity(&self) -> BigInt {
        lcm_denominators(self.exponents())
    }

    pub fn characteristic_exponents(&self) -> Vec<Rational> {
        let mut ramification = BigInt::one();
        let mut out = Vec::new();
        for e in self.exponents() {
            if !ramification.is_multiple_of(e.denom()) {
                ramification = ramification.lcm(e.denom());
                out.push(e.clone());
            }
        }
        out
    }

    pub fn puiseux_pairs(&self) -> Vec<PuiseuxPair> {
        let mut product = BigInt::one();
        self.characteristic_exponents()
            .into_iter()
            .map(|e| {
                let scaled = e * Rational::from_integer(product.clone());
                let pair = PuiseuxPair {
                    m: scaled.numer().clone(),
                    k: scaled.denom().clone(),
                };
                product *= &pair.k;
                pair
            })
            .collect()
    }

    /// Product of the `k` of every characteristic exponent `<= b`.
    pub fn weight_at(&self, b: &ExtRat) -> BigInt {
        lcm_denominators(self.exponents().filter(|e| b >= *e))
    }

    /// Least exponent at which the coefficients differ, or `None` when the
    /// series are identical.
    pub fn contact(&self, other: &PuiseuxSeries) -> Option<Rational> {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return None,
                (Some(t), None) | (None, Some(t)) => return Some(t.exponent.clone()),
                (Some(s), Some(t)) => match s.exponent.cmp(&t.exponent) {
                    std::cmp::Ordering::Less => return Some(s.exponent.clone()),
                    std::cmp::Ordering::Greater => return Some(t.exponent.clone()),
                    std::cmp::Ordering::Equal => {
                        if s.coeff != t.coeff {
                            return Some(s.exponent.clone());
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }

    /// Slope of the tangent line `y = λx`: the coefficient of `x`.
    pub fn tangent_slope(&self) -> GaussRat {
        self.coeff_at(&Rational::one())
    }

    /// Largest contact of `self` with any Galois conjugate of `other`,
    /// i.e. with `other` after `x^{j/κ} ↦ ζ^j x^{j/κ}` for a κ-th root of
    /// unity ζ. `None` when some conjugate coincides with `self`.
    ///
    /// Only the roots of unity of ℚ(i) can occur as coefficient ratios, so
    /// the search is over integer congruences.
    pub fn max_conjugate_contact(&self, other: &PuiseuxSeries) -> Option<Rational> {
        let kappa = other.multiplicity();
        let mut exps: Vec<&Rational> = self.exponents().chain(other.exponents()).collect();
        exps.sort();
        exps.dedup();
        let mut best: Option<Rational> = Some(Rational::zero());
        let mut t = BigInt::zero();
        while t < kappa {
            let c = contact_with_twist(self, other, &kappa, &t, &exps);
            best = match (best, c) {
                (_, None) | (None, _) => None,
                (Some(x), Some(y)) => Some(x.max(y)),
            };
            if best.is_none() {
                break;
            }
            t += 1;
        }
        best
    }
}

/// Fourth roots of unity as exponents of i, or None for other values.
fn power_of_i(r: &GaussRat) -> Option<u32> {
    let one = Rational::one();
    let zero = Rational::zero();
    match (&r.re, &r.im) {
        (re, im) if *re == one && *im == zero => Some(0),
        (re, im) if *re == zero && *im == one => Some(1),
        (re, im) if *re == -one.clone() && *im == zero => Some(2),
        (re, im) if *re == zero && *im == -one.clone() => Some(3),
        _ => None,
    }
}

fn gauss_div(a: &GaussRat, b: &GaussRat) -> GaussRat {
    let norm = &b.re * &b.re + &b.im * &b.im;
    let conj = GaussRat::new(b.re.clone(), -b.im.clone());
    (a.clone() * conj).scale(&(Rational::one() / norm))
}

// Contact of `a` with `b` twisted by ζ = exp(2πi t/κ).
fn contact_with_twist(
    a: &PuiseuxSeries,
    b: &PuiseuxSeries,
    kappa: &BigInt,
    t: &BigInt,
    exps: &[&Rational],
) -> Option<Rational> {
    for &s in exps {
        let (ca, cb) = (a.coeff_at(s), b.coeff_at(s));
        let same = match (ca.is_zero(), cb.is_zero()) {
            (true, true) => true,
            (true, false) | (false, true) => false,
            (false, false) => match power_of_i(&gauss_div(&ca, &cb)) {
                None => false,
                Some(e) => {
                    // ζ^{sκ} = i^e  ⇔  4·t·(sκ) ≡ e·κ (mod 4κ)
                    let n = (s * Rational::from_integer(kappa.clone())).to_integer();
                    let modulus = kappa * 4;
                    let lhs: BigInt = t * n * 4;
                    let lhs = lhs.mod_floor(&modulus);
                    let rhs = (kappa * BigInt::from(e)).mod_floor(&modulus);
                    lhs == rhs
                }
            },
        };
        if !same {
            return Some(s.clone());
        }
    }
    None
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let negative_real = t.coeff.is_real() && t.coeff.re.is_negative();
            let coeff = if negative_real {
                -t.coeff.clone()
            } else {
                t.coeff.clone()
            };
            match (i, negative_real) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !coeff.is_one() {
                if coeff.is_real() {
                    write!(f, "{coeff}*")?;
                } else {
                    write!(f, "({coeff})*")?;
                }
            }
            if t.exponent.is_one() {
                f.write_str("x")?;
            } else if t.exponent.is_integer() {
                write!(f, "x^{}", t.exponent.numer())?;
            } else {
                write!(f, "x^({})", fmt_rational(&t.exponent))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::puiseux::parse_series;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn s(text: &str) -> PuiseuxSeries {
        parse_series(text).unwrap()
    }

    fn pairs(text: &str) -> Vec<(i64, i64)> {
        s(text)
            .puiseux_pairs()
            .iter()
            .map(|p| (i64::try_from(&p.m).unwrap(), i64::try_from(&p.k).unwrap()))
            .collect()
    }

    #[test]
    fn characteristic_exponents_examples() {
        assert_eq!(
            s("x^(3/2)+x^(11/4)+x^(37/12)").characteristic_exponents(),
            vec![q(3, 2), q(11, 4), q(37, 12)]
        );
        assert!(s("x + 2*x^2").characteristic_exponents().is_empty());
        assert_eq!(s("x^(3/2)+x^(5/2)").characteristic_exponents(), vec![q(3, 2)]);
    }

    #[test]
    fn pairs_examples() {
        assert_eq!(pairs("x^(3/2)+x^(11/4)+x^(37/12)"), vec![(3, 2), (11, 2), (37, 3)]);
        assert_eq!(pairs("x^(3/2)"), vec![(3, 2)]);
        assert!(pairs("x + x^2").is_empty());
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(s("x^(3/2)+x^(11/4)+x^(37/12)").multiplicity(), 12.into());
        assert_eq!(s("x + x^2").multiplicity(), 1.into());
        assert_eq!(s("x^(3/2)").multiplicity(), 2.into());
    }

    #[test]
    fn contact_examples() {
        assert_eq!(s("x^(3/2)+x^(5/2)").contact(&s("x^(3/2)+x^(11/4)")), Some(q(5, 2)));
        assert_eq!(s("x + x^2").contact(&s("2*x + x^2")), Some(q(1, 1)));
        assert_eq!(s("x + x^2 + x^(5/2)").contact(&s("x + 2*x^2")), Some(q(2, 1)));
        assert_eq!(s("x + x^2").contact(&s("x + x^2")), None);
        assert_eq!(s("0").contact(&s("x^(7/3)")), Some(q(7, 3)));
    }

    #[test]
    fn weight_counts_exponents_at_or_below() {
        let b = s("x^(3/2)+x^(11/4)+x^(37/12)");
        assert_eq!(b.weight_at(&ExtRat::integer(1)), 1.into());
        assert_eq!(b.weight_at(&ExtRat::ratio(3, 2)), 2.into());
        assert_eq!(b.weight_at(&ExtRat::ratio(3, 1)), 4.into());
        assert_eq!(b.weight_at(&ExtRat::infinity()), 12.into());
    }

    #[test]
    fn tangent_slopes() {
        assert_eq!(s("2*x + x^2").tangent_slope(), GaussRat::from_int(2));
        assert_eq!(s("x^(3/2)").tangent_slope(), GaussRat::zero());
    }

    #[test]
    fn conjugate_contact_detects_hidden_coincidence() {
        // x^(3/2) and -x^(3/2) are conjugate parametrizations of one branch.
        assert_eq!(s("x^(3/2)").contact(&s("-x^(3/2)")), Some(q(3, 2)));
        assert_eq!(s("x^(3/2)").max_conjugate_contact(&s("-x^(3/2)")), None);
        // Conjugation can lift the contact past 3/2 without coincidence.
        assert_eq!(
            s("x^(3/2) + x^2").max_conjugate_contact(&s("-x^(3/2) + 2*x^2")),
            Some(q(2, 1))
        );
        // Distinct linear terms are never identified.
        assert_eq!(s("x").max_conjugate_contact(&s("2*x")), Some(q(1, 1)));
        // i*x^(5/4) is the conjugate of x^(5/4) under ζ = i.
        assert_eq!(s("x^(5/4)").max_conjugate_contact(&s("i*x^(5/4)")), None);
    }
}
