use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::repr::{rational_from_repr, rational_to_repr, IntRepr};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtRatError {
    #[error("negative value {0} is not on the b-axis")]
    Negative(String),
    #[error("cannot parse {0:?} as a rational or \"inf\"")]
    Syntax(String),
    #[error("arithmetic with infinity is undefined")]
    InfiniteArithmetic,
}

/// A point of the extended half-line `[0, ∞]`.
///
/// Finite values are non-negative rationals kept in lowest terms. Only
/// comparison is defined against infinity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtRat(Repr);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Finite(Rational),
    Infinite,
}

impl ExtRat {
    pub fn finite(value: Rational) -> Result<Self, ExtRatError> {
        if value.is_negative() {
            return Err(ExtRatError::Negative(fmt_rational(&value)));
        }
        Ok(ExtRat(Repr::Finite(value)))
    }

    /// Panics if `num/den` is negative or `den` is zero.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::finite(Rational::new(BigInt::from(num), BigInt::from(den))).expect("non-negative ratio")
    }

    pub fn integer(n: i64) -> Self {
        Self::ratio(n, 1)
    }

    pub fn infinity() -> Self {
        ExtRat(Repr::Infinite)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self.0, Repr::Infinite)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match &self.0 {
            Repr::Finite(r) => Some(r),
            Repr::Infinite => None,
        }
    }

    pub fn to_finite(&self) -> Result<Rational, ExtRatError> {
        self.as_finite().cloned().ok_or(ExtRatError::InfiniteArithmetic)
    }

    pub fn is_zero(&self) -> bool {
        self.as_finite().is_some_and(Zero::is_zero)
    }
}

impl From<Rational> for ExtRat {
    /// Panics on negative input; use [`ExtRat::finite`] for fallible conversion.
    fn from(r: Rational) -> Self {
        ExtRat::finite(r).expect("non-negative rational")
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl PartialEq<Rational> for ExtRat {
    fn eq(&self, other: &Rational) -> bool {
        self.as_finite() == Some(other)
    }
}

impl PartialOrd<Rational> for ExtRat {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(match self.as_finite() {
            Some(r) => r.cmp(other),
            None => Ordering::Greater,
        })
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Finite(r) => f.write_str(&fmt_rational(r)),
            Repr::Infinite => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExtRat {
    type Err = ExtRatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "inf" || t == "∞" {
            return Ok(ExtRat::infinity());
        }
        let r = parse_rational(t).ok_or_else(|| ExtRatError::Syntax(s.to_string()))?;
        ExtRat::finite(r)
    }
}

impl Serialize for ExtRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match &self.0 {
            Repr::Finite(r) => rational_to_repr(r).serialize(s),
            Repr::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Pair([IntRepr; 2]),
            Text(String),
        }
        match Wire::deserialize(d)? {
            Wire::Pair(pair) => {
                let r = rational_from_repr::<D::Error>(pair)?;
                ExtRat::finite(r).map_err(D::Error::custom)
            }
            Wire::Text(t) if t == "inf" => Ok(ExtRat::infinity()),
            Wire::Text(t) => Err(D::Error::custom(format!("expected [num, den] or \"inf\", got {t:?}"))),
        }
    }
}

/// Formats as `p/q`, or `p` when the denominator is 1.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p`, or `p/q` (optional surrounding whitespace).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_puts_infinity_last() {
        let mut v = [
            ExtRat::infinity(),
            ExtRat::ratio(37, 12),
            ExtRat::ratio(3, 2),
            ExtRat::integer(1),
        ];
        v.sort();
        assert_eq!(
            v.iter().map(ToString::to_string).collect::<Vec<_>>(),
            ["1", "3/2", "37/12", "inf"]
        );
    }

    #[test]
    fn lowest_terms() {
        assert_eq!(ExtRat::ratio(6, 4), ExtRat::ratio(3, 2));
        assert_eq!(ExtRat::ratio(6, 4).to_string(), "3/2");
        assert_eq!(ExtRat::ratio(-3, -2), ExtRat::ratio(3, 2));
    }

    #[test]
    fn negative_rejected() {
        let r = Rational::new((-1).into(), 2.into());
        assert!(ExtRat::finite(r).is_err());
        assert!("-1/2".parse::<ExtRat>().is_err());
    }

    #[test]
    fn json_shapes() {
        let v = serde_json::to_string(&ExtRat::ratio(3, 2)).unwrap();
        assert_eq!(v, "[3,2]");
        assert_eq!(serde_json::to_string(&ExtRat::infinity()).unwrap(), "\"inf\"");
        let back: ExtRat = serde_json::from_str("[6,4]").unwrap();
        assert_eq!(back, ExtRat::ratio(3, 2));
        let inf: ExtRat = serde_json::from_str("\"inf\"").unwrap();
        assert!(inf.is_infinite());
        assert!(serde_json::from_str::<ExtRat>("[1,0]").is_err());
        assert!(serde_json::from_str::<ExtRat>("\"infinity\"").is_err());
    }

    #[test]
    fn infinity_has_no_value() {
        assert_eq!(ExtRat::infinity().to_finite(), Err(ExtRatError::InfiniteArithmetic));
    }

    #[test]
    fn parse_text() {
        assert_eq!("37/12".parse::<ExtRat>().unwrap(), ExtRat::ratio(37, 12));
        assert_eq!(" inf ".parse::<ExtRat>().unwrap(), ExtRat::infinity());
        assert!("3/0".parse::<ExtRat>().is_err());
        assert!("x".parse::<ExtRat>().is_err());
    }
}
