//! JSON representations shared by the exact types.
//!
//! Integers are written as JSON numbers when they fit in an `i64` and as
//! decimal strings otherwise; rationals are `[num, den]`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    pub(crate) fn from_bigint(v: &BigInt) -> Self {
        match v.to_i64() {
            Some(small) => IntRepr::Small(small),
            None => IntRepr::Big(v.to_string()),
        }
    }

    pub(crate) fn into_bigint<E: serde::de::Error>(self) -> Result<BigInt, E> {
        match self {
            IntRepr::Small(v) => Ok(BigInt::from(v)),
            IntRepr::Big(s) => s
                .parse::<BigInt>()
                .map_err(|_| E::custom(format!("invalid integer literal {s:?}"))),
        }
    }
}

pub(crate) fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    IntRepr::from_bigint(v).serialize(s)
}

pub(crate) fn de_bigint<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    IntRepr::deserialize(d)?.into_bigint()
}

pub(crate) fn rational_to_repr(r: &Rational) -> [IntRepr; 2] {
    [IntRepr::from_bigint(r.numer()), IntRepr::from_bigint(r.denom())]
}

pub(crate) fn rational_from_repr<E: serde::de::Error>(pair: [IntRepr; 2]) -> Result<Rational, E> {
    let [n, d] = pair;
    let n = n.into_bigint::<E>()?;
    let d = d.into_bigint::<E>()?;
    if d.is_zero() {
        return Err(E::custom("rational with zero denominator"));
    }
    Ok(Rational::new(n, d))
}

pub(crate) fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    rational_to_repr(r).serialize(s)
}

pub(crate) fn de_rational<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let pair = <[IntRepr; 2]>::deserialize(d)?;
    rational_from_repr(pair)
}

pub(crate) mod rational_vec {
    use super::*;

    pub(crate) fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let reprs: Vec<[IntRepr; 2]> = v.iter().map(rational_to_repr).collect();
        reprs.serialize(s)
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let reprs = Vec::<[IntRepr; 2]>::deserialize(d)?;
        reprs.into_iter().map(rational_from_repr).collect()
    }
}

pub(crate) mod bigint_vec {
    use super::*;

    pub(crate) fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let reprs: Vec<IntRepr> = v.iter().map(IntRepr::from_bigint).collect();
        reprs.serialize(s)
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let reprs = Vec::<IntRepr>::deserialize(d)?;
        reprs.into_iter().map(IntRepr::into_bigint).collect()
    }
}

pub(crate) fn nested_to_bigints<E: serde::de::Error>(rows: Vec<Vec<IntRepr>>) -> Result<Vec<Vec<BigInt>>, E> {
    rows.into_iter()
        .map(|row| row.into_iter().map(IntRepr::into_bigint).collect())
        .collect()
}

pub(crate) fn positive_bigint<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    let v = de_bigint(d)?;
    if v <= BigInt::zero() {
        return Err(D::Error::custom("expected a positive integer"));
    }
    Ok(v)
}
