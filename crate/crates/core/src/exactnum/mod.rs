//! Exact arithmetic: rationals for the b-axis, Gaussian rationals for
//! series coefficients, and dense integer matrices with Smith normal form.
//!
//! Nothing in this crate uses floating point.

mod gauss;
mod matrix;
mod rational;
pub(crate) mod repr;
mod snf;

pub use gauss::GaussRat;
pub use matrix::{IntMatrix, MatrixError};
pub use rational::{fmt_rational, parse_rational, ExtRat, ExtRatError, Rational};
pub use snf::{is_unimodular, snf, snf_decompose, unimodular_inverse, SnfDecomposition, SnfResult};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

/// Least common multiple of the denominators of `values` (1 when empty).
pub fn lcm_denominators<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a Rational>,
{
    values.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}
