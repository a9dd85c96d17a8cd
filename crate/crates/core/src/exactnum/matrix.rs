use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::repr::{nested_to_bigints, IntRepr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {left_rows}x{left_cols} times {right_rows}x{right_cols}")]
    Product {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("expected a {rows}x{cols} matrix, got {got}")]
    Shape { rows: usize, cols: usize, got: String },
    #[error("row {row} has {len} entries, expected {cols}")]
    Ragged { row: usize, len: usize, cols: usize },
}

/// Dense integer matrix, row-major, arbitrary precision entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Builds a matrix with an explicit shape, so that `0 x n` and `n x 0`
    /// survive a round trip through nested rows.
    pub fn from_rows_shaped(rows: usize, cols: usize, entries: Vec<Vec<BigInt>>) -> Result<Self, MatrixError> {
        if entries.len() != rows {
            return Err(MatrixError::Shape {
                rows,
                cols,
                got: format!("{} rows", entries.len()),
            });
        }
        let mut data = Vec::with_capacity(rows * cols);
        for (row, r) in entries.into_iter().enumerate() {
            if r.len() != cols {
                return Err(MatrixError::Ragged {
                    row,
                    len: r.len(),
                    cols,
                });
            }
            data.extend(r);
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Builds from nested rows; an empty outer list is the `0 x 0` matrix.
    pub fn from_rows(entries: Vec<Vec<BigInt>>) -> Result<Self, MatrixError> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        Self::from_rows_shaped(rows, cols, entries)
    }

    /// Panics on ragged input. Intended for literals.
    pub fn from_i64(entries: &[&[i64]]) -> Self {
        let rows = entries
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        Self::from_rows(rows).expect("rectangular literal")
    }

    pub fn diagonal(values: &[i64]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                BigInt::from(values[i])
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = &self[(i, j)];
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn matmul(&self, rhs: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::Product {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, MatrixError> {
        if v.len() != self.cols {
            return Err(MatrixError::Product {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: v.len(),
                right_cols: 1,
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// `out[i][j] = self[row_perm[i]][col_perm[j]]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> IntMatrix {
        assert_eq!(row_perm.len(), self.rows);
        assert_eq!(col_perm.len(), self.cols);
        Self::from_fn(self.rows, self.cols, |i, j| self[(row_perm[i], col_perm[j])].clone())
    }

    /// Determinant by fraction-free (Bareiss) elimination. `None` if not square.
    pub fn determinant(&self) -> Option<BigInt> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Some(BigInt::zero());
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        Some(sign * &a[(n - 1, n - 1)])
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j];
            if !v.is_zero() {
                let add = v * factor;
                self.data[dst * self.cols + j] += add;
            }
        }
    }

    /// col[dst] += factor * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src];
            if !v.is_zero() {
                let add = v * factor;
                self.data[i * self.cols + dst] += add;
            }
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = -v;
        }
    }

    pub(crate) fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = -v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 {
            return write!(f, "[] ({}x{})", self.rows, self.cols);
        }
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[{}]", padded.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{:?}", self.to_rows())
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<IntRepr>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(IntRepr::from_bigint).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<IntRepr>>::deserialize(d)?;
        let rows = nested_to_bigints::<D::Error>(rows)?;
        IntMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let m = IntMatrix::from_i64(&[&[2, 1, 0], &[0, 3, 1]]);
        assert_eq!(IntMatrix::identity(2).matmul(&m).unwrap(), m);
        assert_eq!(m.matmul(&IntMatrix::identity(3)).unwrap(), m);
    }

    #[test]
    fn reducible_example_composites() {
        let block = IntMatrix::from_i64(&[&[1, 1, 0, 0, 0], &[0, 0, 1, 1, 1]]);
        let c = block.matmul(&IntMatrix::diagonal(&[2, 1, 1, 1, 1])).unwrap();
        assert_eq!(c, IntMatrix::from_i64(&[&[2, 1, 0, 0, 0], &[0, 0, 1, 1, 1]]));
        let d = block.matmul(&IntMatrix::diagonal(&[1, 1, 1, 1, 2])).unwrap();
        assert_eq!(d, IntMatrix::from_i64(&[&[1, 1, 0, 0, 0], &[0, 0, 1, 1, 2]]));
    }

    #[test]
    fn mismatch_is_error() {
        let a = IntMatrix::zeros(2, 3);
        assert!(matches!(a.matmul(&a), Err(MatrixError::Product { .. })));
    }

    #[test]
    fn empty_shapes_multiply() {
        let a = IntMatrix::zeros(0, 3);
        let b = IntMatrix::from_i64(&[&[1], &[2], &[3]]);
        let p = a.matmul(&b).unwrap();
        assert_eq!((p.rows(), p.cols()), (0, 1));
        let q = IntMatrix::zeros(2, 0).matmul(&IntMatrix::zeros(0, 4)).unwrap();
        assert_eq!(q, IntMatrix::zeros(2, 4));
    }

    #[test]
    fn determinant_small() {
        assert_eq!(IntMatrix::from_i64(&[&[1, 1], &[0, 1]]).determinant(), Some(1.into()));
        assert_eq!(
            IntMatrix::from_i64(&[&[0, 1], &[1, 0]]).determinant(),
            Some((-1).into())
        );
        assert_eq!(
            IntMatrix::from_i64(&[&[2, 3, 1], &[4, 1, 0], &[5, 2, 7]]).determinant(),
            Some((-67).into())
        );
        assert_eq!(IntMatrix::zeros(0, 0).determinant(), Some(1.into()));
        assert_eq!(IntMatrix::zeros(1, 2).determinant(), None);
    }

    #[test]
    fn json_nested_rows() {
        let m = IntMatrix::from_i64(&[&[2, -1], &[0, 3]]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, "[[2,-1],[0,3]]");
        assert_eq!(serde_json::from_str::<IntMatrix>(&s).unwrap(), m);
        let big: IntMatrix = serde_json::from_str(r#"[["123456789012345678901234567890"]]"#).unwrap();
        assert_eq!(big[(0, 0)].to_string(), "123456789012345678901234567890");
        assert!(serde_json::from_str::<IntMatrix>("[[1,2],[3]]").is_err());
    }
}
