use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::repr::bigint_vec;
use super::IntMatrix;

/// Invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SnfResult {
    #[serde(with = "bigint_vec")]
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

/// `left * m * right = diagonal` with both transforms unimodular; the
/// inverses are carried along so callers never need to invert.
#[derive(Debug, Clone)]
pub struct SnfDecomposition {
    pub left: IntMatrix,
    pub left_inv: IntMatrix,
    pub diagonal: IntMatrix,
    pub right: IntMatrix,
    pub right_inv: IntMatrix,
    pub rank: usize,
}

impl SnfDecomposition {
    pub fn factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.diagonal[(i, i)].clone()).collect()
    }

    pub fn result(&self) -> SnfResult {
        SnfResult {
            invariant_factors: self.factors(),
            rank: self.rank,
        }
    }
}

pub fn snf(m: &IntMatrix) -> SnfResult {
    snf_decompose(m).result()
}

/// True iff `m` is square with determinant ±1.
pub fn is_unimodular(m: &IntMatrix) -> bool {
    m.determinant().is_some_and(|d| d.abs().is_one())
}

/// Integer inverse of a unimodular matrix, `None` otherwise.
pub fn unimodular_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    if !m.is_square() {
        return None;
    }
    let d = snf_decompose(m);
    if d.rank != m.rows() || !d.factors().iter().all(One::is_one) {
        return None;
    }
    // P m Q = I, so m^{-1} = Q P.
    Some(d.right.matmul(&d.left).expect("square transforms"))
}

struct Work {
    a: IntMatrix,
    p: IntMatrix,
    p_inv: IntMatrix,
    q: IntMatrix,
    q_inv: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.p.swap_rows(i, j);
        self.p_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.q.swap_cols(i, j);
        self.q_inv.swap_rows(i, j);
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_row_multiple(dst, src, c);
        self.p.add_row_multiple(dst, src, c);
        self.p_inv.add_col_multiple(src, dst, &-c);
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_col_multiple(dst, src, c);
        self.q.add_col_multiple(dst, src, c);
        self.q_inv.add_row_multiple(src, dst, &-c);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.p.negate_row(i);
        self.p_inv.negate_col(i);
    }

    fn pivot_to(&mut self, t: usize, (i, j): (usize, usize)) {
        self.swap_rows(t, i);
        self.swap_cols(t, j);
    }

    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = self.a[(i, j)].abs();
                if !v.is_zero() && best.as_ref().is_none_or(|(_, b)| v < *b) {
                    best = Some(((i, j), v));
                }
            }
        }
        best.map(|(pos, _)| pos)
    }

    fn smallest_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = ((t, t), self.a[(t, t)].abs());
        let mut consider = |pos: (usize, usize), v: BigInt| {
            if !v.is_zero() && (best.1.is_zero() || v < best.1) {
                best = (pos, v);
            }
        };
        for i in t + 1..self.a.rows() {
            consider((i, t), self.a[(i, t)].abs());
        }
        for j in t + 1..self.a.cols() {
            consider((t, j), self.a[(t, j)].abs());
        }
        best.0
    }

    /// Clears row and column `t` outside the pivot. Returns false when a
    /// nonzero remainder was left behind.
    fn clear_cross(&mut self, t: usize) -> bool {
        let mut clean = true;
        let pivot = self.a[(t, t)].clone();
        for i in t + 1..self.a.rows() {
            if self.a[(i, t)].is_zero() {
                continue;
            }
            let q = self.a[(i, t)].div_floor(&pivot);
            self.add_row(i, t, &-q);
            clean &= self.a[(i, t)].is_zero();
        }
        for j in t + 1..self.a.cols() {
            if self.a[(t, j)].is_zero() {
                continue;
            }
            let q = self.a[(t, j)].div_floor(&pivot);
            self.add_col(j, t, &-q);
            clean &= self.a[(t, j)].is_zero();
        }
        clean
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let pivot = &self.a[(t, t)];
        (t + 1..self.a.rows()).find(|&i| (t + 1..self.a.cols()).any(|j| !self.a[(i, j)].is_multiple_of(pivot)))
    }
}

/// Smith normal form by row/column reduction, always pivoting on the
/// entry of least absolute value.
pub fn snf_decompose(m: &IntMatrix) -> SnfDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        p: IntMatrix::identity(rows),
        p_inv: IntMatrix::identity(rows),
        q: IntMatrix::identity(cols),
        q_inv: IntMatrix::identity(cols),
    };
    let mut rank = 0;
    for t in 0..rows.min(cols) {
        let Some(pos) = w.smallest_in_block(t) else {
            break;
        };
        w.pivot_to(t, pos);
        loop {
            while !w.clear_cross(t) {
                let pos = w.smallest_in_cross(t);
                w.pivot_to(t, pos);
            }
            match w.non_divisible_row(t) {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.negate_row(t);
        }
        rank += 1;
    }
    SnfDecomposition {
        left: w.p,
        left_inv: w.p_inv,
        diagonal: w.a,
        right: w.q,
        right_inv: w.q_inv,
        rank,
    }
}
