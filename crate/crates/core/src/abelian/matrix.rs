use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense matrix of arbitrary-precision integers, row-major.
///
/// All homological data in this crate (boundary maps, relation matrices,
/// action matrices) is carried by this type. Fixed-width arithmetic is
/// deliberately not used anywhere in this module: normal-form computations
/// can swell intermediate entries far past machine word size.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Diagonal matrix from the given entries.
    pub fn diagonal(entries: &[BigInt]) -> Self {
        let n = entries.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    /// Build from machine-integer rows; mostly a test and example convenience.
    pub fn from_rows_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = IntMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn from_columns(rows: usize, cols: &[Vec<BigInt>]) -> Self {
        let mut m = IntMatrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column of wrong height");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "hstack: row mismatch");
        let mut m = IntMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "vstack: col mismatch");
        let mut m = IntMatrix::zeros(self.rows + other.rows, self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                m.set(i, j, self.get(i, j).clone());
            }
            for i in 0..other.rows {
                m.set(self.rows + i, j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Copy of the columns `lo..hi`.
    pub fn column_range(&self, lo: usize, hi: usize) -> IntMatrix {
        assert!(lo <= hi && hi <= self.cols);
        IntMatrix::from_fn(self.rows, hi - lo, |i, j| self.get(i, lo + j).clone())
    }

    /// Copy of the rows `lo..hi`.
    pub fn row_range(&self, lo: usize, hi: usize) -> IntMatrix {
        assert!(lo <= hi && hi <= self.rows);
        IntMatrix::from_fn(hi - lo, self.cols, |i, j| self.get(lo + i, j).clone())
    }

    /// Block-diagonal sum of `n` copies of `self`.
    pub fn block_diag_power(&self, n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows * n, self.cols * n);
        for k in 0..n {
            for i in 0..self.rows {
                for j in 0..self.cols {
                    let v = self.get(i, j);
                    if !v.is_zero() {
                        m.set(k * self.rows + i, k * self.cols + j, v.clone());
                    }
                }
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "mul: inner dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// `self * v` for a column vector.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "mul_vec: dimension mismatch");
        let mut out = vec![BigInt::zero(); self.rows];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if !a.is_zero() && !v[k].is_zero() {
                    out[i] += a * &v[k];
                }
            }
        }
        out
    }

    pub fn scalar_mul(&self, s: &BigInt) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * s)
    }

    pub fn map(&self, f: impl Fn(&BigInt) -> BigInt) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| f(self.get(i, j)))
    }

    // Elementary operations used by the normal-form algorithms. Each is
    // unimodular, so applying the same sequence to an identity matrix
    // accumulates the change-of-basis witness.

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            if !self.data[idx].is_zero() {
                let v = core::mem::take(&mut self.data[idx]);
                self.data[idx] = -v;
            }
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let idx = i * self.cols + c;
            if !self.data[idx].is_zero() {
                let v = core::mem::take(&mut self.data[idx]);
                self.data[idx] = -v;
            }
        }
    }

    /// row[dst] += k * row[src]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = self.data[src * self.cols + j].clone();
            if !s.is_zero() {
                self.data[dst * self.cols + j] += k * s;
            }
        }
    }

    /// col[dst] += k * col[src]
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = self.data[i * self.cols + src].clone();
            if !s.is_zero() {
                self.data[i * self.cols + dst] += k * s;
            }
        }
    }

    /// Maximum absolute value of the entries, zero for an empty matrix.
    pub fn max_abs(&self) -> BigInt {
        let mut best = BigInt::zero();
        for v in &self.data {
            let a = v.abs();
            if a > best {
                best = a;
            }
        }
        best
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        self.map(|v| -v)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        IntMatrix::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_identity() {
        let a = IntMatrix::from_rows_i64(&[&[1, 2], &[3, 4], &[5, 6]]);
        let id = IntMatrix::identity(2);
        assert_eq!(a.mul(&id), a);
        assert_eq!(IntMatrix::identity(3).mul(&a), a);
    }

    #[test]
    fn stack_and_slice() {
        let a = IntMatrix::from_rows_i64(&[&[1], &[2]]);
        let b = IntMatrix::from_rows_i64(&[&[3], &[4]]);
        let h = a.hstack(&b);
        assert_eq!(h.get(0, 1), &BigInt::from(3));
        assert_eq!(h.column_range(1, 2), b);
        let v = a.vstack(&b);
        assert_eq!(v.rows(), 4);
        assert_eq!(v.get(3, 0), &BigInt::from(4));
    }

    #[test]
    fn elementary_ops() {
        let mut a = IntMatrix::from_rows_i64(&[&[1, 0], &[0, 1]]);
        a.add_row_multiple(1, 0, &BigInt::from(5));
        assert_eq!(a, IntMatrix::from_rows_i64(&[&[1, 0], &[5, 1]]));
        a.swap_cols(0, 1);
        assert_eq!(a, IntMatrix::from_rows_i64(&[&[0, 1], &[1, 5]]));
        a.negate_row(1);
        assert_eq!(a, IntMatrix::from_rows_i64(&[&[0, 1], &[-1, -5]]));
    }
}
