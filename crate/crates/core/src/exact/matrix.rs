use super::{Rational, Scalar, TRatFunc};
use crate::error::{Error, Result};

/// Dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type MatrixQ = Matrix<Rational>;
pub type MatrixT = Matrix<TRatFunc>;

/// Result of Gauss–Jordan elimination.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<T> {
    /// Reduced row-echelon form, same shape as the input (zero rows at the bottom).
    pub rref: Matrix<T>,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows.
    pub pivots: Vec<usize>,
    /// Rows span the right kernel `{x : m·xᵀ = 0}`, one row per free column.
    pub kernel: Matrix<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    /// Builds from a dense row-major vector. Panics if the length is wrong.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    /// Builds from a list of equal-length rows. `cols` fixes the width for an
    /// empty row list.
    pub fn from_rows(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length");
            data.extend(r.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, data }
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

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// `self · v` for a column vector `v`.
    pub fn apply(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect())
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.mul(s))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, found: rhs.rows * rhs.cols });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    /// Stacks `rhs` below `self`.
    pub fn vstack(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.cols });
        }
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Ok(Matrix { rows: self.rows + rhs.rows, cols: self.cols, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// Inverse by Gauss–Jordan on `[self | I]`; `None` when singular or not square.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, T::one());
        }
        let red = rref(&aug);
        if red.pivots.len() < n || red.pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.rref.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    /// One solution `x` of `self · x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[T]) -> Result<Option<Vec<T>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let n = self.cols;
        let mut aug = Self::zeros(self.rows, n + 1);
        for r in 0..self.rows {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n, b[r].clone());
        }
        let red = rref(&aug);
        if red.pivots.last() == Some(&n) {
            return Ok(None);
        }
        let mut x = vec![T::zero(); n];
        for (r, &p) in red.pivots.iter().enumerate() {
            x[p] = red.rref.get(r, n).clone();
        }
        Ok(Some(x))
    }

    /// Determinant by Gaussian elimination.
    pub fn determinant(&self) -> Option<T> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = T::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Some(T::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = det.neg();
            }
            let pivot = m.get(col, col).clone();
            det = det.mul(&pivot);
            for r in col + 1..n {
                let f = m.get(r, col).div(&pivot);
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.get(r, c).sub(&f.mul(m.get(col, c)));
                    m.set(r, c, v);
                }
            }
        }
        Some(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Gauss–Jordan elimination: unique reduced row-echelon form, rank, pivot
/// columns and a kernel basis.
pub fn rref<T: Scalar>(m: &Matrix<T>) -> Rref<T> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = T::one().div(a.get(r, c));
        for j in c..cols {
            let v = a.get(r, j).mul(&inv);
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let v = a.get(i, j).sub(&f.mul(a.get(r, j)));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let rank = pivots.len();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut kernel = Matrix::zeros(free.len(), cols);
    for (kr, &f) in free.iter().enumerate() {
        kernel.set(kr, f, T::one());
        for (pr, &pc) in pivots.iter().enumerate() {
            let v = a.get(pr, f).neg();
            kernel.set(kr, pc, v);
        }
    }
    Rref { rref: a, rank, pivots, kernel }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qr};

    fn mq(rows: &[&[i64]]) -> MatrixQ {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, &rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn identity_has_full_rank_and_empty_kernel() {
        let r = rref(&MatrixQ::identity(3));
        assert_eq!(r.rank, 3);
        assert_eq!(r.kernel.rows(), 0);
        assert_eq!(r.rref, MatrixQ::identity(3));
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let r = rref(&MatrixQ::zeros(2, 4));
        assert_eq!(r.rank, 0);
        assert_eq!(r.kernel.rows(), 4);
    }

    #[test]
    fn kernel_rows_annihilate() {
        let m = mq(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 2]]);
        let r = rref(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.rank + r.kernel.rows(), 4);
        for k in r.kernel.row_vectors() {
            assert!(m.apply(&k).unwrap().iter().all(|x| Scalar::is_zero(x)));
        }
    }

    #[test]
    fn inverse_and_determinant() {
        let m = mq(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), MatrixQ::identity(2));
        assert_eq!(m.determinant().unwrap(), q(1));
        let s = mq(&[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_none());
        assert_eq!(s.determinant().unwrap(), q(0));
        let d = MatrixQ::diagonal(&[qr(1, 2), q(3)]);
        assert_eq!(d.determinant().unwrap(), qr(3, 2));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = mq(&[&[1, 1], &[1, -1], &[2, 0]]);
        let x = m.solve(&[q(3), q(1), q(4)]).unwrap().unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        assert!(m.solve(&[q(3), q(1), q(5)]).unwrap().is_none());
    }

    #[test]
    fn mismatched_product_is_an_error() {
        let a = MatrixQ::zeros(2, 3);
        assert!(a.mul(&MatrixQ::zeros(2, 3)).is_err());
    }
}
