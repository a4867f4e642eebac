use crate::error::{Error, Result};
use crate::exact::{fmt_rational, MatrixQ, Rational};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Number of pairs `i < j` among `n` indices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `(i, j)`, `i < j`, in lexicographic order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// All pairs `i < j` in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// A skew bilinear form `Σ_{i<j} c_ij Δ_ij`, stored by its coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewForm {
    dim: usize,
    coords: Vec<Rational>,
}

impl SkewForm {
    pub fn zero(dim: usize) -> Self {
        SkewForm { dim, coords: vec![Rational::zero(); pair_count(dim)] }
    }

    pub fn from_coords(dim: usize, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != pair_count(dim) {
            return Err(Error::DimensionMismatch { expected: pair_count(dim), found: coords.len() });
        }
        Ok(SkewForm { dim, coords })
    }

    /// `Δ_ij` (0-based). `Δ_ji = -Δ_ij`.
    pub fn delta(dim: usize, i: usize, j: usize) -> Result<Self> {
        if i == j {
            return Err(Error::DiagonalDelta(i + 1));
        }
        for idx in [i, j] {
            if idx >= dim {
                return Err(Error::IndexOutOfRange { index: idx + 1, dim });
            }
        }
        let mut f = Self::zero(dim);
        f.add_delta(i, j, &Rational::one());
        Ok(f)
    }

    /// Sum of integer multiples of `Δ_ij` (0-based). Panics on bad indices.
    pub fn from_terms(dim: usize, terms: &[(usize, usize, i64)]) -> Self {
        let mut f = Self::zero(dim);
        for &(i, j, c) in terms {
            assert!(i != j && i < dim && j < dim, "bad Δ index");
            f.add_delta(i, j, &Rational::from_integer(c.into()));
        }
        f
    }

    /// Adds `c·Δ_ij`.
    pub fn add_delta(&mut self, i: usize, j: usize, c: &Rational) {
        if i < j {
            self.coords[pair_index(self.dim, i, j)] += c;
        } else {
            self.coords[pair_index(self.dim, j, i)] -= c;
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> Vec<Rational> {
        self.coords.clone()
    }

    /// `θ(e_i, e_j)`.
    pub fn value(&self, i: usize, j: usize) -> Rational {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Rational::zero(),
            std::cmp::Ordering::Less => self.coords[pair_index(self.dim, i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.coords[pair_index(self.dim, j, i)],
        }
    }

    /// `θ(x, y)` for coordinate vectors.
    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (idx, (i, j)) in pairs(self.dim).enumerate() {
            let c = &self.coords[idx];
            if !c.is_zero() {
                s += c * (&x[i] * &y[j] - &x[j] * &y[i]);
            }
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "form dimensions");
        SkewForm { dim: self.dim, coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SkewForm { dim: self.dim, coords: self.coords.iter().map(|x| x * c).collect() }
    }

    /// Gram matrix `B` with `B[j][k] = θ(e_j, e_k)`.
    pub fn gram(&self) -> MatrixQ {
        let n = self.dim;
        let mut m = MatrixQ::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.value(i, j));
            }
        }
        m
    }

    /// Inverse of [`Self::gram`]; fails unless `m` is square and skew.
    pub fn from_gram(m: &MatrixQ) -> Result<Self> {
        let n = m.rows();
        if m.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: m.cols() });
        }
        for i in 0..n {
            for j in i..n {
                if m.get(i, j) != &-m.get(j, i) {
                    return Err(Error::SkewConflict { i: i + 1, j: j + 1 });
                }
            }
        }
        let coords = pairs(n).map(|(i, j)| m.get(i, j).clone()).collect();
        Self::from_coords(n, coords)
    }

    /// Nonzero terms as `(i, j, c)` with `i < j`, 0-based.
    pub fn terms(&self) -> Vec<(usize, usize, Rational)> {
        pairs(self.dim)
            .zip(&self.coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|((i, j), c)| (i, j, c.clone()))
            .collect()
    }
}

fn index_label(i: usize, j: usize) -> String {
    if i < 9 && j < 9 {
        format!("{}{}", i + 1, j + 1)
    } else {
        format!("{},{}", i + 1, j + 1)
    }
}

/// Writes `[d16] - [d25] + 2*[d34]`, or `0`.
impl fmt::Display for SkewForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (i, j, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{}*", fmt_rational(&mag))?;
            }
            write!(f, "[d{}]", index_label(*i, *j))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn pair_indexing_is_lexicographic() {
        let n = 5;
        for (idx, (i, j)) in pairs(n).enumerate() {
            assert_eq!(pair_index(n, i, j), idx);
        }
        assert_eq!(pairs(n).count(), pair_count(n));
    }

    #[test]
    fn skew_evaluation() {
        let f = SkewForm::delta(3, 2, 0).unwrap();
        assert_eq!(f.value(0, 2), q(-1));
        assert_eq!(f.value(2, 0), q(1));
        assert_eq!(f.value(1, 1), q(0));
        assert_eq!(SkewForm::from_gram(&f.gram()).unwrap(), f);
        assert!(matches!(SkewForm::delta(3, 1, 1), Err(Error::DiagonalDelta(2))));
    }

    #[test]
    fn display() {
        let f = SkewForm::from_terms(7, &[(0, 5, 1), (1, 4, -1), (2, 3, 2)]);
        assert_eq!(f.to_string(), "[d16] - [d25] + 2*[d34]");
        assert_eq!(SkewForm::zero(3).to_string(), "0");
    }
}
