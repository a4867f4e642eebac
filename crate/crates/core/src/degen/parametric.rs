use crate::algcore::Algebra;
use crate::error::{Error, Result};
use crate::exact::{MatrixQ, MatrixT, Rational, Scalar, TPoly, TRatFunc};

/// `E_i(t) = Σ_j rows[i][j] e_j`, entries in `ℚ(t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParametricBasis {
    rows: MatrixT,
    inverse: MatrixT,
}

impl ParametricBasis {
    /// Fails with [`Error::SingularBasis`] when the determinant is identically zero.
    pub fn new(rows: MatrixT) -> Result<Self> {
        if !rows.is_square() {
            return Err(Error::DimensionMismatch { expected: rows.rows(), found: rows.cols() });
        }
        let inverse = rows.inverse().ok_or(Error::SingularBasis)?;
        Ok(ParametricBasis { rows, inverse })
    }

    pub fn from_poly_rows(rows: Vec<Vec<TPoly>>) -> Result<Self> {
        let n = rows.len();
        let data: Vec<Vec<TRatFunc>> =
            rows.into_iter().map(|r| r.into_iter().map(TRatFunc::from_poly).collect()).collect();
        if let Some(bad) = data.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        Self::new(MatrixT::from_rows(n, &data))
    }

    pub fn identity(n: usize) -> Self {
        let m = MatrixT::identity(n);
        ParametricBasis { rows: m.clone(), inverse: m }
    }

    /// The identity except for the listed rows.
    pub fn with_rows(n: usize, rows: &[(usize, Vec<TPoly>)]) -> Result<Self> {
        let mut full: Vec<Vec<TPoly>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { TPoly::one() } else { TPoly::zero() }).collect())
            .collect();
        for (i, r) in rows {
            if *i >= n {
                return Err(Error::IndexOutOfRange { index: i + 1, dim: n });
            }
            full[*i] = r.clone();
        }
        Self::from_poly_rows(full)
    }

    pub fn dim(&self) -> usize {
        self.rows.rows()
    }

    pub fn rows(&self) -> &MatrixT {
        &self.rows
    }

    /// The numeric basis at `t = t0`, if every entry is defined and the
    /// matrix is invertible there.
    pub fn eval(&self, t0: &Rational) -> Option<MatrixQ> {
        let n = self.dim();
        let data = self.rows.entries().iter().map(|x| x.eval(t0)).collect::<Option<Vec<_>>>()?;
        let m = MatrixQ::from_vec(n, n, data);
        m.inverse().map(|_| m)
    }
}

/// `c^k_{ij}(t)` in the basis `E_1(t), …, E_n(t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParametricConstants {
    dim: usize,
    sc: Vec<TRatFunc>,
}

impl ParametricConstants {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &TRatFunc {
        &self.sc[(i * self.dim + j) * self.dim + k]
    }

    /// Specialization at `t = t0`; `None` where a denominator vanishes.
    pub fn eval(&self, t0: &Rational) -> Option<Algebra> {
        let sc = self.sc.iter().map(|x| x.eval(t0)).collect::<Option<Vec<_>>>()?;
        Some(Algebra::from_tensor(self.dim, sc).expect("constants stay skew"))
    }

    /// Entrywise limit `t → 0`.
    pub fn limit(&self) -> Result<Algebra> {
        let n = self.dim;
        let mut sc = Vec::with_capacity(self.sc.len());
        for (idx, x) in self.sc.iter().enumerate() {
            let lim = x.limit_at_zero().map_err(|e| match e {
                Error::PoleAtZero { order } => {
                    Error::PoleInLimit { i: idx / (n * n) + 1, j: (idx / n) % n + 1, k: idx % n + 1, order }
                }
                other => other,
            })?;
            sc.push(lim);
        }
        Algebra::from_tensor(n, sc)
    }
}

/// Multiplies `E_i E_j` in `a` and re-expresses the result in the `E` basis.
pub fn parametric_constants(a: &Algebra, b: &ParametricBasis) -> Result<ParametricConstants> {
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: b.dim() });
    }
    let m = &b.rows;
    let products = a.nonzero_products();
    let mut sc = vec![TRatFunc::zero(); n * n * n];
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![TRatFunc::zero(); n];
            for (p, q, prod) in &products {
                // Both orders of the basis pair contribute.
                let coef = m.get(i, *p).mul(m.get(j, *q)).sub(&m.get(i, *q).mul(m.get(j, *p)));
                if coef.is_zero() {
                    continue;
                }
                for (k, c) in prod.iter().enumerate() {
                    if !num_traits::Zero::is_zero(c) {
                        v[k] = v[k].add(&coef.mul(&TRatFunc::constant(c.clone())));
                    }
                }
            }
            for l in 0..n {
                let mut x = TRatFunc::zero();
                for (k, vk) in v.iter().enumerate() {
                    let inv = b.inverse.get(k, l);
                    if !vk.is_zero() && !inv.is_zero() {
                        x = x.add(&vk.mul(inv));
                    }
                }
                sc[(j * n + i) * n + l] = x.neg();
                sc[(i * n + j) * n + l] = x;
            }
        }
    }
    Ok(ParametricConstants { dim: n, sc })
}

/// The algebra with constants `lim_{t→0} c^k_{ij}(t)`.
pub fn limit_algebra(a: &Algebra, b: &ParametricBasis) -> Result<Algebra> {
    parametric_constants(a, b)?.limit()
}
