//! Anticommutative algebras given by structure constants.
//!
//! Indices are 0-based throughout the Rust API; only the text formats in
//! [`crate::shell`] use the 1-based `e1, e2, …` notation.

mod identities;
mod invariants;
mod transform;

pub use identities::{check_identities, Identity, IdentityReport, Witness};
pub use invariants::{
    annihilator, derivation_algebra, fingerprint, is_two_step_nilpotent, lower_central_series,
    subspace_product, Derivations, InvariantFingerprint,
};
pub use transform::{apply_basis_change, direct_sum_with_trivial, verify_isomorphism};

use crate::error::{Error, Result};
use crate::exact::Rational;
use num_traits::{One, Zero};
use std::fmt;

/// An `n`-dimensional algebra with skew-symmetric structure constants
/// `e_i e_j = Σ_k c^k_{ij} e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    dim: usize,
    /// `c^k_{ij}` at `(i * dim + j) * dim + k`.
    sc: Vec<Rational>,
}

impl Algebra {
    /// The algebra with zero multiplication.
    pub fn zero(dim: usize) -> Self {
        Algebra { dim, sc: vec![Rational::zero(); dim * dim * dim] }
    }

    /// Builds from a full tensor laid out as `(i * n + j) * n + k`.
    /// Fails with [`Error::SkewConflict`] unless `c^k_{ij} = -c^k_{ji}`.
    pub fn from_tensor(dim: usize, sc: Vec<Rational>) -> Result<Self> {
        if sc.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim * dim, found: sc.len() });
        }
        let a = Algebra { dim, sc };
        for i in 0..dim {
            for j in i..dim {
                for k in 0..dim {
                    if a.c(i, j, k) != &-a.c(j, i, k) {
                        return Err(Error::SkewConflict { i: i + 1, j: j + 1 });
                    }
                }
            }
        }
        Ok(a)
    }

    /// Builds from a product table. Each entry `(i, j, v)` sets `e_i e_j = v`
    /// (0-based indices, `v` in coordinates) and implies `e_j e_i = -v`.
    ///
    /// Listing both orders is accepted only when the two values agree with
    /// skew-symmetry. Diagonal products are rejected.
    pub fn from_products(dim: usize, products: &[(usize, usize, Vec<Rational>)]) -> Result<Self> {
        let mut a = Algebra::zero(dim);
        let mut seen = vec![false; dim * dim];
        for (i, j, v) in products {
            let (i, j) = (*i, *j);
            for idx in [i, j] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx + 1, dim });
                }
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
            }
            if i == j {
                if v.iter().any(|x| !x.is_zero()) {
                    return Err(Error::SkewConflict { i: i + 1, j: j + 1 });
                }
                continue;
            }
            if seen[i * dim + j] || seen[j * dim + i] {
                let consistent = (0..dim).all(|k| a.c(i, j, k) == &v[k]);
                if !consistent {
                    return Err(Error::SkewConflict { i: i + 1, j: j + 1 });
                }
                continue;
            }
            seen[i * dim + j] = true;
            for (k, x) in v.iter().enumerate() {
                a.set(i, j, k, x.clone());
            }
        }
        Ok(a)
    }

    /// Convenience constructor from 1-based integer tables:
    /// `&[(1, 2, &[(4, 1)])]` means `e1e2 = e4`.
    pub fn from_int_table(dim: usize, table: &[(usize, usize, &[(usize, i64)])]) -> Result<Self> {
        let mut products = Vec::with_capacity(table.len());
        for &(i, j, terms) in table {
            let mut v = vec![Rational::zero(); dim];
            for &(k, c) in terms {
                if k == 0 || k > dim {
                    return Err(Error::IndexOutOfRange { index: k, dim });
                }
                v[k - 1] += Rational::from_integer(c.into());
            }
            if i == 0 || j == 0 {
                return Err(Error::IndexOutOfRange { index: 0, dim });
            }
            products.push((i - 1, j - 1, v));
        }
        Self::from_products(dim, &products)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c^k_{ij}`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.sc[(i * self.dim + j) * self.dim + k]
    }

    /// Sets `c^k_{ij} = x` and `c^k_{ji} = -x`.
    fn set(&mut self, i: usize, j: usize, k: usize, x: Rational) {
        let n = self.dim;
        self.sc[(j * n + i) * n + k] = -&x;
        self.sc[(i * n + j) * n + k] = x;
    }

    pub fn structure_constants(&self) -> &[Rational] {
        &self.sc
    }

    /// `e_i e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Rational> {
        let start = (i * self.dim + j) * self.dim;
        self.sc[start..start + self.dim].to_vec()
    }

    pub fn is_zero_algebra(&self) -> bool {
        self.sc.iter().all(|x| x.is_zero())
    }

    /// Nonzero products `e_i e_j` with `i < j`, in lexicographic order.
    pub fn nonzero_products(&self) -> Vec<(usize, usize, Vec<Rational>)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.basis_product(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    out.push((i, j, v));
                }
            }
        }
        out
    }
}

/// Bilinear product of two coordinate vectors.
pub fn product(a: &Algebra, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.dim;
    for v in [x, y] {
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: v.len() });
        }
    }
    let mut out = vec![Rational::zero(); n];
    for i in (0..n).filter(|&i| !x[i].is_zero()) {
        for j in (0..n).filter(|&j| !y[j].is_zero()) {
            let xy = &x[i] * &y[j];
            for (k, o) in out.iter_mut().enumerate() {
                let c = a.c(i, j, k);
                if !c.is_zero() {
                    *o += c * &xy;
                }
            }
        }
    }
    Ok(out)
}

/// Prints the table as `e1e2 = e4` lines, one per nonzero product.
impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {}", self.dim)?;
        for (i, j, v) in self.nonzero_products() {
            writeln!(f, "e{} e{} = {}", i + 1, j + 1, crate::exact::fmt_vector(&v))?;
        }
        Ok(())
    }
}

/// Unit vector `e_i` (0-based) of length `n`.
pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

pub(crate) fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub(crate) fn neg_vec(v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| -x).collect()
}

pub(crate) fn add_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    pub(crate) fn d7_14() -> Algebra {
        Algebra::from_int_table(
            7,
            &[
                (1, 2, &[(4, 1)]),
                (1, 3, &[(5, 1)]),
                (1, 6, &[(7, 1)]),
                (2, 3, &[(6, 1)]),
                (2, 5, &[(7, -1)]),
                (3, 4, &[(7, 1)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn product_from_table() {
        let a = d7_14();
        assert_eq!(product(&a, &unit(7, 1), &unit(7, 4)).unwrap(), neg_vec(&unit(7, 6)));
        assert_eq!(a.c(4, 1, 6), &q(1));
        let x: Vec<Rational> = (1..=7).map(q).collect();
        assert!(is_zero_vec(&product(&a, &x, &x).unwrap()));
    }

    #[test]
    fn skew_conflicts() {
        let bad = Algebra::from_int_table(3, &[(1, 2, &[(3, 1)]), (2, 1, &[(3, 1)])]);
        assert!(matches!(bad, Err(Error::SkewConflict { i: 2, j: 1 })));
        let ok = Algebra::from_int_table(3, &[(1, 2, &[(3, 1)]), (2, 1, &[(3, -1)])]).unwrap();
        assert_eq!(ok.c(1, 0, 2), &q(-1));
        assert!(matches!(Algebra::from_int_table(2, &[(1, 1, &[(2, 1)])]), Err(Error::SkewConflict { .. })));
        assert!(matches!(Algebra::from_int_table(2, &[(1, 2, &[(3, 1)])]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn length_mismatch() {
        let a = Algebra::zero(3);
        assert!(product(&a, &unit(2, 0), &unit(3, 0)).is_err());
    }
}
