use super::{product, Algebra};
use crate::error::{Error, Result};
use crate::exact::{rref, MatrixQ, Rational, Subspace};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// `Ann(A) = {x : Ax = 0}`. Two-sided by anticommutativity.
pub fn annihilator(a: &Algebra) -> Subspace {
    let n = a.dim();
    let mut m = MatrixQ::zeros(n * n, n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = a.c(i, j, k);
                if !c.is_zero() {
                    m.set(i * n + k, j, c.clone());
                }
            }
        }
    }
    Subspace::from_matrix(&rref(&m).kernel)
}

/// Span of all products `uw` with `u ∈ U`, `w ∈ W`.
pub fn subspace_product(a: &Algebra, u: &Subspace, w: &Subspace) -> Result<Subspace> {
    let n = a.dim();
    for s in [u, w] {
        if s.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: s.ambient_dim() });
        }
    }
    let mut vecs = Vec::with_capacity(u.dim() * w.dim());
    for x in u.basis_vectors() {
        for y in w.basis_vectors() {
            vecs.push(product(a, &x, &y)?);
        }
    }
    Subspace::span(n, &vecs)
}

/// `A¹ = A`, `A^{k+1} = A^k·A`. Ends at the first zero term, or at the
/// first repeated term when the algebra is not nilpotent.
pub fn lower_central_series(a: &Algebra) -> Vec<Subspace> {
    let full = Subspace::full(a.dim());
    let mut out = vec![full.clone()];
    loop {
        let cur = out.last().unwrap();
        if cur.is_zero() {
            break;
        }
        let next = subspace_product(a, cur, &full).expect("same ambient dimension");
        if &next == cur {
            break;
        }
        out.push(next);
    }
    out
}

/// `A·A² = 0`.
pub fn is_two_step_nilpotent(a: &Algebra) -> bool {
    lower_central_series(a).iter().map(Subspace::dim).nth(2).map_or(true, |d| d == 0)
}

/// The derivation algebra `Der(A)` as a basis of matrices.
///
/// Matrices act on column vectors: `D e_q = Σ_p D[p][q] e_p`.
#[derive(Clone, Debug, PartialEq)]
pub struct Derivations {
    pub dim: usize,
    pub basis: Vec<MatrixQ>,
}

/// Solves `D(e_i e_j) = D(e_i)e_j + e_i D(e_j)` for all `i < j`.
pub fn derivation_algebra(a: &Algebra) -> Derivations {
    let n = a.dim();
    let var = |p: usize, q: usize| p * n + q;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for l in 0..n {
                    let c = a.c(i, j, l);
                    if !c.is_zero() {
                        row[var(k, l)] += c;
                    }
                }
                for p in 0..n {
                    let c = a.c(p, j, k);
                    if !c.is_zero() {
                        row[var(p, i)] -= c;
                    }
                    let c = a.c(i, p, k);
                    if !c.is_zero() {
                        row[var(p, j)] -= c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = rref(&MatrixQ::from_rows(n * n, &rows)).kernel;
    let basis: Vec<MatrixQ> =
        kernel.row_vectors().into_iter().map(|v| MatrixQ::from_vec(n, n, v)).collect();
    Derivations { dim: basis.len(), basis }
}

/// Isomorphism invariants used to refute degenerations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantFingerprint {
    pub dim: usize,
    pub der_dim: usize,
    pub ann_dim: usize,
    /// `dim A¹, dim A², …`, ending with 0 for nilpotent algebras.
    pub lcs_dims: Vec<usize>,
    /// `product_dims[k][l] = dim(A^{k+1}·A^{l+1})` over the listed LCS terms.
    pub product_dims: Vec<Vec<usize>>,
}

impl InvariantFingerprint {
    /// `dim A^k` for any `k ≥ 1`; terms past the end repeat the last one.
    pub fn lcs_dim(&self, k: usize) -> usize {
        let idx = (k.max(1) - 1).min(self.lcs_dims.len() - 1);
        self.lcs_dims[idx]
    }

    /// `dim(A^k·A^l)` for any `k, l ≥ 1`, clamped like [`Self::lcs_dim`].
    pub fn product_dim(&self, k: usize, l: usize) -> usize {
        let last = self.product_dims.len() - 1;
        self.product_dims[(k.max(1) - 1).min(last)][(l.max(1) - 1).min(last)]
    }
}

pub fn fingerprint(a: &Algebra) -> InvariantFingerprint {
    let lcs = lower_central_series(a);
    let product_dims = lcs
        .iter()
        .map(|u| {
            lcs.iter()
                .map(|w| subspace_product(a, u, w).expect("same ambient dimension").dim())
                .collect()
        })
        .collect();
    InvariantFingerprint {
        dim: a.dim(),
        der_dim: derivation_algebra(a).dim,
        ann_dim: annihilator(a).dim(),
        lcs_dims: lcs.iter().map(Subspace::dim).collect(),
        product_dims,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::tests::d7_14;
    use crate::exact::Scalar;

    #[test]
    fn zero_algebra_invariants() {
        let f = fingerprint(&Algebra::zero(7));
        assert_eq!((f.dim, f.der_dim, f.ann_dim), (7, 49, 7));
        assert_eq!(f.lcs_dims, vec![7, 0]);
        assert!(f.product_dims.iter().flatten().all(|&d| d == 0));
    }

    #[test]
    fn d7_14_invariants() {
        let a = d7_14();
        let f = fingerprint(&a);
        assert_eq!(f.der_dim, 21);
        assert_eq!(f.ann_dim, 1);
        assert_eq!(f.lcs_dims, vec![7, 4, 1, 0]);
        let a2 = &lower_central_series(&a)[1];
        assert!(subspace_product(&a, a2, a2).unwrap().is_zero());
    }

    #[test]
    fn derivations_satisfy_leibniz() {
        let a = d7_14();
        let n = a.dim();
        for d in derivation_algebra(&a).basis {
            for i in 0..n {
                for j in 0..n {
                    let ei = super::super::unit(n, i);
                    let ej = super::super::unit(n, j);
                    let lhs = d.apply(&a.basis_product(i, j)).unwrap();
                    let r1 = product(&a, &d.apply(&ei).unwrap(), &ej).unwrap();
                    let r2 = product(&a, &ei, &d.apply(&ej).unwrap()).unwrap();
                    for k in 0..n {
                        assert_eq!(lhs[k], Scalar::add(&r1[k], &r2[k]));
                    }
                }
            }
        }
    }
}
