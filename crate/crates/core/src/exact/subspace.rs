use super::{rref, MatrixQ, Rational, Scalar};
use crate::error::{Error, Result};

/// A subspace of ℚⁿ stored by its reduced row-echelon basis.
///
/// The RREF basis is unique, so derived equality is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: MatrixQ,
}

/// Everything [`subspace_ops`] reports about a pair of subspaces.
#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceOps {
    pub sum: Subspace,
    pub intersection: Subspace,
    pub equal: bool,
    /// `w ⊆ u`.
    pub contains: bool,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: MatrixQ::zeros(0, ambient_dim) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: MatrixQ::identity(ambient_dim) }
    }

    /// Span of the given vectors (any number, possibly dependent).
    pub fn span(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, found: v.len() });
        }
        Ok(Self::from_matrix(&MatrixQ::from_rows(ambient_dim, vectors)))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &MatrixQ) -> Self {
        let red = rref(m);
        let rows: Vec<Vec<Rational>> = (0..red.rank).map(|r| red.rref.row(r).to_vec()).collect();
        Subspace { ambient_dim: m.cols(), basis: MatrixQ::from_rows(m.cols(), &rows) }
    }

    /// Span of the standard basis vectors with the given 0-based indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let vecs: Vec<Vec<Rational>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![<Rational as Scalar>::zero(); ambient_dim];
                v[i] = <Rational as Scalar>::one();
                v
            })
            .collect();
        Self::from_matrix(&MatrixQ::from_rows(ambient_dim, &vecs))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &MatrixQ {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vectors()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Self::from_matrix(&self.basis.vstack(&other.basis)?))
    }

    /// Zassenhaus: row-reduce `[U U; W 0]`; rows whose left half vanishes
    /// carry a basis of `U ∩ W` in their right half.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let n = self.ambient_dim;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for u in self.basis.row_vectors() {
            let mut r = u.clone();
            r.extend(u);
            rows.push(r);
        }
        for w in other.basis.row_vectors() {
            let mut r = w;
            r.extend(std::iter::repeat(<Rational as Scalar>::zero()).take(n));
            rows.push(r);
        }
        let red = rref(&MatrixQ::from_rows(2 * n, &rows));
        let inter: Vec<Vec<Rational>> = (0..red.rank)
            .map(|r| red.rref.row(r))
            .filter(|row| row[..n].iter().all(Scalar::is_zero))
            .map(|row| row[n..].to_vec())
            .collect();
        Ok(Self::from_matrix(&MatrixQ::from_rows(n, &inter)))
    }

    pub fn contains_vector(&self, v: &[Rational]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: v.len() });
        }
        let stacked = self.basis.vstack(&MatrixQ::from_rows(self.ambient_dim, &[v.to_vec()]))?;
        Ok(stacked.rank() == self.dim())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        Ok(self.sum(other)?.dim() == self.dim())
    }

    /// Renders the basis in `e_k` notation, e.g. `span(e4, e5 - e7)`.
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self.basis.row_vectors().iter().map(|v| super::fmt_vector(v)).collect();
        format!("span({})", parts.join(", "))
    }
}

/// Sum, intersection, equality and containment of two subspaces in one call.
pub fn subspace_ops(u: &Subspace, w: &Subspace) -> Result<SubspaceOps> {
    let sum = u.sum(w)?;
    let intersection = u.intersection(w)?;
    Ok(SubspaceOps { equal: u == w, contains: sum.dim() == u.dim(), sum, intersection })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn full_space_with_itself() {
        let u = Subspace::full(3);
        let ops = subspace_ops(&u, &u).unwrap();
        assert_eq!(ops.sum, u);
        assert_eq!(ops.intersection, u);
        assert!(ops.equal && ops.contains);
    }

    #[test]
    fn coordinate_axes() {
        let u = Subspace::coordinate(2, &[0]);
        let w = Subspace::coordinate(2, &[1]);
        let ops = subspace_ops(&u, &w).unwrap();
        assert!(ops.intersection.is_zero());
        assert_eq!(ops.sum, Subspace::full(2));
        assert!(!ops.equal && !ops.contains);
    }

    #[test]
    fn skew_intersection() {
        // span(e1+e2, e3) ∩ span(e1, e2) = span(e1+e2)
        let u = Subspace::span(3, &[vec![q(1), q(1), q(0)], vec![q(0), q(0), q(1)]]).unwrap();
        let w = Subspace::coordinate(3, &[0, 1]);
        let i = u.intersection(&w).unwrap();
        assert_eq!(i, Subspace::span(3, &[vec![q(2), q(2), q(0)]]).unwrap());
    }

    #[test]
    fn mismatched_ambient_dimension() {
        assert!(Subspace::full(2).sum(&Subspace::full(3)).is_err());
    }
}
