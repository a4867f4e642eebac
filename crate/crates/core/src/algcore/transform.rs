use super::{product, Algebra};
use crate::error::{Error, Result};
use crate::exact::{MatrixQ, Rational};
use num_traits::Zero;

/// Transports the product along `g`: `(g∗μ)(x, y) = g·μ(g⁻¹x, g⁻¹y)`.
///
/// With this convention `g = λ·I` multiplies every structure constant by
/// `λ⁻¹`, and a matrix `φ` is an automorphism exactly when
/// `apply_basis_change(a, φ) == a`.
pub fn apply_basis_change(a: &Algebra, g: &MatrixQ) -> Result<Algebra> {
    let n = a.dim();
    if g.rows() != n || g.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: g.rows().max(g.cols()) });
    }
    let inv = g.inverse().ok_or(Error::SingularMatrix)?;
    let cols: Vec<Vec<Rational>> = (0..n).map(|i| inv.column(i)).collect();
    let mut sc = vec![Rational::zero(); n * n * n];
    for i in 0..n {
        for j in i + 1..n {
            let v = g.apply(&product(a, &cols[i], &cols[j])?)?;
            for (k, x) in v.into_iter().enumerate() {
                sc[(j * n + i) * n + k] = -&x;
                sc[(i * n + j) * n + k] = x;
            }
        }
    }
    Algebra::from_tensor(n, sc)
}

/// True iff `apply_basis_change(a, p) == b`.
pub fn verify_isomorphism(a: &Algebra, b: &Algebra, p: &MatrixQ) -> bool {
    a.dim() == b.dim() && apply_basis_change(a, p).is_ok_and(|c| &c == b)
}

/// `A ⊕ ℂ^k`: appends `k` basis vectors that annihilate everything.
pub fn direct_sum_with_trivial(a: &Algebra, k: usize) -> Algebra {
    let n = a.dim();
    let m = n + k;
    let mut sc = vec![Rational::zero(); m * m * m];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                sc[(i * m + j) * m + l] = a.c(i, j, l).clone();
            }
        }
    }
    Algebra::from_tensor(m, sc).expect("skew-symmetry is inherited")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::{annihilator, tests::d7_14};
    use crate::exact::{q, qr};

    #[test]
    fn identity_change_is_trivial() {
        let a = d7_14();
        assert_eq!(apply_basis_change(&a, &MatrixQ::identity(7)).unwrap(), a);
    }

    #[test]
    fn scalar_change_scales_by_inverse() {
        let a = d7_14();
        let b = apply_basis_change(&a, &MatrixQ::identity(7).scale(&q(3))).unwrap();
        for (x, y) in a.structure_constants().iter().zip(b.structure_constants()) {
            assert_eq!(y, &(x * qr(1, 3)));
        }
    }

    #[test]
    fn singular_change_rejected() {
        assert!(matches!(
            apply_basis_change(&d7_14(), &MatrixQ::zeros(7, 7)),
            Err(Error::SingularMatrix)
        ));
    }

    #[test]
    fn direct_sum_grows_annihilator() {
        let a = d7_14();
        assert_eq!(direct_sum_with_trivial(&a, 0), a);
        let b = direct_sum_with_trivial(&a, 2);
        assert_eq!(b.dim(), 9);
        assert_eq!(annihilator(&b).dim(), annihilator(&a).dim() + 2);
    }
}
