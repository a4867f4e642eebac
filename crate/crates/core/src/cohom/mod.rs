//! Second cohomology `H²` of an anticommutative algebra with trivial
//! one-dimensional coefficients.
//!
//! A cocycle is a skew form with `θ(xy, z) + θ(x, yz) = 0`; coboundaries are
//! `δf(x, y) = f(xy)`.

mod form;

pub use form::{pair_count, pair_index, pairs, SkewForm};

use crate::algcore::Algebra;
use crate::error::{Error, Result};
use crate::exact::{rref, MatrixQ, Rational, Subspace};
use num_traits::Zero;

/// Bases of `Z²`, `B²` and representatives of a basis of `H² = Z²/B²`.
#[derive(Clone, Debug, PartialEq)]
pub struct CohomologyBasis {
    pub z2: Vec<SkewForm>,
    pub b2: Vec<SkewForm>,
    pub h2_reps: Vec<SkewForm>,
}

impl CohomologyBasis {
    pub fn h2_dim(&self) -> usize {
        self.h2_reps.len()
    }
}

fn check_dim(a: &Algebra, f: &SkewForm) -> Result<()> {
    if f.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: f.dim() });
    }
    Ok(())
}

/// Cocycle condition on every basis triple.
pub fn is_cocycle(a: &Algebra, f: &SkewForm) -> Result<bool> {
    check_dim(a, f)?;
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut s = Rational::zero();
                for l in 0..n {
                    let c = a.c(i, j, l);
                    if !c.is_zero() {
                        s += c * f.value(l, k);
                    }
                    let c = a.c(j, k, l);
                    if !c.is_zero() {
                        s += c * f.value(i, l);
                    }
                }
                if !s.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Constraint matrix of the cocycle condition in `Δ_ij` coordinates.
fn cocycle_system(a: &Algebra) -> MatrixQ {
    let n = a.dim();
    let m = pair_count(n);
    let mut rows = Vec::new();
    let add = |row: &mut Vec<Rational>, c: &Rational, p: usize, q: usize| {
        if c.is_zero() || p == q {
            return;
        }
        if p < q {
            row[pair_index(n, p, q)] += c;
        } else {
            row[pair_index(n, q, p)] -= c;
        }
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![Rational::zero(); m];
                for l in 0..n {
                    add(&mut row, a.c(i, j, l), l, k);
                    add(&mut row, a.c(j, k, l), i, l);
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    MatrixQ::from_rows(m, &rows)
}

/// Basis of `Z²(A)`.
pub fn cocycle_space(a: &Algebra) -> Vec<SkewForm> {
    let n = a.dim();
    rref(&cocycle_system(a))
        .kernel
        .row_vectors()
        .into_iter()
        .map(|v| SkewForm::from_coords(n, v).expect("length matches"))
        .collect()
}

/// Basis of `B²(A)`, spanned by `δ(e_k*)` whose `Δ_ij` coordinate is `c^k_{ij}`.
pub fn coboundary_space(a: &Algebra) -> Vec<SkewForm> {
    let n = a.dim();
    let images: Vec<Vec<Rational>> = (0..n)
        .map(|k| pairs(n).map(|(i, j)| a.c(i, j, k).clone()).collect())
        .collect();
    Subspace::span(pair_count(n), &images)
        .expect("lengths match")
        .basis_vectors()
        .into_iter()
        .map(|v| SkewForm::from_coords(n, v).expect("length matches"))
        .collect()
}

/// `δf` for a linear functional `f` given by its values on the basis.
pub fn coboundary_of(a: &Algebra, f: &[Rational]) -> Result<SkewForm> {
    let n = a.dim();
    if f.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: f.len() });
    }
    let coords = pairs(n)
        .map(|(i, j)| (0..n).fold(Rational::zero(), |acc, k| acc + a.c(i, j, k) * &f[k]))
        .collect();
    SkewForm::from_coords(n, coords)
}

/// Completes the `B²` basis inside `Z²`: a `Z²` basis vector becomes a
/// representative whenever it is independent of everything chosen so far.
pub fn h2_basis(a: &Algebra) -> CohomologyBasis {
    let n = a.dim();
    let z2 = cocycle_space(a);
    let b2 = coboundary_space(a);
    let mut span = Subspace::span(pair_count(n), &b2.iter().map(SkewForm::coords).collect::<Vec<_>>())
        .expect("lengths match");
    let mut h2_reps = Vec::new();
    for z in &z2 {
        if !span.contains_vector(&z.coords()).expect("lengths match") {
            span = Subspace::span(pair_count(n), &[span.basis_vectors(), vec![z.coords()]].concat())
                .expect("lengths match");
            h2_reps.push(z.clone());
        }
    }
    CohomologyBasis { z2, b2, h2_reps }
}

/// Coordinates of the class `[f]` on `basis.h2_reps`.
pub fn class_coordinates(a: &Algebra, f: &SkewForm, basis: &CohomologyBasis) -> Result<Vec<Rational>> {
    if !is_cocycle(a, f)? {
        return Err(Error::NotACocycle(f.to_string()));
    }
    let cols: Vec<Vec<Rational>> = basis.h2_reps.iter().chain(&basis.b2).map(SkewForm::coords).collect();
    let m = MatrixQ::from_rows(pair_count(a.dim()), &cols).transpose();
    let x = m
        .solve(&f.coords())?
        .ok_or_else(|| Error::NotACocycle(format!("{f} is outside the span of the supplied basis")))?;
    Ok(x[..basis.h2_reps.len()].to_vec())
}

/// True iff `f` is a coboundary.
pub fn is_coboundary(a: &Algebra, f: &SkewForm) -> Result<bool> {
    check_dim(a, f)?;
    let b2 = coboundary_space(a);
    let span = Subspace::span(pair_count(a.dim()), &b2.iter().map(SkewForm::coords).collect::<Vec<_>>())?;
    span.contains_vector(&f.coords())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::lower_central_series;

    fn d5_03() -> Algebra {
        Algebra::from_int_table(5, &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)])]).unwrap()
    }

    fn d7_06() -> Algebra {
        Algebra::from_int_table(7, &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)]), (2, 3, &[(6, 1)])]).unwrap()
    }

    fn nabla1() -> SkewForm {
        SkewForm::from_terms(7, &[(0, 5, 1), (1, 4, -1), (2, 3, 1)])
    }

    #[test]
    fn d5_03_spaces() {
        let a = d5_03();
        assert_eq!(cocycle_space(&a).len(), 3);
        assert_eq!(coboundary_space(&a).len(), 2);
        let h = h2_basis(&a);
        assert_eq!(h.h2_dim(), 1);
        assert!(is_cocycle(&a, &SkewForm::from_terms(5, &[(0, 1, 1)])).unwrap());
        assert!(is_cocycle(&a, &SkewForm::from_terms(5, &[(1, 2, 1)])).unwrap());
    }

    #[test]
    fn zero_algebra_every_form_is_a_cocycle() {
        let a = Algebra::zero(4);
        assert_eq!(cocycle_space(&a).len(), 6);
        assert!(coboundary_space(&a).is_empty());
    }

    #[test]
    fn d7_06_nabla_coordinates() {
        let a = d7_06();
        assert!(is_cocycle(&a, &nabla1()).unwrap());
        assert_eq!(cocycle_space(&a).len(), 7);
        let b = h2_basis(&a);
        assert_eq!(b.h2_dim(), 4);
        assert_eq!(coboundary_space(&a).len(), lower_central_series(&a)[1].dim());
        let shifted = nabla1().add(&coboundary_of(&a, &crate::algcore::unit(7, 3)).unwrap());
        assert_eq!(
            class_coordinates(&a, &shifted, &b).unwrap(),
            class_coordinates(&a, &nabla1(), &b).unwrap()
        );
        let bad = SkewForm::from_terms(7, &[(0, 4, 1)]);
        assert!(matches!(class_coordinates(&a, &bad, &b), Err(Error::NotACocycle(_))));
    }
}
