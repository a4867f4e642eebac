//! Central extensions `A_θ = A ⊕ V` by cocycle tuples and the action of
//! automorphisms on those tuples.

pub mod shapes;

use crate::algcore::{annihilator, apply_basis_change, Algebra};
use crate::cohom::{class_coordinates, h2_basis, is_cocycle, CohomologyBasis, SkewForm};
use crate::error::{Error, Result};
use crate::exact::{rref, MatrixQ, Rational, Subspace};
use num_traits::Zero;

/// Cocycles `θ_1, …, θ_s`; the extension sends `(x, y)` to `Σ θ_r(x, y) e_{n+r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleTuple {
    pub algebra_dim: usize,
    pub components: Vec<SkewForm>,
}

impl CocycleTuple {
    pub fn new(components: Vec<SkewForm>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        };
        let n = first.dim();
        if let Some(bad) = components.iter().find(|f| f.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.dim() });
        }
        Ok(CocycleTuple { algebra_dim: n, components })
    }

    pub fn single(f: SkewForm) -> Self {
        CocycleTuple { algebra_dim: f.dim(), components: vec![f] }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    fn check(&self, a: &Algebra) -> Result<()> {
        if self.algebra_dim != a.dim() {
            return Err(Error::DimensionMismatch { expected: a.dim(), found: self.algebra_dim });
        }
        Ok(())
    }

    fn check_cocycles(&self, a: &Algebra) -> Result<()> {
        self.check(a)?;
        for f in &self.components {
            if !is_cocycle(a, f)? {
                return Err(Error::NotACocycle(f.to_string()));
            }
        }
        Ok(())
    }
}

/// A candidate automorphism, acting on column vectors: `φ(e_j) = Σ_i φ[i][j] e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutCandidate {
    pub matrix: MatrixQ,
}

impl From<MatrixQ> for AutCandidate {
    fn from(matrix: MatrixQ) -> Self {
        AutCandidate { matrix }
    }
}

/// `θ⊥ = {x : θ_r(A, x) = 0 for all r}`.
pub fn radical(a: &Algebra, t: &CocycleTuple) -> Result<Subspace> {
    t.check(a)?;
    let n = a.dim();
    let mut m = MatrixQ::zeros(0, n);
    for f in &t.components {
        m = m.vstack(&f.gram())?;
    }
    Ok(Subspace::from_matrix(&rref(&m).kernel))
}

/// Outcome of the two conditions that make `A_θ` a non-split extension
/// with an `s`-dimensional annihilator coming from `V`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionReport {
    pub radical: Subspace,
    /// `dim(θ⊥ ∩ Ann A)`.
    pub radical_ann_dim: usize,
    pub radical_meets_ann: bool,
    pub classes_independent_in_h2: bool,
}

impl ExtensionReport {
    /// `θ⊥ ∩ Ann A = 0` and the classes are independent.
    pub fn satisfies_ts(&self) -> bool {
        !self.radical_meets_ann && self.classes_independent_in_h2
    }
}

/// Span of the classes `[θ_r]` in `H²` coordinates.
pub fn class_span(a: &Algebra, basis: &CohomologyBasis, t: &CocycleTuple) -> Result<Subspace> {
    t.check_cocycles(a)?;
    let coords = t
        .components
        .iter()
        .map(|f| class_coordinates(a, f, basis))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(basis.h2_dim(), &coords)
}

pub fn check_extension_conditions(a: &Algebra, t: &CocycleTuple) -> Result<ExtensionReport> {
    t.check_cocycles(a)?;
    let rad = radical(a, t)?;
    let meet = rad.intersection(&annihilator(a))?;
    let span = class_span(a, &h2_basis(a), t)?;
    Ok(ExtensionReport {
        radical_ann_dim: meet.dim(),
        radical_meets_ann: !meet.is_zero(),
        classes_independent_in_h2: span.dim() == t.len(),
        radical: rad,
    })
}

/// `A_θ`: old products kept, `e_i e_j` gains `θ_r(e_i, e_j)` on `e_{n+r}`.
pub fn central_extension(a: &Algebra, t: &CocycleTuple) -> Result<Algebra> {
    t.check_cocycles(a)?;
    let n = a.dim();
    let m = n + t.len();
    let mut sc = vec![Rational::zero(); m * m * m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                sc[(i * m + j) * m + k] = a.c(i, j, k).clone();
            }
            for (r, f) in t.components.iter().enumerate() {
                sc[(i * m + j) * m + n + r] = f.value(i, j);
            }
        }
    }
    Algebra::from_tensor(m, sc)
}

/// `φ` is invertible and `φ(xy) = φ(x)φ(y)`.
pub fn verify_automorphism(a: &Algebra, phi: &AutCandidate) -> bool {
    let m = &phi.matrix;
    m.rows() == a.dim() && m.cols() == a.dim() && apply_basis_change(a, m).is_ok_and(|b| &b == a)
}

/// `(φθ)(x, y) = θ(φx, φy)`, i.e. Gram matrices `B ↦ φᵀBφ`.
///
/// With this convention `act(φψ, t) = act(ψ, act(φ, t))`.
pub fn act(a: &Algebra, phi: &AutCandidate, t: &CocycleTuple) -> Result<CocycleTuple> {
    t.check(a)?;
    if !verify_automorphism(a, phi) {
        return Err(Error::NotAnAutomorphism);
    }
    let pt = phi.matrix.transpose();
    let components = t
        .components
        .iter()
        .map(|f| SkewForm::from_gram(&pt.mul(&f.gram())?.mul(&phi.matrix)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(CocycleTuple { algebra_dim: t.algebra_dim, components })
}

/// `span{[t1]} = span{[t2]}` inside `H²`.
pub fn same_h2_span(a: &Algebra, t1: &CocycleTuple, t2: &CocycleTuple) -> Result<bool> {
    let basis = h2_basis(a);
    Ok(class_span(a, &basis, t1)? == class_span(a, &basis, t2)?)
}

#[cfg(test)]
mod tests {
    use super::shapes::{nablas_d7_06, AutShape7};
    use super::*;
    use crate::algcore::{check_identities, lower_central_series};
    use crate::cohom::coboundary_of;
    use crate::exact::q;

    fn d7_06() -> Algebra {
        Algebra::from_int_table(7, &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)]), (2, 3, &[(6, 1)])]).unwrap()
    }

    #[test]
    fn zero_tuple_gives_split_sum() {
        let a = d7_06();
        let t = CocycleTuple::new(vec![SkewForm::zero(7), SkewForm::zero(7)]).unwrap();
        assert_eq!(central_extension(&a, &t).unwrap(), crate::algcore::direct_sum_with_trivial(&a, 2));
        assert_eq!(radical(&a, &t).unwrap(), Subspace::full(7));
    }

    #[test]
    fn nabla1_plus_nabla4_radical_meets_annihilator() {
        let a = d7_06();
        let [n1, _, _, n4] = nablas_d7_06();
        let t = CocycleTuple::single(n1.add(&n4));
        let r = check_extension_conditions(&a, &t).unwrap();
        assert!(r.classes_independent_in_h2);
        assert_eq!(r.radical_ann_dim, 1);
        let mut v = vec![q(0); 7];
        v[3] = q(1);
        v[6] = q(-1);
        assert!(r.radical.contains_vector(&v).unwrap());
        let b = central_extension(&a, &t).unwrap();
        assert_eq!(annihilator(&b).dim(), r.radical_ann_dim + 1);
        let id = check_identities(&b);
        assert!(id.dual_mock_lie && !id.jacobi);
        assert_eq!(lower_central_series(&b).last().unwrap().dim(), 0);
    }

    #[test]
    fn pair_nabla1_nabla4_is_non_split() {
        let a = d7_06();
        let [n1, _, _, n4] = nablas_d7_06();
        let t = CocycleTuple::new(vec![n1, n4]).unwrap();
        assert!(check_extension_conditions(&a, &t).unwrap().satisfies_ts());
    }

    #[test]
    fn repeated_component_is_dependent() {
        let a = d7_06();
        let [n1, ..] = nablas_d7_06();
        let t = CocycleTuple::new(vec![n1.clone(), n1]).unwrap();
        assert!(!check_extension_conditions(&a, &t).unwrap().classes_independent_in_h2);
    }

    #[test]
    fn nabla2_alone_meets_annihilator() {
        let a = d7_06();
        let [_, n2, _, _] = nablas_d7_06();
        let t = CocycleTuple::single(n2);
        let r = check_extension_conditions(&a, &t).unwrap();
        assert!(r.radical_meets_ann);
        assert!(r.radical.contains(&Subspace::coordinate(7, &[1, 2, 3, 4, 5])).unwrap());
    }

    #[test]
    fn swap_is_not_an_automorphism() {
        let a = d7_06();
        let mut m = MatrixQ::identity(7);
        m.set(0, 0, q(0));
        m.set(3, 3, q(0));
        m.set(0, 3, q(1));
        m.set(3, 0, q(1));
        assert!(!verify_automorphism(&a, &m.clone().into()));
        assert!(verify_automorphism(&a, &MatrixQ::identity(7).into()));
        let t = CocycleTuple::single(SkewForm::zero(7));
        assert!(matches!(act(&a, &m.into(), &t), Err(Error::NotAnAutomorphism)));
    }

    #[test]
    fn diagonal_action_scales_nabla1() {
        let a = d7_06();
        let (l, mu) = (q(2), q(3));
        let shape = AutShape7 { a: l.clone(), e: l.clone(), k: l.clone(), z: mu, ..Default::default() };
        let phi: AutCandidate = shape.matrix().into();
        assert!(verify_automorphism(&a, &phi));
        let [n1, ..] = nablas_d7_06();
        let out = act(&a, &phi, &CocycleTuple::single(n1.clone())).unwrap();
        assert_eq!(out.components[0], n1.scale(&q(8)));
    }

    #[test]
    fn spans_ignore_scaling_and_coboundaries() {
        let a = d7_06();
        let [n1, _, _, n4] = nablas_d7_06();
        let t1 = CocycleTuple::single(n1.add(&n4));
        let shifted = n1.add(&n4).scale(&q(5)).add(&coboundary_of(&a, &crate::algcore::unit(7, 4)).unwrap());
        assert!(same_h2_span(&a, &t1, &CocycleTuple::single(shifted)).unwrap());
        assert!(!same_h2_span(&a, &t1, &CocycleTuple::single(n1)).unwrap());
    }
}
