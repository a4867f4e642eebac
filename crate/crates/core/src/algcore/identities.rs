use super::{add_vec, is_zero_vec, neg_vec, product, unit, Algebra};
use crate::exact::Rational;
use num_traits::Zero;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// `xx = 0`.
    Anticommutative,
    /// `(xy)z = -x(yz)`.
    Antiassociative,
    /// `(xy)z + (yz)x + (zx)y = 0`.
    Jacobi,
}

/// A basis triple violating an identity, with both sides evaluated.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub identity: Identity,
    /// 0-based basis indices.
    pub triple: (usize, usize, usize),
    #[serde(serialize_with = "crate::exact::ser_vector")]
    pub lhs: Vec<Rational>,
    #[serde(serialize_with = "crate::exact::ser_vector")]
    pub rhs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub anticommutative: bool,
    pub antiassociative: bool,
    pub jacobi: bool,
    pub dual_mock_lie: bool,
    pub witnesses: Vec<Witness>,
}

impl IdentityReport {
    pub fn witnesses_for(&self, id: Identity) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(move |w| w.identity == id)
    }
}

/// Checks anticommutativity, antiassociativity and Jacobi on all basis triples.
///
/// For antiassociativity the witness carries `lhs = (e_i e_j)e_k` and
/// `rhs = -e_i(e_j e_k)`; for Jacobi `lhs` is the cyclic sum and `rhs = 0`.
pub fn check_identities(a: &Algebra) -> IdentityReport {
    let n = a.dim();
    let mut witnesses = Vec::new();
    for i in 0..n {
        for j in i..n {
            let ij = a.basis_product(i, j);
            let ji = a.basis_product(j, i);
            let sum = add_vec(&ij, &ji);
            if (i == j && !is_zero_vec(&ij)) || !is_zero_vec(&sum) {
                witnesses.push(Witness {
                    identity: Identity::Anticommutative,
                    triple: (i, j, j),
                    lhs: ij,
                    rhs: neg_vec(&ji),
                });
            }
        }
    }
    let e: Vec<Vec<Rational>> = (0..n).map(|i| unit(n, i)).collect();
    let mul = |x: &[Rational], y: &[Rational]| product(a, x, y).expect("dims match");
    for i in 0..n {
        for j in 0..n {
            let ij = a.basis_product(i, j);
            for k in 0..n {
                let left = mul(&ij, &e[k]);
                let right = mul(&e[i], &a.basis_product(j, k));
                if !is_zero_vec(&add_vec(&left, &right)) {
                    witnesses.push(Witness {
                        identity: Identity::Antiassociative,
                        triple: (i, j, k),
                        lhs: left.clone(),
                        rhs: neg_vec(&right),
                    });
                }
                let cyc = add_vec(
                    &add_vec(&left, &mul(&a.basis_product(j, k), &e[i])),
                    &mul(&a.basis_product(k, i), &e[j]),
                );
                if !is_zero_vec(&cyc) {
                    witnesses.push(Witness {
                        identity: Identity::Jacobi,
                        triple: (i, j, k),
                        lhs: cyc,
                        rhs: vec![Rational::zero(); n],
                    });
                }
            }
        }
    }
    let has = |id| witnesses.iter().any(|w: &Witness| w.identity == id);
    let anticommutative = !has(Identity::Anticommutative);
    let antiassociative = !has(Identity::Antiassociative);
    IdentityReport {
        anticommutative,
        antiassociative,
        jacobi: !has(Identity::Jacobi),
        dual_mock_lie: anticommutative && antiassociative,
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn zero_algebra_satisfies_everything() {
        let r = check_identities(&Algebra::zero(5));
        assert!(r.anticommutative && r.antiassociative && r.jacobi && r.dual_mock_lie);
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn d7_14_is_not_lie() {
        let a = super::super::tests::d7_14();
        let r = check_identities(&a);
        assert!(r.dual_mock_lie);
        assert!(!r.jacobi);
        let w = r.witnesses_for(Identity::Jacobi).find(|w| w.triple == (0, 1, 2)).unwrap();
        let mut expected = vec![q(0); 7];
        expected[6] = q(-3);
        assert_eq!(w.lhs, expected);
    }

    #[test]
    fn associative_product_fails_antiassociativity() {
        // (e1e2)e1 = e3e1 = e2 and e1(e2e1) = -e1e3 = e2, so the sum is 2e2
        let a = Algebra::from_int_table(3, &[(1, 2, &[(3, 1)]), (3, 1, &[(2, 1)])]).unwrap();
        let r = check_identities(&a);
        assert!(r.anticommutative);
        assert!(!r.antiassociative && !r.dual_mock_lie);
    }
}
