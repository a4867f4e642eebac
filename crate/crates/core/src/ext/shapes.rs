//! The automorphism matrix shapes of `𝔇⁷₀₆` and `𝔇⁸₀₆ = 𝔇⁶₀₆ ⊕ ℂ²`, the
//! `∇` bases of their `H²`, the printed `α*` formulas and the reduction
//! recipes that pick orbit representatives.
//!
//! Matrices use the column convention of [`super::AutCandidate`].

use super::{act, AutCandidate, CocycleTuple};
use crate::algcore::Algebra;
use crate::cohom::{class_coordinates, coboundary_space, CohomologyBasis, SkewForm};
use crate::error::{Error, Result};
use crate::exact::{MatrixQ, Rational};
use num_traits::{One, Zero};

/// `e1e2 = e4, e1e3 = e5, e2e3 = e6` padded with `n - 6` trivial directions.
pub fn d6_06_padded(n: usize) -> Algebra {
    Algebra::from_int_table(n, &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)]), (2, 3, &[(6, 1)])])
        .expect("valid table")
}

/// `∇1 = Δ16 - Δ25 + Δ34`, the form shared by both shapes.
fn nabla1(n: usize) -> SkewForm {
    SkewForm::from_terms(n, &[(0, 5, 1), (1, 4, -1), (2, 3, 1)])
}

/// `∇1, ∇2 = Δ17, ∇3 = Δ27, ∇4 = Δ37` on `𝔇⁷₀₆`.
pub fn nablas_d7_06() -> [SkewForm; 4] {
    let d = |i, j| SkewForm::from_terms(7, &[(i, j, 1)]);
    [nabla1(7), d(0, 6), d(1, 6), d(2, 6)]
}

/// `∇1`, then `Δ17, Δ18, Δ27, Δ28, Δ37, Δ38, Δ78` on `𝔇⁸₀₆`.
pub fn nablas_d8_06() -> [SkewForm; 8] {
    let d = |i, j| SkewForm::from_terms(8, &[(i, j, 1)]);
    [nabla1(8), d(0, 6), d(0, 7), d(1, 6), d(1, 7), d(2, 6), d(2, 7), d(6, 7)]
}

/// `Σ α_i ∇_i`.
pub fn combine(nablas: &[SkewForm], alphas: &[Rational]) -> SkewForm {
    assert_eq!(nablas.len(), alphas.len(), "one coefficient per ∇");
    let mut out = SkewForm::zero(nablas[0].dim());
    for (f, c) in nablas.iter().zip(alphas) {
        out = out.add(&f.scale(c));
    }
    out
}

/// Coordinates of `[f]` on the classes of `nablas`, which must span `H²`
/// together with the coboundaries.
pub fn nabla_coordinates(a: &Algebra, nablas: &[SkewForm], f: &SkewForm) -> Result<Vec<Rational>> {
    let basis = CohomologyBasis { z2: Vec::new(), b2: coboundary_space(a), h2_reps: nablas.to_vec() };
    class_coordinates(a, f, &basis)
}

/// Free letters of the `Aut(𝔇⁷₀₆)` shape
///
/// ```text
/// a b c 0     0     0     0
/// d e f 0     0     0     0
/// g h k 0     0     0     0
/// l m n ae-db af-dc bf-ec p
/// q r s ah-gb ak-gc bk-hc i
/// j t u dh-ge dk-gf ek-hf v
/// w x y 0     0     0     z
/// ```
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AutShape7 {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub f: Rational,
    pub g: Rational,
    pub h: Rational,
    pub k: Rational,
    pub l: Rational,
    pub m: Rational,
    pub n: Rational,
    pub p: Rational,
    pub q: Rational,
    pub r: Rational,
    pub s: Rational,
    pub i: Rational,
    pub j: Rational,
    pub t: Rational,
    pub u: Rational,
    pub v: Rational,
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

/// The upper-left 3×3 block and its 2×2 minors, shared by both shapes.
fn top_rows(a: &Rational, b: &Rational, c: &Rational, d: &Rational, e: &Rational, f: &Rational, g: &Rational, h: &Rational, k: &Rational) -> [[Rational; 3]; 6] {
    let minor = |x: &Rational, y: &Rational, u: &Rational, v: &Rational| x * y - u * v;
    [
        [a.clone(), b.clone(), c.clone()],
        [d.clone(), e.clone(), f.clone()],
        [g.clone(), h.clone(), k.clone()],
        [minor(a, e, d, b), minor(a, f, d, c), minor(b, f, e, c)],
        [minor(a, h, g, b), minor(a, k, g, c), minor(b, k, h, c)],
        [minor(d, h, g, e), minor(d, k, g, f), minor(e, k, h, f)],
    ]
}

fn fill(n: usize, rows: Vec<Vec<Rational>>) -> MatrixQ {
    debug_assert!(rows.iter().all(|r| r.len() == n));
    MatrixQ::from_rows(n, &rows)
}

impl AutShape7 {
    pub fn matrix(&self) -> MatrixQ {
        let s = self;
        let [r1, r2, r3, m4, m5, m6] = top_rows(&s.a, &s.b, &s.c, &s.d, &s.e, &s.f, &s.g, &s.h, &s.k);
        let z = Rational::zero;
        let pad = |r: [Rational; 3]| [r.to_vec(), vec![z(), z(), z(), z()]].concat();
        let low = |x: &Rational, y: &Rational, w: &Rational, m: [Rational; 3], tail: &Rational| {
            [vec![x.clone(), y.clone(), w.clone()], m.to_vec(), vec![tail.clone()]].concat()
        };
        fill(
            7,
            vec![
                pad(r1),
                pad(r2),
                pad(r3),
                low(&s.l, &s.m, &s.n, m4, &s.p),
                low(&s.q, &s.r, &s.s, m5, &s.i),
                low(&s.j, &s.t, &s.u, m6, &s.v),
                vec![s.w.clone(), s.x.clone(), s.y.clone(), z(), z(), z(), s.z.clone()],
            ],
        )
    }

    /// The `α*` formulas as displayed for `𝔇⁷₀₆`.
    pub fn alpha_star_printed(&self, al: &[Rational; 4]) -> [Rational; 4] {
        let AutShape7 { a, b, c, d, e, f, g, h, k, p, i, v, z, .. } = self;
        let [a1, a2, a3, a4] = al;
        let det = c * e * g - b * f * g - c * d * h + a * f * h + b * d * k - a * e * k;
        [
            -(det * a1),
            (-(d * i) + g * p + a * v) * a1 + a * z * a2 + d * z * a3 + g * z * a4,
            (-(e * i) + h * p + b * v) * a1 + b * z * a2 + e * z * a3 + h * z * a4,
            (-(f * i) + k * p + c * v) * a1 + c * z * a2 + f * z * a3 + k * z * a4,
        ]
    }
}

/// Free letters of the `Aut(𝔇⁸₀₆)` shape: the 7-dimensional shape with the
/// last column split into `p1 p2 / i1 i2 / v1 v2` and the last rows
/// `w1 x1 y1 0 0 0 z1 z2` and `w2 x2 y2 0 0 0 z3 z4`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AutShape8 {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub f: Rational,
    pub g: Rational,
    pub h: Rational,
    pub k: Rational,
    pub l: Rational,
    pub m: Rational,
    pub n: Rational,
    pub p1: Rational,
    pub p2: Rational,
    pub q: Rational,
    pub r: Rational,
    pub s: Rational,
    pub i1: Rational,
    pub i2: Rational,
    pub j: Rational,
    pub t: Rational,
    pub u: Rational,
    pub v1: Rational,
    pub v2: Rational,
    pub w1: Rational,
    pub x1: Rational,
    pub y1: Rational,
    pub z1: Rational,
    pub z2: Rational,
    pub w2: Rational,
    pub x2: Rational,
    pub y2: Rational,
    pub z3: Rational,
    pub z4: Rational,
}

/// Which variant of the 8-dimensional `α*` formulas to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaStarText {
    /// Exactly as displayed.
    Printed,
    /// With `-e i2` in `α5*` and `y2` in the `z1`/`z2` brackets of `α6*`, `α7*`.
    Corrected,
}

impl AutShape8 {
    pub fn matrix(&self) -> MatrixQ {
        let s = self;
        let [r1, r2, r3, m4, m5, m6] = top_rows(&s.a, &s.b, &s.c, &s.d, &s.e, &s.f, &s.g, &s.h, &s.k);
        let z = Rational::zero;
        let pad = |r: [Rational; 3]| [r.to_vec(), vec![z(), z(), z(), z(), z()]].concat();
        let low = |x: &Rational, y: &Rational, w: &Rational, m: [Rational; 3], t1: &Rational, t2: &Rational| {
            [vec![x.clone(), y.clone(), w.clone()], m.to_vec(), vec![t1.clone(), t2.clone()]].concat()
        };
        let last = |x: &Rational, y: &Rational, w: &Rational, t1: &Rational, t2: &Rational| {
            vec![x.clone(), y.clone(), w.clone(), z(), z(), z(), t1.clone(), t2.clone()]
        };
        fill(
            8,
            vec![
                pad(r1),
                pad(r2),
                pad(r3),
                low(&s.l, &s.m, &s.n, m4, &s.p1, &s.p2),
                low(&s.q, &s.r, &s.s, m5, &s.i1, &s.i2),
                low(&s.j, &s.t, &s.u, m6, &s.v1, &s.v2),
                last(&s.w1, &s.x1, &s.y1, &s.z1, &s.z2),
                last(&s.w2, &s.x2, &s.y2, &s.z3, &s.z4),
            ],
        )
    }

    /// The `α*` formulas for `𝔇⁸₀₆`.
    pub fn alpha_star(&self, al: &[Rational; 8], text: AlphaStarText) -> [Rational; 8] {
        let AutShape8 { a, b, c, d, e, f, g, h, k, p1, p2, i1, i2, v1, v2, w1, w2, x1, x2, y1, y2, z1, z2, z3, z4, .. } =
            self;
        let [a1, a2, a3, a4, a5, a6, a7, a8] = al;
        let det = c * e * g - b * f * g - c * d * h + a * f * h + b * d * k - a * e * k;
        let fixed = text == AlphaStarText::Corrected;
        let lead5 = if fixed { -(e * i2) } else { e * i2 };
        let y_low = if fixed { y2 } else { y1 };
        let col1 = (a * a2 + d * a4 + g * a6) - w2 * a8;
        let col1b = (a * a3 + d * a5 + g * a7) + w1 * a8;
        let col2 = (b * a2 + e * a4 + h * a6) - x2 * a8;
        let col2b = (b * a3 + e * a5 + h * a7) + x1 * a8;
        let col3 = (c * a2 + f * a4 + k * a6) - y_low * a8;
        let col3b = (c * a3 + f * a5 + k * a7) + y1 * a8;
        [
            -(det * a1),
            (-(d * i1) + g * p1 + a * v1) * a1 + &col1 * z1 + &col1b * z3,
            (-(d * i2) + g * p2 + a * v2) * a1 + &col1 * z2 + &col1b * z4,
            (-(e * i1) + h * p1 + b * v1) * a1 + &col2 * z1 + &col2b * z3,
            (lead5 + h * p2 + b * v2) * a1 + &col2 * z2 + &col2b * z4,
            (-(f * i1) + k * p1 + c * v1) * a1 + &col3 * z1 + &col3b * z3,
            (-(f * i2) + k * p2 + c * v2) * a1 + &col3 * z2 + &col3b * z4,
            (z1 * z4 - z2 * z3) * a8,
        ]
    }
}

/// The `α*` values actually produced by `φ` on `Σ α_i ∇_i`, read off as
/// `∇` coordinates of the transformed class.
pub fn alpha_star_computed(a: &Algebra, nablas: &[SkewForm], phi: &MatrixQ, alphas: &[Rational]) -> Result<Vec<Rational>> {
    let t = CocycleTuple::single(combine(nablas, alphas));
    let out = act(a, &AutCandidate::from(phi.clone()), &t)?;
    nabla_coordinates(a, nablas, &out.components[0])
}

fn ratio(num: Rational, den: &Rational) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(num / den)
}

/// Reduction of `α1∇1 + … + α4∇4` (`α1 α4 ≠ 0`) to `⟨∇1 + ∇4⟩`:
/// `d = h = a = e = k = 1`, `v = 1 - α2/α4`, `i = 1 + α3/α4`, `z = α1/α4`,
/// `c = -1 + 1/α1`.
pub fn recipe_d7_06_single(al: &[Rational; 4]) -> Result<AutShape7> {
    let one = Rational::one;
    let [a1, a2, a3, a4] = al;
    Ok(AutShape7 {
        a: one(),
        d: one(),
        e: one(),
        h: one(),
        k: one(),
        v: one() - ratio(a2.clone(), a4)?,
        i: one() + ratio(a3.clone(), a4)?,
        z: ratio(a1.clone(), a4)?,
        c: ratio(one(), a1)? - one(),
        ..Default::default()
    })
}

/// Reduction of a pair `(Σ α_i∇_i, Σ β_i∇_i)` with `β1 = 0` to `⟨∇1, ∇4⟩`.
///
/// The displayed letters are placed in the `Aut(𝔇⁷₀₆)` shape as
/// `a = -β3/α1, b = -β4/β2, c = 1/β2, d = β2/α1, h = 1, i = α3/α1,
/// p = -α4/α1, v = -α2/α1, z = 1`.
pub fn recipe_d7_06_pair(al: &[Rational; 4], be: &[Rational; 4]) -> Result<AutShape7> {
    let one = Rational::one;
    let [a1, a2, a3, a4] = al;
    let [_, b2, b3, b4] = be;
    Ok(AutShape7 {
        a: -ratio(b3.clone(), a1)?,
        b: -ratio(b4.clone(), b2)?,
        c: ratio(one(), b2)?,
        d: ratio(b2.clone(), a1)?,
        h: one(),
        i: ratio(a3.clone(), a1)?,
        p: -ratio(a4.clone(), a1)?,
        v: -ratio(a2.clone(), a1)?,
        z: one(),
        ..Default::default()
    })
}

/// Case (1) of the `𝔇⁸₀₆` reduction (`α1 α8 ≠ 0`), letters as displayed.
pub fn recipe_d8_06_case1(al: &[Rational; 8]) -> Result<AutShape8> {
    let one = Rational::one;
    let two = || Rational::from_integer(2.into());
    let [a1, a2, a3, a4, a5, a6, a7, a8] = al;
    let a18 = a1 * a8;
    Ok(AutShape8 {
        c: one(),
        e: one(),
        h: one(),
        k: one(),
        g: -ratio(one(), a1)?,
        z1: ratio(one(), a8)?,
        z2: two(),
        z4: one(),
        y1: ratio(a5 - a3, a8)?,
        x2: ratio(a4 + a5 - a2 - a3, a8)?,
        p1: -ratio(a2 + a3 - a5 + a6, &a18)?,
        p2: -ratio(two() * a2 + two() * a3 - a5 + two() * a6 + a7, a1)?,
        w1: -ratio(a5.clone(), &a18)?,
        w2: ratio(a2 + a3 - a5, &a18)?,
        ..Default::default()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qr};
    use crate::ext::{same_h2_span, verify_automorphism};

    fn alphas<const N: usize>(v: [i64; N]) -> [Rational; N] {
        v.map(q)
    }

    fn sample7() -> AutShape7 {
        AutShape7 {
            a: q(2), b: q(1), c: q(-1), d: q(0), e: q(3), f: q(1), g: q(1), h: q(0), k: q(1),
            l: q(4), m: q(-2), n: q(1), p: qr(1, 2), q: q(1), r: q(5), s: q(0), i: q(-3),
            j: q(2), t: q(1), u: q(7), v: q(2), w: q(1), x: q(-1), y: q(3), z: q(2),
        }
    }

    fn sample8() -> AutShape8 {
        AutShape8 {
            a: q(1), b: q(2), c: q(0), d: q(-1), e: q(1), f: q(3), g: q(2), h: q(1), k: q(1),
            l: q(1), m: q(0), n: q(2), p1: q(3), p2: q(-1), q: q(1), r: q(1), s: q(4),
            i1: q(2), i2: qr(1, 3), j: q(0), t: q(5), u: q(1), v1: q(-2), v2: q(1),
            w1: q(3), x1: q(-1), y1: q(2), z1: q(1), z2: q(2), w2: q(1), x2: q(4), y2: q(-3),
            z3: q(1), z4: q(3),
        }
    }

    #[test]
    fn shapes_are_automorphisms() {
        assert!(verify_automorphism(&d6_06_padded(7), &sample7().matrix().into()));
        assert!(verify_automorphism(&d6_06_padded(8), &sample8().matrix().into()));
        assert!(AutShape7::default().matrix().determinant().unwrap().is_zero());
    }

    #[test]
    fn printed_d7_formulas_match_action() {
        let a = d6_06_padded(7);
        let al = alphas([2, 3, 5, 7]);
        let got = alpha_star_computed(&a, &nablas_d7_06(), &sample7().matrix(), &al).unwrap();
        assert_eq!(got, sample7().alpha_star_printed(&al).to_vec());
    }

    #[test]
    fn d8_formulas_need_three_corrections() {
        let a = d6_06_padded(8);
        let al = alphas([2, 3, 5, 7, 11, 13, 17, 19]);
        let s = sample8();
        let got = alpha_star_computed(&a, &nablas_d8_06(), &s.matrix(), &al).unwrap();
        assert_eq!(got, s.alpha_star(&al, AlphaStarText::Corrected).to_vec());
        let printed = s.alpha_star(&al, AlphaStarText::Printed);
        let off: Vec<usize> = (0..8).filter(|&i| printed[i] != got[i]).map(|i| i + 1).collect();
        assert_eq!(off, vec![5, 6, 7]);
    }

    #[test]
    fn single_recipe_reaches_nabla1_plus_nabla4() {
        let a = d6_06_padded(7);
        let al = alphas([2, 3, 5, 7]);
        let phi = recipe_d7_06_single(&al).unwrap().matrix();
        let t = CocycleTuple::single(combine(&nablas_d7_06(), &al));
        let out = act(&a, &phi.into(), &t).unwrap();
        let [n1, _, _, n4] = nablas_d7_06();
        assert!(same_h2_span(&a, &out, &CocycleTuple::single(n1.add(&n4))).unwrap());
        assert!(matches!(recipe_d7_06_single(&alphas([1, 1, 1, 0])), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn pair_recipe_reaches_nabla1_nabla4() {
        let a = d6_06_padded(7);
        let (al, be) = (alphas([2, 3, 5, 7]), alphas([0, 3, -1, 4]));
        let phi = recipe_d7_06_pair(&al, &be).unwrap().matrix();
        let ns = nablas_d7_06();
        let t = CocycleTuple::new(vec![combine(&ns, &al), combine(&ns, &be)]).unwrap();
        let out = act(&a, &phi.into(), &t).unwrap();
        let target = CocycleTuple::new(vec![ns[0].clone(), ns[3].clone()]).unwrap();
        assert!(same_h2_span(&a, &out, &target).unwrap());
    }
}
