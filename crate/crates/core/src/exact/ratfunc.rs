use super::{Rational, TPoly};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;

/// An element of ℚ(t) in canonical form.
///
/// Canonical form: numerator and denominator are ordinary polynomials with
/// no common factor, and the lowest-degree coefficient of the denominator is
/// 1. Two values are equal iff their stored polynomials are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TRatFunc {
    num: TPoly,
    den: TPoly,
}

impl TRatFunc {
    pub fn new(num: TPoly, den: TPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: TPoly, den: TPoly) -> Self {
        let Some(a) = num.order() else {
            return Self::zero();
        };
        let b = den.order().expect("nonzero denominator");
        let p = num.shift(-a);
        let qd = den.shift(-b);
        let g = p.gcd(&qd);
        let (p, _) = p.div_rem(&g);
        let (qd, _) = qd.div_rem(&g);
        let c = qd.lowest_coeff().expect("nonzero").recip();
        let (p, qd) = (p.scale(&c), qd.scale(&c));
        let d = a - b;
        if d >= 0 {
            TRatFunc { num: p.shift(d), den: qd }
        } else {
            TRatFunc { num: p, den: qd.shift(-d) }
        }
    }

    pub fn zero() -> Self {
        TRatFunc { num: TPoly::zero(), den: TPoly::one() }
    }

    pub fn one() -> Self {
        TRatFunc { num: TPoly::one(), den: TPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(TPoly::constant(c))
    }

    pub fn from_poly(p: TPoly) -> Self {
        Self::canonical(p, TPoly::one())
    }

    pub fn num(&self) -> &TPoly {
        &self.num
    }

    pub fn den(&self) -> &TPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// t-adic valuation: order of `t` in the numerator minus order in the
    /// denominator. `None` for zero.
    pub fn order(&self) -> Option<i32> {
        Some(self.num.order()? - self.den.order()?)
    }

    /// Value as `t → 0`.
    ///
    /// Fails with [`Error::PoleAtZero`] when the valuation is negative.
    pub fn limit_at_zero(&self) -> Result<Rational> {
        let Some(ord) = self.order() else {
            return Ok(Rational::zero());
        };
        match ord {
            o if o > 0 => Ok(Rational::zero()),
            0 => Ok(self.num.lowest_coeff().unwrap() / self.den.lowest_coeff().unwrap()),
            o => Err(Error::PoleAtZero { order: o }),
        }
    }

    /// Evaluates at `t = x`; `None` when the denominator vanishes there.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// The constant value if this function does not depend on `t`.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.den != TPoly::one() {
            return None;
        }
        match self.num.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.num.coeff(0)),
            _ => None,
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl From<TPoly> for TRatFunc {
    fn from(p: TPoly) -> Self {
        TRatFunc::from_poly(p)
    }
}

impl fmt::Display for TRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == TPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl super::Scalar for TRatFunc {
    fn zero() -> Self {
        TRatFunc::zero()
    }
    fn one() -> Self {
        TRatFunc::one()
    }
    fn is_zero(&self) -> bool {
        TRatFunc::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::canonical(self.num.add(&rhs.num), self.den.clone());
        }
        Self::canonical(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        super::Scalar::add(self, &super::Scalar::neg(rhs))
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::canonical(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
    fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero in Q(t)");
        Self::canonical(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }
    fn neg(&self) -> Self {
        TRatFunc { num: self.num.neg(), den: self.den.clone() }
    }
}

impl TRatFunc {
    /// True when the value is the constant one.
    pub fn is_one(&self) -> bool {
        self.num == self.den && self.den.coeff(0).is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, Scalar};

    fn p(terms: &[(i32, i64)]) -> TPoly {
        TPoly::from_terms(terms.iter().map(|&(e, c)| (e, q(c))))
    }

    fn rf(n: &[(i32, i64)], d: &[(i32, i64)]) -> TRatFunc {
        TRatFunc::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn limits_at_zero() {
        // (t² + 3t)/t → 3
        assert_eq!(rf(&[(2, 1), (1, 3)], &[(1, 1)]).limit_at_zero().unwrap(), q(3));
        // t³/t → 0
        assert_eq!(rf(&[(3, 1)], &[(1, 1)]).limit_at_zero().unwrap(), q(0));
        // t/t² → pole
        assert!(matches!(
            rf(&[(1, 1)], &[(2, 1)]).limit_at_zero(),
            Err(Error::PoleAtZero { order: -1 })
        ));
    }

    #[test]
    fn canonical_form_is_syntactic() {
        // (t²-1)/(2t-2) = (t+1)/2
        let a = rf(&[(2, 1), (0, -1)], &[(1, 2), (0, -2)]);
        let b = rf(&[(1, 1), (0, 1)], &[(0, 2)]);
        assert_eq!(a, b);
        assert_eq!(a.den(), &TPoly::one());
        // negative exponents are absorbed: t^-1 = 1/t
        let c = TRatFunc::from_poly(p(&[(-1, 1)]));
        assert_eq!(c.num(), &TPoly::one());
        assert_eq!(c.den(), &TPoly::t());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(TRatFunc::new(TPoly::one(), TPoly::zero()), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn field_identities() {
        let a = rf(&[(1, 1), (0, 1)], &[(2, 1), (0, 3)]);
        let b = rf(&[(3, 2)], &[(1, 1), (0, -5)]);
        let s = Scalar::add(&a, &b);
        assert_eq!(Scalar::sub(&s, &b), a);
        let m = Scalar::mul(&a, &b);
        assert_eq!(Scalar::div(&m, &b), a);
        assert!(Scalar::mul(&a, &a.recip().unwrap()).is_one());
    }
}
