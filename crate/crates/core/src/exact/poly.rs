//! Laurent polynomials in `t` with rational coefficients.

use super::{fmt_rational, Rational};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A Laurent polynomial `Σ c_k t^k`, exponents possibly negative.
///
/// Only nonzero coefficients are stored; the empty map is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    coeffs: BTreeMap<i32, Rational>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `c·t^exp`.
    pub fn monomial(c: Rational, exp: i32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        TPoly { coeffs }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, Rational)>) -> Self {
        let mut p = TPoly::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    fn add_term(&mut self, exp: i32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Lowest exponent with a nonzero coefficient (the t-adic order).
    pub fn order(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn lowest_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        TPoly { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return TPoly::zero();
        }
        TPoly { coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * s)).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        TPoly { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = TPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }

    /// Evaluates at `t = x`. Panics at `x = 0` when negative exponents are present.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.coeffs {
            let p = if *e >= 0 {
                num_traits::pow(x.clone(), *e as usize)
            } else {
                assert!(!x.is_zero(), "evaluating a Laurent polynomial at t = 0");
                num_traits::pow(x.recip(), (-*e) as usize)
            };
            acc += c * p;
        }
        acc
    }

    /// Division with remainder for ordinary polynomials (all exponents ≥ 0).
    /// Panics if `divisor` is zero.
    pub(crate) fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading_coeff().unwrap().clone();
        let mut quot = TPoly::zero();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = rem.leading_coeff().unwrap() / &lc;
            let term = TPoly::monomial(f, rd - dd);
            rem = rem.sub(&term.mul(divisor));
            quot = quot.add(&term);
        }
        (quot, rem)
    }

    /// Monic gcd of two ordinary polynomials.
    pub(crate) fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading_coeff() {
            Some(lc) => {
                let inv = lc.recip();
                a.scale(&inv)
            }
            None => a,
        }
    }
}

impl fmt::Display for TPoly {
    /// Writes terms in increasing degree, e.g. `1 - t + 2*t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let var = match *e {
                0 => String::new(),
                1 => "t".to_string(),
                k => format!("t^{k}"),
            };
            if var.is_empty() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{}*{var}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl super::Scalar for TPoly {
    fn zero() -> Self {
        TPoly::zero()
    }
    fn one() -> Self {
        TPoly::one()
    }
    fn is_zero(&self) -> bool {
        TPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        TPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        TPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        TPoly::mul(self, rhs)
    }
    /// Exact division only: panics unless `rhs` is a monomial.
    fn div(&self, rhs: &Self) -> Self {
        assert_eq!(rhs.coeffs.len(), 1, "TPoly division by a non-monomial");
        let (e, c) = rhs.coeffs.iter().next().unwrap();
        self.shift(-e).scale(&c.recip())
    }
    fn neg(&self) -> Self {
        TPoly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qr};

    fn p(terms: &[(i32, i64)]) -> TPoly {
        TPoly::from_terms(terms.iter().map(|&(e, c)| (e, q(c))))
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let a = p(&[(1, 2), (0, 1)]);
        let b = p(&[(1, -2)]);
        let s = a.add(&b);
        assert_eq!(s, p(&[(0, 1)]));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn laurent_exponents_multiply() {
        let a = p(&[(-1, 1)]);
        assert_eq!(a.mul(&TPoly::t()), TPoly::one());
        assert_eq!(a.order(), Some(-1));
    }

    #[test]
    fn division_and_gcd() {
        // (t+1)(t-2) and (t+1)(t+3)
        let a = p(&[(2, 1), (1, -1), (0, -2)]);
        let b = p(&[(2, 1), (1, 4), (0, 3)]);
        assert_eq!(a.gcd(&b), p(&[(1, 1), (0, 1)]));
        let (qq, r) = a.div_rem(&p(&[(1, 1), (0, 1)]));
        assert!(r.is_zero());
        assert_eq!(qq, p(&[(1, 1), (0, -2)]));
    }

    #[test]
    fn display_and_eval() {
        let a = TPoly::from_terms([(0, q(1)), (1, q(-1)), (3, qr(1, 2))]);
        assert_eq!(a.to_string(), "1 - t + 1/2*t^3");
        assert_eq!(a.eval(&q(2)), q(3));
    }
}
