//! Exact arithmetic over ℚ and ℚ(t).
//!
//! Everything in the crate bottoms out here: rationals are arbitrary
//! precision, matrices are dense, and the field of rational functions in one
//! variable `t` is kept in a canonical reduced form so that equality is
//! coefficient-wise.

mod matrix;
mod poly;
mod ratfunc;
mod subspace;

pub use matrix::{rref, Matrix, MatrixQ, MatrixT, Rref};
pub use poly::TPoly;
pub use ratfunc::TRatFunc;
pub use subspace::{subspace_ops, Subspace, SubspaceOps};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`.
///
/// Panics if `den == 0`.
pub fn qr(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Field operations needed by the generic linear algebra in [`Matrix`].
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Panics on division by zero; callers pivot on nonzero entries only.
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Formats a vector of rationals in basis notation, e.g. `e4 - 2*e7`.
pub fn fmt_vector(v: &[Rational]) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if Zero::is_zero(c) {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !One::is_one(&mag) {
            out.push_str(&fmt_rational(&mag));
            out.push('*');
        }
        out.push_str(&format!("e{}", k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Serializes a coordinate vector in `e_k` notation.
pub(crate) fn ser_vector<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_vector(v))
}
