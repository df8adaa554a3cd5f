//! Exact scalars, Z[√2], univariate polynomials and rational functions over Q.

mod poly;
mod quadint;
mod ratfunc;
mod zpoly;

use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use poly::Poly;
pub use quadint::QuadIntSqrt2;
pub use ratfunc::RatFunc;

/// Arbitrary-precision fraction, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Name tag of the indeterminate of a [`Poly`] or [`RatFunc`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub char);

impl Var {
    pub const T: Var = Var('T');
    pub const Q: Var = Var('Q');
    pub const S: Var = Var('S');
    pub const LOWER_T: Var = Var('t');
    pub const LOWER_Q: Var = Var('q');
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The integer `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d` (panics if `d == 0`).
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Parses `"n"` or `"n/d"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => BigInt::from_str(s).ok().map(Rational::from_integer),
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
    }
}

/// Exact square root of a non-negative integer, if it is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Ring operations shared by [`Rational`], [`Poly`] and [`RatFunc`], so that
/// polynomial forms can be evaluated uniformly on any of them.
pub trait RingElem: Clone + PartialEq + fmt::Debug {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn plus_scalar(&self, c: &Rational) -> Self;
    fn is_zero_elem(&self) -> bool;
}

impl RingElem for Rational {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn plus_scalar(&self, c: &Rational) -> Self {
        self + c
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

impl RingElem for Poly {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn plus_scalar(&self, c: &Rational) -> Self {
        self + &Poly::constant(self.var(), c.clone())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

impl RingElem for RatFunc {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn plus_scalar(&self, c: &Rational) -> Self {
        self + &RatFunc::constant(self.var(), c.clone())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        assert_eq!(parse_rational("-459/49"), Some(frac(-459, 49)));
        assert_eq!(parse_rational(" 12 "), Some(rat(12)));
        assert_eq!(parse_rational("4/-6"), Some(frac(-2, 3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(alloc::format!("{}", frac(6, -4)), "-3/2");
    }

    #[test]
    fn sqrt_detects_squares() {
        assert_eq!(exact_sqrt(&BigInt::from(144)), Some(BigInt::from(12)));
        assert_eq!(exact_sqrt(&BigInt::from(145)), None);
        assert_eq!(exact_sqrt(&BigInt::from(-4)), None);
        let big = BigInt::from(10).pow(40u32) + 7;
        assert_eq!(exact_sqrt(&(&big * &big)), Some(big));
    }
}
