use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The element `r + s√2` of Z[√2].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadIntSqrt2 {
    pub r: BigInt,
    pub s: BigInt,
}

impl QuadIntSqrt2 {
    pub fn new(r: impl Into<BigInt>, s: impl Into<BigInt>) -> Self {
        QuadIntSqrt2 {
            r: r.into(),
            s: s.into(),
        }
    }

    pub fn one() -> Self {
        Self::new(BigInt::one(), BigInt::zero())
    }

    /// The fundamental unit `1 + √2`.
    pub fn unit() -> Self {
        Self::new(1, 1)
    }

    /// `r² − 2s²`.
    pub fn norm(&self) -> BigInt {
        &self.r * &self.r - 2 * &self.s * &self.s
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Mul for &QuadIntSqrt2 {
    type Output = QuadIntSqrt2;
    fn mul(self, o: &QuadIntSqrt2) -> QuadIntSqrt2 {
        QuadIntSqrt2 {
            r: &self.r * &o.r + 2 * &self.s * &o.s,
            s: &self.r * &o.s + &self.s * &o.r,
        }
    }
}

impl Mul for QuadIntSqrt2 {
    type Output = QuadIntSqrt2;
    fn mul(self, o: QuadIntSqrt2) -> QuadIntSqrt2 {
        &self * &o
    }
}

impl fmt::Display for QuadIntSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}√2", self.r, self.s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn unit_powers() {
        let u = QuadIntSqrt2::unit();
        assert_eq!(u.pow(2), QuadIntSqrt2::new(3, 2));
        assert_eq!(u.pow(3), QuadIntSqrt2::new(7, 5));
        assert_eq!(u.pow(0), QuadIntSqrt2::one());
    }

    #[test]
    fn cube_of_unit_times_seed() {
        // (7 + 5√2)(a + b√2) = (7a + 10b) + (5a + 7b)√2
        for (a, b) in [(1i64, 2i64), (-3, 7), (4, 0)] {
            let p = &QuadIntSqrt2::unit().pow(3) * &QuadIntSqrt2::new(a, b);
            assert_eq!(p, QuadIntSqrt2::new(7 * a + 10 * b, 5 * a + 7 * b));
            assert_eq!(p.norm(), BigInt::from(2 * b * b - a * a));
        }
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(
            r1 in -1_000_000i64..=1_000_000, s1 in -1_000_000i64..=1_000_000,
            r2 in -1_000_000i64..=1_000_000, s2 in -1_000_000i64..=1_000_000,
        ) {
            let u = QuadIntSqrt2::new(r1, s1);
            let v = QuadIntSqrt2::new(r2, s2);
            prop_assert_eq!((&u * &v).norm(), u.norm() * v.norm());
        }
    }
}
