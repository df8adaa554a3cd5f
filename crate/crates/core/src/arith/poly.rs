use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{zpoly, Rational, Var};
use crate::error::{Error, Result};

/// Dense univariate polynomial over Q, coefficients in ascending degree.
///
/// The coefficient vector never ends in a zero, so the zero polynomial has no
/// coefficients and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    var: Var,
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero(var: Var) -> Self {
        Poly {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rational::one())
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::from_coeffs(var, vec![c])
    }

    /// The indeterminate itself.
    pub fn x(var: Var) -> Self {
        Self::monomial(var, Rational::one(), 1)
    }

    pub fn monomial(var: Var, c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(var, coeffs)
    }

    pub fn from_coeffs(var: Var, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    /// Integer coefficients, ascending.
    pub fn from_i64(var: Var, coeffs: &[i64]) -> Self {
        Self::from_coeffs(var, coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    pub fn from_bigints(var: Var, coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(
            var,
            coeffs.iter().cloned().map(Rational::from_integer).collect(),
        )
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Variable of a binary operation; constants adopt the other operand's tag.
    fn joint_var(&self, other: &Poly) -> Result<Var> {
        if self.var == other.var || other.is_constant() {
            Ok(self.var)
        } else if self.is_constant() {
            Ok(other.var)
        } else {
            Err(Error::VariableMismatch {
                left: self.var,
                right: other.var,
            })
        }
    }

    /// `(content, primitive integer coefficients)` with positive leading coefficient.
    pub(crate) fn int_parts(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        let mut g = zpoly::content(&ints);
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.into_iter().map(|c| c / &g).collect();
        (Rational::new(g, l), prim)
    }

    pub(crate) fn from_int_parts(var: Var, content: &Rational, prim: &[BigInt]) -> Self {
        if content.is_one() {
            return Self::from_bigints(var, prim);
        }
        let coeffs = prim
            .iter()
            .map(|c| Rational::new(content.numer() * c, content.denom().clone()))
            .collect();
        Self::from_coeffs(var, coeffs)
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        let var = self.joint_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(x), Some(y)) => x + y,
                (Some(x), None) | (None, Some(x)) => x.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Self::from_coeffs(var, coeffs))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        let var = self.joint_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(var));
        }
        if self.is_constant() {
            return Ok(other.scale(&self.coeffs[0]).with_var(var));
        }
        if other.is_constant() {
            return Ok(self.scale(&other.coeffs[0]).with_var(var));
        }
        let (c1, p1) = self.int_parts();
        let (c2, p2) = other.int_parts();
        Ok(Self::from_int_parts(var, &(c1 * c2), &zpoly::mul(&p1, &p2)))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.var);
        }
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.var);
        let mut base = self.clone();
        let mut e = e;
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

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let var = self.joint_var(d)?;
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = d.coeffs[dd].recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(var), Poly::from_coeffs(var, r)));
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Poly::from_coeffs(var, q), Poly::from_coeffs(var, r)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        let var = self.joint_var(other)?;
        let g = zpoly::gcd(&self.int_parts().1, &other.int_parts().1);
        Ok(Poly::from_bigints(var, &g).monic())
    }

    /// Quotient by a known divisor (panics if `d` does not divide `self`).
    pub(crate) fn div_exact(&self, d: &Poly) -> Poly {
        if d.is_constant() {
            return self.scale(&d.coeffs[0].recip());
        }
        let (c1, p1) = self.int_parts();
        let (c2, p2) = d.int_parts();
        let q = zpoly::exact_div(&p1, &p2).expect("inexact polynomial division");
        Self::from_int_parts(self.var, &(c1 / c2), &q)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `self(inner)`, in the variable of `inner`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero(inner.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(inner.var, c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        Poly::from_coeffs(self.var, coeffs)
    }
}

fn expect_ok<T>(r: Result<T>) -> T {
    match r {
        Ok(v) => v,
        Err(e) => panic!("{e}"),
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        expect_ok(self.checked_add(rhs))
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        expect_ok(self.checked_sub(rhs))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        expect_ok(self.checked_mul(rhs))
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Descending-degree rendering such as `400*t^2 + 120*t + 8`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let bare = abs.is_one() && i > 0;
            if !bare {
                if abs.denom().is_one() {
                    write!(f, "{abs}")?;
                } else {
                    write!(f, "({abs})")?;
                }
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{}", self.var, i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{frac, rat};
    use alloc::format;
    use proptest::prelude::*;

    const T: Var = Var::T;

    #[test]
    fn gcd_of_common_root() {
        let p = Poly::from_i64(T, &[-1, 0, 1]);
        let q = Poly::from_i64(T, &[1, 2, 1]);
        assert_eq!(p.gcd(&q).unwrap(), Poly::from_i64(T, &[1, 1]));
    }

    #[test]
    fn seed_family_z_at_zero() {
        let z = Poly::from_i64(Var::LOWER_T, &[8, 120, 400]);
        assert_eq!(z.eval(&rat(0)), rat(8));
        assert_eq!(format!("{z}"), "400*t^2 + 120*t + 8");
    }

    #[test]
    fn variable_mismatch_is_reported() {
        let p = Poly::x(Var::T);
        let q = Poly::x(Var::Q);
        assert_eq!(
            p.checked_add(&q),
            Err(Error::VariableMismatch {
                left: Var::T,
                right: Var::Q
            })
        );
        assert!(p.divrem(&q).is_err());
        // constants combine with anything
        assert_eq!(p.checked_add(&Poly::one(Var::Q)).unwrap().var(), Var::T);
    }

    #[test]
    fn divrem_by_zero_fails() {
        assert_eq!(
            Poly::x(T).divrem(&Poly::zero(T)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn remainder_of_doubled_point_numerator() {
        // X([2]W) numerator at a=1, b=3 divided by T^2
        let num = Poly::from_i64(T, &[12 * 27, 12 * 72, 12 * 98, 12 * 48, 12 * 9]);
        let (_, r) = num.divrem(&Poly::monomial(T, rat(1), 2)).unwrap();
        assert_eq!(r, Poly::from_i64(T, &[324, 864]));
    }

    #[test]
    fn compose_and_display() {
        let p = Poly::from_coeffs(T, alloc::vec![frac(1, 2), rat(0), rat(-3)]);
        assert_eq!(format!("{p}"), "-3*T^2 + (1/2)");
        let inner = Poly::from_i64(Var::Q, &[1, 1]);
        let c = p.compose(&inner);
        assert_eq!(c.var(), Var::Q);
        assert_eq!(c.eval(&rat(2)), p.eval(&rat(3)));
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec(-100i64..=100, 0..=max_deg + 1).prop_map(|c| Poly::from_i64(T, &c))
    }

    proptest! {
        #[test]
        fn divrem_reconstructs(p in arb_poly(8), d in arb_poly(8)) {
            prop_assume!(!d.is_zero());
            let (q, r) = p.divrem(&d).unwrap();
            prop_assert_eq!(&(&q * &d) + &r, p);
            prop_assert!(r.degree().is_none_or(|rd| rd < d.degree().unwrap()));
        }

        #[test]
        fn gcd_divides_both(p in arb_poly(5), q in arb_poly(5), s in arb_poly(3)) {
            let a = &p * &s;
            let b = &q * &s;
            let g = a.gcd(&b).unwrap();
            if !g.is_zero() {
                prop_assert!(a.divrem(&g).unwrap().1.is_zero());
                prop_assert!(b.divrem(&g).unwrap().1.is_zero());
                prop_assert!(g.leading().unwrap().is_one());
                if !s.is_zero() {
                    prop_assert!(g.divrem(&s.monic()).unwrap().1.is_zero());
                }
            }
        }

        #[test]
        fn eval_is_a_ring_map(p in arb_poly(6), q in arb_poly(6), x in -50i64..50) {
            let x = rat(x);
            prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
            prop_assert_eq!((&p - &q).eval(&x), p.eval(&x) - q.eval(&x));
        }
    }
}
