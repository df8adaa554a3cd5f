use alloc::borrow::Cow;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Poly, Rational, Var};
use crate::error::{Error, Result};

/// Element of Q(var): a quotient of polynomials kept coprime with a monic
/// denominator, so two equal values always have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds and reduces `num/den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // surfaces a variable mismatch
        num.checked_add(&den)?;
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        let var = if num.is_constant() {
            den.var()
        } else {
            num.var()
        };
        if num.is_zero() {
            return Self::zero(var);
        }
        let g = num.gcd(&den).expect("operands share a variable");
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let lc = den.leading().unwrap().clone();
        let (num, den) = if lc.is_one() {
            (num, den)
        } else {
            let inv = lc.recip();
            (num.scale(&inv), den.scale(&inv))
        };
        RatFunc {
            num: num.with_var(var),
            den: den.with_var(var),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        let var = p.var();
        RatFunc {
            num: p,
            den: Poly::one(var),
        }
    }

    pub fn zero(var: Var) -> Self {
        Self::from_poly(Poly::zero(var))
    }

    pub fn one(var: Var) -> Self {
        Self::from_poly(Poly::one(var))
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::from_poly(Poly::constant(var, c))
    }

    /// The indeterminate as an element of Q(var).
    pub fn x(var: Var) -> Self {
        Self::from_poly(Poly::x(var))
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn with_var(self, var: Var) -> Self {
        RatFunc {
            num: self.num.with_var(var),
            den: self.den.with_var(var),
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value if this is a constant function.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    fn is_const(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Both operands under a common variable tag; constants adopt the other tag.
    fn aligned<'a>(&'a self, other: &'a RatFunc) -> Result<(Cow<'a, RatFunc>, Cow<'a, RatFunc>)> {
        let (v1, v2) = (self.var(), other.var());
        if v1 == v2 {
            Ok((Cow::Borrowed(self), Cow::Borrowed(other)))
        } else if other.is_const() {
            Ok((Cow::Borrowed(self), Cow::Owned(other.clone().with_var(v1))))
        } else if self.is_const() {
            Ok((Cow::Owned(self.clone().with_var(v2)), Cow::Borrowed(other)))
        } else {
            Err(Error::VariableMismatch {
                left: v1,
                right: v2,
            })
        }
    }

    pub fn checked_add(&self, other: &RatFunc) -> Result<RatFunc> {
        let (a, b) = self.aligned(other)?;
        let (a, b) = (a.as_ref(), b.as_ref());
        let var = a.var();
        if a.is_zero() {
            return Ok(b.clone());
        }
        if b.is_zero() {
            return Ok(a.clone());
        }
        if a.den == b.den {
            return Ok(Self::reduce(&a.num + &b.num, a.den.clone()));
        }
        let g = a.den.gcd(&b.den)?;
        if g.is_one() {
            let num = &(&a.num * &b.den) + &(&b.num * &a.den);
            if num.is_zero() {
                return Ok(Self::zero(var));
            }
            let den = &a.den * &b.den;
            return Ok(RatFunc { num, den });
        }
        let d1 = a.den.div_exact(&g);
        let d2 = b.den.div_exact(&g);
        let t = &(&a.num * &d2) + &(&b.num * &d1);
        if t.is_zero() {
            return Ok(Self::zero(var));
        }
        let h = t.gcd(&g)?;
        let (t, g) = if h.is_one() {
            (t, g)
        } else {
            (t.div_exact(&h), g.div_exact(&h))
        };
        let den = &(&d1 * &d2) * &g;
        Ok(RatFunc { num: t, den })
    }

    pub fn checked_sub(&self, other: &RatFunc) -> Result<RatFunc> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &RatFunc) -> Result<RatFunc> {
        let (a, b) = self.aligned(other)?;
        let (a, b) = (a.as_ref(), b.as_ref());
        if a.is_zero() || b.is_zero() {
            return Ok(Self::zero(a.var()));
        }
        let g1 = a.num.gcd(&b.den)?;
        let g2 = b.num.gcd(&a.den)?;
        let cancel = |p: &Poly, g: &Poly| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g)
            }
        };
        let num = &cancel(&a.num, &g1) * &cancel(&b.num, &g2);
        let den = &cancel(&a.den, &g2) * &cancel(&b.den, &g1);
        Ok(RatFunc { num, den })
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc> {
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return Self::zero(self.var());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        // numerator and denominator stay coprime under powers
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Exact value at `x`; fails at a pole.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole {
                var: self.var(),
                point: x.clone(),
            });
        }
        Ok(self.num.eval(x) / d)
    }

    /// `self(inner)`, in the variable of `inner`.
    pub fn compose(&self, inner: &RatFunc) -> Result<RatFunc> {
        let var = inner.var();
        let (n, dn) = homogenize(&self.num, inner);
        let (d, dd) = homogenize(&self.den, inner);
        // self(P/R) = n / R^dn  ÷  d / R^dd
        let r = &inner.den;
        let (n, d) = if dn >= dd {
            (n, &d * &r.pow((dn - dd) as u32))
        } else {
            (&n * &r.pow((dd - dn) as u32), d)
        };
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(n.with_var(var), d.with_var(var)))
    }

    pub fn compose_poly(&self, inner: &Poly) -> Result<RatFunc> {
        self.compose(&Self::from_poly(inner.clone()))
    }
}

/// `R^deg(p) · p(P/R)` for `inner = P/R`, together with `deg p`.
fn homogenize(p: &Poly, inner: &RatFunc) -> (Poly, usize) {
    let var = inner.var();
    let Some(d) = p.degree() else {
        return (Poly::zero(var), 0);
    };
    let num = &inner.num;
    let den = &inner.den;
    // Horner in homogeneous form: acc = acc·P + c_i·R^(d-i)
    let mut acc = Poly::zero(var);
    let mut den_pows = alloc::vec::Vec::with_capacity(d + 1);
    den_pows.push(Poly::one(var));
    for i in 1..=d {
        let next = &den_pows[i - 1] * den;
        den_pows.push(next);
    }
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        acc = &(&acc * num) + &den_pows[d - i].scale(c);
    }
    (acc, d)
}

fn expect_ok<T>(r: Result<T>) -> T {
    match r {
        Ok(v) => v,
        Err(e) => panic!("{e}"),
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        expect_ok(self.checked_add(rhs))
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        expect_ok(self.checked_sub(rhs))
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        expect_ok(self.checked_mul(rhs))
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
