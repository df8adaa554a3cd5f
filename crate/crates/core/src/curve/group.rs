use alloc::vec::Vec;

use num_traits::Zero;

use crate::arith::{frac, rat, RatFunc, Rational, Var};
use crate::error::{Error, Result};

use super::models::Origin;

/// A point of Y² = X³ + AX + B over Q(var).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: RatFunc, y: RatFunc },
}

impl CurvePoint {
    pub fn new(x: RatFunc, y: RatFunc) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn coords(&self) -> Option<(&RatFunc, &RatFunc)> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, y } => Some((x, y)),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x.clone(),
                y: -y,
            },
        }
    }

    /// The point specialized at var = t; `None` for the point at infinity.
    pub fn eval(&self, t: &Rational) -> Result<Option<(Rational, Rational)>> {
        match self {
            CurvePoint::Infinity => Ok(None),
            CurvePoint::Affine { x, y } => Ok(Some((x.eval(t)?, y.eval(t)?))),
        }
    }
}

/// Y² = X³ + A·X + B with A, B ∈ Q(var).
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassCurve {
    var: Var,
    a_coef: RatFunc,
    b_coef: RatFunc,
    origin: Option<Origin>,
}

impl WeierstrassCurve {
    /// Fails if the discriminant vanishes or A, B live in different variables.
    pub fn new(var: Var, a_coef: RatFunc, b_coef: RatFunc) -> Result<Self> {
        let c = Self::new_unchecked(var, a_coef, b_coef);
        if c.is_singular() {
            return Err(Error::InvalidParameter("singular curve".into()));
        }
        Ok(c)
    }

    /// Skips the discriminant test; callers validate before handing the curve out.
    pub(crate) fn new_unchecked(var: Var, a_coef: RatFunc, b_coef: RatFunc) -> Self {
        WeierstrassCurve {
            var,
            a_coef: a_coef.with_var(var),
            b_coef: b_coef.with_var(var),
            origin: None,
        }
    }

    /// A nonzero value of 4A³ + 27B² at a sample point settles the question
    /// without forming the discriminant symbolically.
    pub fn is_singular(&self) -> bool {
        for t0 in [frac(7, 3), frac(-5, 2), rat(11)] {
            if let Ok((a, b)) = self.eval(&t0) {
                if !(rat(4) * &a * &a * &a + rat(27) * &b * &b).is_zero() {
                    return false;
                }
            }
        }
        self.discriminant().is_zero()
    }

    pub(crate) fn with_origin(mut self, origin: Origin) -> Self {
        self.origin = Some(origin);
        self
    }

    pub fn var(&self) -> Var {
        self.var
    }
    pub fn a_coef(&self) -> &RatFunc {
        &self.a_coef
    }
    pub fn b_coef(&self) -> &RatFunc {
        &self.b_coef
    }
    /// Which model and (a, b) the curve was built for, and how.
    pub fn origin(&self) -> Option<&Origin> {
        self.origin.as_ref()
    }

    /// −16(4A³ + 27B²).
    pub fn discriminant(&self) -> RatFunc {
        let a3 = self.a_coef.pow(3).scale(&rat(4));
        let b2 = self.b_coef.pow(2).scale(&rat(27));
        (&a3 + &b2).scale(&rat(-16))
    }

    /// Y² − X³ − AX − B at the point (zero iff on the curve).
    pub fn residual(&self, p: &CurvePoint) -> RatFunc {
        match p.coords() {
            None => RatFunc::zero(self.var),
            Some((x, y)) => {
                let rhs = &(&x.pow(3) + &(&self.a_coef * x)) + &self.b_coef;
                &y.pow(2) - &rhs
            }
        }
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        self.residual(p).is_zero()
    }

    fn chord(&self, x1: &RatFunc, y1: &RatFunc, x2: &RatFunc, slope: RatFunc) -> CurvePoint {
        let x3 = &(&slope.pow(2) - x1) - x2;
        let y3 = &(&slope * &(x1 - &x3)) - y1;
        CurvePoint::new(x3, y3)
    }

    pub fn double(&self, p: &CurvePoint) -> Result<CurvePoint> {
        let Some((x, y)) = p.coords() else {
            return Ok(CurvePoint::Infinity);
        };
        if y.is_zero() {
            return Ok(CurvePoint::Infinity);
        }
        let num = &x.pow(2).scale(&rat(3)) + &self.a_coef;
        let slope = num.checked_div(&y.scale(&rat(2)))?;
        Ok(self.chord(x, y, x, slope))
    }

    pub fn add(&self, p: &CurvePoint, r: &CurvePoint) -> Result<CurvePoint> {
        let (Some((x1, y1)), Some((x2, y2))) = (p.coords(), r.coords()) else {
            return Ok(if p.is_infinity() {
                r.clone()
            } else {
                p.clone()
            });
        };
        if x1 == x2 {
            return if (y1 + y2).is_zero() {
                Ok(CurvePoint::Infinity)
            } else {
                self.double(p)
            };
        }
        let slope = (y2 - y1).checked_div(&(x2 - x1))?;
        Ok(self.chord(x1, y1, x2, slope))
    }

    pub fn sub(&self, p: &CurvePoint, r: &CurvePoint) -> Result<CurvePoint> {
        self.add(p, &r.neg())
    }

    /// [m]P by double-and-add; m = 0 gives the point at infinity.
    pub fn mul(&self, p: &CurvePoint, m: u32) -> Result<CurvePoint> {
        let mut acc = CurvePoint::Infinity;
        for bit in (0..u32::BITS - m.leading_zeros()).rev() {
            acc = self.double(&acc)?;
            if m >> bit & 1 == 1 {
                acc = self.add(&acc, p)?;
            }
        }
        Ok(acc)
    }

    /// [1]P, …, [n]P by repeated addition.
    pub fn multiples(&self, p: &CurvePoint, n: u32) -> Result<Vec<CurvePoint>> {
        let mut out: Vec<CurvePoint> = Vec::with_capacity(n as usize);
        for i in 0..n {
            let next = match out.last() {
                None => p.clone(),
                Some(prev) if i == 1 => self.double(prev)?,
                Some(prev) => self.add(prev, p)?,
            };
            out.push(next);
        }
        Ok(out)
    }

    /// The curve specialized at var = t, as (A(t), B(t)).
    pub fn eval(&self, t: &Rational) -> Result<(Rational, Rational)> {
        Ok((self.a_coef.eval(t)?, self.b_coef.eval(t)?))
    }
}

pub fn ec_add(c: &WeierstrassCurve, p: &CurvePoint, r: &CurvePoint) -> Result<CurvePoint> {
    c.add(p, r)
}

pub fn ec_double(c: &WeierstrassCurve, p: &CurvePoint) -> Result<CurvePoint> {
    c.double(p)
}

pub fn ec_mul(c: &WeierstrassCurve, p: &CurvePoint, m: u32) -> Result<CurvePoint> {
    c.mul(p, m)
}
