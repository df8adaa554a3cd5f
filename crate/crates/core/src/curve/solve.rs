//! Rational-function solutions of the four cubic equations and their
//! combination into a one-parameter family for the full system.

use alloc::vec::Vec;

use crate::arith::{Poly, RatFunc, Rational, RingElem, Var};
use crate::error::{Error, Result};
use crate::forms::CubicForm;
use crate::verify::SolutionTuple;

use super::group::{CurvePoint, WeierstrassCurve};
use super::maps::{g_of_t, phi_inverse, Phi3};
use super::models::{canonical_point, check_params, make_curve, pz, CurveTag};

/// Which cubic equation a pair solves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EquationTag {
    /// g(T) = g(x) + g(y)
    Sum,
    /// g(T) = g(u) − g(v)
    Difference,
    /// g(T) = g(p)·Q, Q = g(q); the pair is (T, p) in Q(Q)
    Product,
    /// g(T) = g(r)/g(s)
    Quotient,
}

impl EquationTag {
    pub fn curve(self) -> CurveTag {
        match self {
            EquationTag::Sum => CurveTag::E1,
            EquationTag::Difference => CurveTag::E2,
            EquationTag::Product | EquationTag::Quotient => CurveTag::E3,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CubicSolutionPair {
    pub tag: EquationTag,
    pub first: RatFunc,
    pub second: RatFunc,
}

impl CubicSolutionPair {
    /// Left minus right side of the tagged equation, cleared of the quotient.
    pub fn residual(&self, a: i64, b: i64) -> Result<RatFunc> {
        let form = CubicForm::new(a, b)?;
        let g = |x: &RatFunc| form.eval(x);
        let (f, s) = (&self.first, &self.second);
        Ok(match self.tag {
            EquationTag::Sum => g(&RatFunc::x(Var::T)).minus(&g(f).plus(&g(s))),
            EquationTag::Difference => g(&RatFunc::x(Var::T)).minus(&g(f).minus(&g(s))),
            EquationTag::Product => g(f).minus(&g(s).times(&RatFunc::x(Var::Q))),
            EquationTag::Quotient => g(&RatFunc::x(Var::T)).times(&g(s)).minus(&g(f)),
        })
    }

    pub fn is_solution(&self, a: i64, b: i64) -> Result<bool> {
        Ok(self.residual(a, b)?.is_zero())
    }
}

fn at_m(m: u32) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::ExceptionalPoint { .. } | Error::DivisionByZero | Error::Pole { .. } => {
            Error::ExceptionalPoint { m }
        }
        other => other,
    }
}

/// Pulls [m]W (or W′, W″) back to a solution of the tagged equation.
/// m = 1 gives the seed pair.
pub fn solve_equation(tag: EquationTag, a: i64, b: i64, m: u32) -> Result<CubicSolutionPair> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let curve = make_curve(tag.curve(), a, b)?;
    let w = canonical_point(tag.curve(), a, b)?;
    let (first, second) = match tag {
        EquationTag::Sum | EquationTag::Difference => {
            let p = curve.mul(&w, m)?;
            phi_inverse(tag.curve(), a, b, &p).map_err(at_m(m))?
        }
        EquationTag::Product | EquationTag::Quotient => {
            let phi = Phi3::new(&curve, a, b)?;
            let prev = curve.mul(&w, m - 1)?;
            let (t, p) = phi.inverse_of_multiple(&prev).map_err(at_m(m))?;
            if tag == EquationTag::Product {
                (t, p)
            } else {
                let (ai, bi) = check_params(a, b)?;
                let g = g_of_t(ai, bi).numer().clone();
                (
                    t.compose_poly(&g).map_err(at_m(m))?,
                    p.compose_poly(&g).map_err(at_m(m))?,
                )
            }
        }
    };
    Ok(CubicSolutionPair { tag, first, second })
}

/// Remainder of the numerator of X([2]P) on division by its denominator.
pub fn doubling_remainder(c: &WeierstrassCurve, p: &CurvePoint) -> Result<Poly> {
    let d = c.double(p)?;
    let (x, _) = d.coords().ok_or(Error::ExceptionalPoint { m: 2 })?;
    Ok(x.numer().divrem(x.denom())?.1)
}

/// [1]P, …, [bound]P are finite and pairwise distinct, and the doubling
/// remainder of P is nonzero.
pub fn non_torsion_certificate(c: &WeierstrassCurve, p: &CurvePoint, bound: u32) -> Result<bool> {
    let ms = c.multiples(p, bound)?;
    for (i, pi) in ms.iter().enumerate() {
        if pi.is_infinity() || ms[..i].contains(pi) {
            return Ok(false);
        }
    }
    Ok(!doubling_remainder(c, p)?.is_zero())
}

/// A one-parameter solution of the full system for g(X) = X(X+a)(X+b), in the
/// free parameter q (with Q = g(q)).
#[derive(Clone, Debug, PartialEq)]
pub struct FullSolution {
    pub a: i64,
    pub b: i64,
    pub m: u32,
    /// (x, y) in T
    pub sum: CubicSolutionPair,
    /// (u, v) in T
    pub difference: CubicSolutionPair,
    /// (T, p) in Q
    pub product: CubicSolutionPair,
    /// (r, s) in T
    pub quotient: CubicSolutionPair,
}

pub const FULL_ENTRY_NAMES: [&str; 9] = ["z", "x", "y", "u", "v", "p", "q", "r", "s"];

impl FullSolution {
    /// Q(q) = q(q+a)(q+b).
    pub fn q_poly(&self) -> Poly {
        let (a, b) = (i128::from(self.a), i128::from(self.b));
        pz(Var::LOWER_Q, &[0, a * b, a + b, 1])
    }

    /// The nine entries as rational functions of q, in the order z, x, y, u, v, p, q, r, s.
    pub fn symbolic(&self) -> Result<[RatFunc; 9]> {
        let qp = self.q_poly();
        let z = self.product.first.compose_poly(&qp)?;
        let p = self.product.second.compose_poly(&qp)?;
        let comp = |f: &RatFunc| f.compose(&z);
        Ok([
            z.clone(),
            comp(&self.sum.first)?,
            comp(&self.sum.second)?,
            comp(&self.difference.first)?,
            comp(&self.difference.second)?,
            p,
            RatFunc::x(Var::LOWER_Q),
            comp(&self.quotient.first)?,
            comp(&self.quotient.second)?,
        ])
    }

    /// The exact rational tuple at q = `q`.
    pub fn specialize(&self, q: &Rational) -> Result<SolutionTuple<Rational>> {
        let pole = |_| Error::Pole {
            var: Var::LOWER_Q,
            point: q.clone(),
        };
        let big_q = self.q_poly().eval(q);
        let z = self.product.first.eval(&big_q).map_err(pole)?;
        let p = self.product.second.eval(&big_q).map_err(pole)?;
        let at = |f: &RatFunc| f.eval(&z).map_err(pole);
        let form = CubicForm::new(self.a, self.b)?;
        let entries = [
            z.clone(),
            at(&self.sum.first)?,
            at(&self.sum.second)?,
            at(&self.difference.first)?,
            at(&self.difference.second)?,
            p,
            q.clone(),
        ];
        let (r, s) = (at(&self.quotient.first)?, at(&self.quotient.second)?);
        Ok(SolutionTuple::new(form, entries).with_quotient(r, s))
    }

    pub fn pairs(&self) -> Vec<&CubicSolutionPair> {
        alloc::vec![&self.sum, &self.difference, &self.product, &self.quotient]
    }
}

/// Solutions of the four cubic equations from the m-th multiples, combined.
pub fn compose_full(a: i64, b: i64, m: u32) -> Result<FullSolution> {
    if m < 2 {
        return Err(Error::InvalidParameter("m must be at least 2".into()));
    }
    Ok(FullSolution {
        a,
        b,
        m,
        sum: solve_equation(EquationTag::Sum, a, b, m)?,
        difference: solve_equation(EquationTag::Difference, a, b, m)?,
        product: solve_equation(EquationTag::Product, a, b, m)?,
        quotient: solve_equation(EquationTag::Quotient, a, b, m)?,
    })
}
