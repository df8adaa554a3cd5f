use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arith::{Rational, RingElem};
use crate::error::{Error, Result};
use crate::forms::{polygonal, Form};

/// Candidate (z,x,y,u,v,p,q[,r,s]) for f(z)=f(x)+f(y)=f(u)−f(v)=f(p)f(q)[=f(r)/f(s)].
///
/// Entries are exact scalars, polynomials or rational functions; nothing is
/// checked at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionTuple<R = Rational> {
    pub form: Form,
    pub z: R,
    pub x: R,
    pub y: R,
    pub u: R,
    pub v: R,
    pub p: R,
    pub q: R,
    pub rs: Option<(R, R)>,
}

pub const ENTRY_NAMES: [&str; 9] = ["z", "x", "y", "u", "v", "p", "q", "r", "s"];

impl<R: RingElem> SolutionTuple<R> {
    pub fn new(form: impl Into<Form>, entries: [R; 7]) -> Self {
        let [z, x, y, u, v, p, q] = entries;
        SolutionTuple {
            form: form.into(),
            z,
            x,
            y,
            u,
            v,
            p,
            q,
            rs: None,
        }
    }

    pub fn with_quotient(mut self, r: R, s: R) -> Self {
        self.rs = Some((r, s));
        self
    }

    /// Entries in the order z,x,y,u,v,p,q[,r,s].
    pub fn entries(&self) -> Vec<(&'static str, &R)> {
        let mut out: Vec<(&'static str, &R)> = [
            &self.z, &self.x, &self.y, &self.u, &self.v, &self.p, &self.q,
        ]
        .into_iter()
        .enumerate()
        .map(|(i, e)| (ENTRY_NAMES[i], e))
        .collect();
        if let Some((r, s)) = &self.rs {
            out.push(("r", r));
            out.push(("s", s));
        }
        out
    }

    pub fn map<S: RingElem>(&self, mut g: impl FnMut(&R) -> Result<S>) -> Result<SolutionTuple<S>> {
        Ok(SolutionTuple {
            form: self.form.clone(),
            z: g(&self.z)?,
            x: g(&self.x)?,
            y: g(&self.y)?,
            u: g(&self.u)?,
            v: g(&self.v)?,
            p: g(&self.p)?,
            q: g(&self.q)?,
            rs: match &self.rs {
                Some((r, s)) => Some((g(r)?, g(s)?)),
                None => None,
            },
        })
    }
}

/// Outcome of checking a tuple; `verdict` is the conjunction of the equalities.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport<R = Rational> {
    pub sum: bool,
    pub difference: bool,
    pub product: bool,
    /// `None` when the tuple has no (r, s).
    pub quotient: Option<bool>,
    pub common_value: R,
    /// One flag per entry: f(entry) ≠ 0.
    pub nontrivial: Vec<(&'static str, bool)>,
    pub verdict: bool,
}

impl<R> VerificationReport<R> {
    pub fn all_nontrivial(&self) -> bool {
        self.nontrivial.iter().all(|(_, ok)| *ok)
    }
}

/// Exact check of every equality; the quotient is tested as f(z)·f(s) = f(r).
pub fn verify_system<R: RingElem>(t: &SolutionTuple<R>) -> Result<VerificationReport<R>> {
    let f = |x: &R| t.form.eval(x);
    let fz = f(&t.z);
    let sum = fz == f(&t.x).plus(&f(&t.y));
    let difference = fz == f(&t.u).minus(&f(&t.v));
    let product = fz == f(&t.p).times(&f(&t.q));
    let quotient = match &t.rs {
        None => None,
        Some((r, s)) => {
            let fs = f(s);
            if fs.is_zero_elem() {
                return Err(Error::UndefinedQuotient);
            }
            Some(fz.times(&fs) == f(r))
        }
    };
    let nontrivial = t
        .entries()
        .into_iter()
        .map(|(n, e)| (n, !f(e).is_zero_elem()))
        .collect();
    let verdict = sum && difference && product && quotient.unwrap_or(true);
    Ok(VerificationReport {
        sum,
        difference,
        product,
        quotient,
        common_value: fz,
        nontrivial,
        verdict,
    })
}

/// True iff the difference of two sides is identically zero (for rational
/// functions, iff the reduced numerator vanishes).
pub fn identity_certificate<R: RingElem>(lhs_minus_rhs: &R) -> bool {
    lhs_minus_rhs.is_zero_elem()
}

/// Indices of the displayed n = 12 identity
/// P(P(6568)) = P(x)+P(y) = P(u)−P(v) = P(6568)·P(14686).
pub const POLYGONAL_DISPLAY: [i64; 7] = [
    215666848,
    33841736,
    212995132,
    2907011822107606,
    2907011822107598,
    6568,
    14686,
];

/// Checks the displayed 12-gonal identity exactly.
pub fn verify_polygonal_display() -> VerificationReport<BigInt> {
    let p = |k: i64| polygonal(12, &BigInt::from(k)).expect("n = 12 is valid");
    let [z, x, y, u, v, pp, qq] = POLYGONAL_DISPLAY.map(p);
    let sum = z == &x + &y;
    let difference = z == &u - &v;
    let product = z == &pp * &qq;
    let nontrivial = ENTRY_NAMES[..7]
        .iter()
        .zip([&z, &x, &y, &u, &v, &pp, &qq])
        .map(|(n, val)| (*n, *val != BigInt::from(0)))
        .collect();
    VerificationReport {
        sum,
        difference,
        product,
        quotient: None,
        verdict: sum && difference && product,
        common_value: z,
        nontrivial,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Poly, RatFunc, Var};
    use crate::forms::{CubicForm, QuadraticForm};

    fn quad_tuple(a: i64, e: [i64; 7]) -> SolutionTuple {
        SolutionTuple::new(QuadraticForm::from_int(a).unwrap(), e.map(rat))
    }

    #[test]
    fn a_one_seed_tuple() {
        let rep = verify_system(&quad_tuple(1, [8, 5, 6, 36, 35, 2, 3])).unwrap();
        assert!(rep.verdict && rep.all_nontrivial());
        assert_eq!(rep.common_value, rat(72));
        assert_eq!(rep.quotient, None);
    }

    #[test]
    fn wrong_q_breaks_product() {
        let rep = verify_system(&quad_tuple(1, [8, 5, 6, 36, 35, 2, 4])).unwrap();
        assert!(rep.sum && rep.difference && !rep.product && !rep.verdict);
    }

    #[test]
    fn quotient_requires_nonzero_denominator() {
        let t = quad_tuple(1, [8, 5, 6, 36, 35, 2, 3]).with_quotient(rat(8), rat(0));
        assert_eq!(verify_system(&t), Err(Error::UndefinedQuotient));
        // f(-1) = 0 as well
        let t = quad_tuple(1, [8, 5, 6, 36, 35, 2, 3]).with_quotient(rat(8), rat(-1));
        assert!(verify_system(&t).is_err());
    }

    #[test]
    fn perturbing_any_entry_breaks_an_equality() {
        let base = [8i64, 5, 6, 36, 35, 2, 3];
        for i in 0..7 {
            for d in [-1i64, 1] {
                let mut e = base;
                e[i] += d;
                let rep = verify_system(&quad_tuple(1, e)).unwrap();
                assert!(!rep.verdict, "entry {i} moved by {d}");
            }
        }
    }

    #[test]
    fn polygonal_display_holds() {
        let rep = verify_polygonal_display();
        assert!(rep.sum && rep.difference && rep.product && rep.verdict);
        assert_eq!(
            rep.common_value,
            BigInt::from(215666848i64) * BigInt::from(1078334236i64)
        );
    }

    #[test]
    fn certificate_on_polynomials() {
        let t = Poly::x(Var::T);
        assert!(identity_certificate(&Poly::zero(Var::T)));
        assert!(identity_certificate(&(&(&t * &t) - &t.pow(2))));
        assert!(!identity_certificate(&t));
        let r = RatFunc::x(Var::T);
        assert!(identity_certificate(
            &(&r * &r.inv().unwrap()).plus_scalar(&rat(-1))
        ));
    }

    #[test]
    fn symbolic_tuple_check() {
        // the a = 1 family as polynomials in t
        let t = Var::LOWER_T;
        let e = [
            Poly::from_i64(t, &[8, 120, 400]),
            Poly::from_i64(t, &[5, 72, 240]),
            Poly::from_i64(t, &[6, 96, 320]),
            Poly::from_i64(t, &[36, 665, 4000, 8000]),
            Poly::from_i64(t, &[35, 655, 4000, 8000]),
            Poly::from_i64(t, &[2, 20]),
            Poly::from_i64(t, &[3, 20]),
        ];
        let tuple = SolutionTuple::new(QuadraticForm::from_int(1).unwrap(), e);
        let rep = verify_system(&tuple).unwrap();
        assert!(rep.verdict);
        let f = &tuple.form;
        assert!(identity_certificate(
            &f.eval(&tuple.z)
                .minus(&f.eval(&tuple.p).times(&f.eval(&tuple.q)))
        ));
    }

    #[test]
    fn cubic_tuple() {
        let f = CubicForm::new(1, 3).unwrap();
        let rep = verify_system(&SolutionTuple::new(f, [1, 1, 0, 1, 0, 1, 0].map(rat))).unwrap();
        assert!(rep.sum && rep.difference && !rep.product);
        assert!(!rep.all_nontrivial());
    }
}
