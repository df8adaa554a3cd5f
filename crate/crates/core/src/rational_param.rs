//! Five-parameter rational solutions of
//! f(z)=f(x)+f(y)=f(u)−f(v)=f(p)f(q)=f(r)/f(s), f(X)=X(X+a).

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{frac, rat, RatFunc, Rational, RingElem, Var};
use crate::error::{Error, Result};
use crate::forms::QuadraticForm;
use crate::verify::{identity_certificate, verify_system, SolutionTuple};

/// The free parameters (k, t, w, q, m) and the form's a.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiveParams {
    pub a: Rational,
    pub k: Rational,
    pub t: Rational,
    pub w: Rational,
    pub q: Rational,
    pub m: Rational,
}

/// A solution tuple with r, s filled in.
pub type RationalTuple = SolutionTuple<Rational>;

/// Field operations shared by rational numbers and rational functions.
trait Field: RingElem {
    fn quo(&self, other: &Self) -> Result<Self>;
    fn scaled(&self, c: &Rational) -> Self;
}

impl Field for Rational {
    fn quo(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / other)
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
}

impl Field for RatFunc {
    fn quo(&self, other: &Self) -> Result<Self> {
        self.checked_div(other)
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

/// (x, y) with f(x)+f(y) = f(T), from the line through a rational point with slope data k.
fn sum_pair<F: Field>(a: &Rational, tt: &F, k: &F) -> Result<(F, F)> {
    let den = k.times(k).plus_scalar(&rat(1));
    let x_num = tt
        .times(k)
        .scaled(&rat(2))
        .plus(&k.scaled(a))
        .plus_scalar(a);
    let y_num = k
        .plus_scalar(&rat(1))
        .times(&tt.times(k).plus(&k.scaled(a)).minus(tt));
    Ok((
        x_num.quo(&den)?.scaled(&rat(-1)),
        y_num.quo(&den)?.scaled(&rat(-1)),
    ))
}

/// (u, v) with f(u)−f(v) = f(T).
fn difference_pair<F: Field>(a: &Rational, tt: &F, t: &F) -> Result<(F, F)> {
    let t2 = t.times(t);
    let den = t2.plus_scalar(&rat(-1));
    let u_num = tt
        .times(&t2)
        .plus(&t2.scaled(a))
        .minus(&t.scaled(a))
        .plus(tt);
    let v_num = tt
        .times(t)
        .scaled(&rat(2))
        .plus(&t.scaled(a))
        .plus_scalar(&-a);
    Ok((
        u_num.quo(&den)?.scaled(&rat(-1)),
        v_num.quo(&den)?.scaled(&rat(-1)),
    ))
}

/// (T, p) with p = wT and f(p)f(q) = f(T).
fn product_point<F: Field>(a: &Rational, w: &F, q: &F) -> Result<(F, F)> {
    let aq_q2 = q.scaled(a).plus(&q.times(q));
    let num = aq_q2.times(w).plus_scalar(&rat(-1)).scaled(a);
    let den = aq_q2.times(&w.times(w)).plus_scalar(&rat(-1));
    let tt = num.quo(&den)?.scaled(&rat(-1));
    let p = w.times(&tt);
    Ok((tt, p))
}

/// (r, s) with s = mr and f(r)/f(s) = f(T).
fn quotient_pair<F: Field>(a: &Rational, tt: &F, m: &F) -> Result<(F, F)> {
    let t2_at = tt.times(tt).plus(&tt.scaled(a));
    let num = t2_at.times(m).plus_scalar(&rat(-1)).scaled(a);
    let den = t2_at.times(&m.times(m)).plus_scalar(&rat(-1));
    let r = num.quo(&den)?.scaled(&rat(-1));
    let s = m.times(&r);
    Ok((r, s))
}

fn degenerate(param: &'static str) -> Error {
    Error::DegenerateParameter { param }
}

/// Evaluates the five-parameter family, with T = z computed from (a, q, w) first.
pub fn solve_rational(params: &FiveParams) -> Result<RationalTuple> {
    let FiveParams { a, k, t, w, q, m } = params;
    let form = QuadraticForm::new(a.clone())?;
    let one = Rational::one();
    if (t * t).is_one() {
        return Err(degenerate("t"));
    }
    let aq_q2 = a * q + q * q;
    if (&aq_q2 * w * w - &one).is_zero() {
        return Err(degenerate("w"));
    }
    let (tt, p) = product_point(a, w, q)?;
    if ((&tt * &tt + a * &tt) * m * m - &one).is_zero() {
        return Err(degenerate("m"));
    }
    let (x, y) = sum_pair(a, &tt, k)?;
    let (u, v) = difference_pair(a, &tt, t)?;
    let (r, s) = quotient_pair(a, &tt, m)?;
    if form.eval(&s).is_zero() {
        return Err(Error::UndefinedQuotient);
    }
    Ok(SolutionTuple::new(form, [tt, x, y, u, v, p, q.clone()]).with_quotient(r, s))
}

/// Generic sample values for the parameters held fixed.
fn samples() -> [Rational; 3] {
    [frac(7, 3), frac(-11, 5), frac(13, 4)]
}

/// Each defining identity holds as a rational-function identity in its own parameter.
pub fn symbolic_certificate(a: &Rational) -> Result<bool> {
    let form = QuadraticForm::new(a.clone())?;
    let f = |x: &RatFunc| form.eval(x);
    let c = |v: Var, x: &Rational| RatFunc::constant(v, x.clone());
    let mut ok = true;
    for g in samples() {
        // identity in k, then t, with T = g
        let kv = Var('k');
        let tt = c(kv, &g);
        let (x, y) = sum_pair(a, &tt, &RatFunc::x(kv))?;
        ok &= identity_certificate(&f(&tt).minus(&f(&x).plus(&f(&y))));

        let tv = Var::LOWER_T;
        let tt = c(tv, &g);
        let (u, v) = difference_pair(a, &tt, &RatFunc::x(tv))?;
        ok &= identity_certificate(&f(&tt).minus(&f(&u).minus(&f(&v))));

        // identity in w at q = g, and in q at w = g
        let wv = Var('w');
        let (tt, p) = product_point(a, &RatFunc::x(wv), &c(wv, &g))?;
        ok &= identity_certificate(&f(&tt).minus(&f(&p).times(&f(&c(wv, &g)))));
        let qv = Var::LOWER_Q;
        let qx = RatFunc::x(qv);
        let (tt, p) = product_point(a, &c(qv, &g), &qx)?;
        ok &= identity_certificate(&f(&tt).minus(&f(&p).times(&f(&qx))));

        // identity in m with T = g: f(T)f(s) = f(r)
        let mv = Var('m');
        let tt = c(mv, &g);
        let (r, s) = quotient_pair(a, &tt, &RatFunc::x(mv))?;
        ok &= identity_certificate(&f(&tt).times(&f(&s)).minus(&f(&r)));
    }
    Ok(ok)
}

/// Per-entry nontriviality flags of a solved tuple.
pub fn nontriviality(t: &RationalTuple) -> Result<Vec<(&'static str, bool)>> {
    Ok(verify_system(t)?.nontrivial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::exact_sqrt;
    use crate::verify::canonical;
    use proptest::prelude::*;

    fn params(a: Rational, [k, t, w, q, m]: [Rational; 5]) -> FiveParams {
        FiveParams { a, k, t, w, q, m }
    }

    #[test]
    fn worked_tuple_at_a_one() {
        let p = params(rat(1), [2, 2, 3, 1, 2].map(rat));
        let sol = solve_rational(&p).unwrap();
        let want = [
            frac(-5, 17),
            frac(-31, 85),
            frac(-87, 85),
            frac(-3, 17),
            frac(1, 17),
            frac(-15, 17),
            rat(1),
        ];
        let got = [&sol.z, &sol.x, &sol.y, &sol.u, &sol.v, &sol.p, &sol.q];
        assert_eq!(got, want.each_ref());
        assert_eq!(sol.rs, Some((frac(-409, 529), frac(-818, 529))));
        let rep = verify_system(&sol).unwrap();
        assert!(rep.verdict && rep.quotient == Some(true));
        assert_eq!(rep.common_value, frac(-5, 17) * frac(12, 17));
    }

    #[test]
    fn k_one_is_flagged_trivial() {
        let p = params(rat(1), [1, 2, 3, 1, 2].map(rat));
        let sol = solve_rational(&p).unwrap();
        assert_eq!(sol.y, rat(-1));
        assert_eq!(sol.x, -&sol.z - rat(1));
        let flags = nontriviality(&sol).unwrap();
        assert!(flags.iter().any(|&(n, ok)| n == "y" && !ok));
        assert!(verify_system(&sol).unwrap().verdict);
    }

    #[test]
    fn recovers_the_smallest_integer_seed() {
        // parameters chosen so that T = 8 and (p, q) = (2, 3)
        let p = params(rat(1), [rat(-3), frac(4, 5), frac(1, 4), rat(3), rat(2)]);
        let sol = solve_rational(&p).unwrap();
        let a = rat(1);
        let got: Vec<Rational> = [&sol.z, &sol.x, &sol.y, &sol.u, &sol.v, &sol.p, &sol.q]
            .iter()
            .map(|x| canonical(&a, x))
            .collect();
        assert_eq!(got, [8, 5, 6, 36, 35, 2, 3].map(rat));
        let seed = SolutionTuple::new(
            QuadraticForm::from_int(1).unwrap(),
            [8, 5, 6, 36, 35, 2, 3].map(rat),
        );
        assert_eq!(
            verify_system(&seed).unwrap().common_value,
            verify_system(&sol).unwrap().common_value
        );
    }

    #[test]
    fn poles_are_reported() {
        let base = [2, 2, 3, 1, 2].map(rat);
        let mut p = params(rat(1), base.clone());
        p.t = rat(-1);
        assert_eq!(
            solve_rational(&p),
            Err(Error::DegenerateParameter { param: "t" })
        );

        // a = 3, q = 1: (aq + q²)w² = 4w² = 1 at w = 1/2
        let mut p = params(rat(3), base.clone());
        p.w = frac(1, 2);
        assert_eq!(
            solve_rational(&p),
            Err(Error::DegenerateParameter { param: "w" })
        );

        // find (q, w) whose T makes T² + aT a rational square, then m hits the pole
        let a = rat(1);
        let hit = (1..20)
            .flat_map(|i| (1..20).map(move |j| (frac(i, 3), frac(j, 4))))
            .find_map(|(q, w)| {
                let (tt, _) = product_point(&a, &w, &q).ok()?;
                let g = &tt * &tt + &a * &tt;
                if g <= rat(0) {
                    return None;
                }
                let (n, d) = (exact_sqrt(g.numer())?, exact_sqrt(g.denom())?);
                Some((q, w, Rational::new(d, n)))
            })
            .unwrap();
        let p = FiveParams {
            a,
            k: rat(2),
            t: rat(2),
            w: hit.1,
            q: hit.0,
            m: hit.2,
        };
        assert_eq!(
            solve_rational(&p),
            Err(Error::DegenerateParameter { param: "m" })
        );

        // m = 0 forces s = 0
        let mut p = params(rat(1), base.clone());
        p.m = rat(0);
        assert_eq!(solve_rational(&p), Err(Error::UndefinedQuotient));

        assert!(solve_rational(&params(rat(0), base)).is_err());
    }

    #[test]
    fn certificates() {
        for a in [rat(1), rat(-2), frac(3, 2), rat(5)] {
            assert!(symbolic_certificate(&a).unwrap(), "a = {a}");
        }
        assert!(symbolic_certificate(&rat(0)).is_err());
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-40i64..=40, 1i64..=7).prop_map(|(n, d)| frac(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn random_parameters_verify(
            ai in 0usize..5,
            k in small_rat(), t in small_rat(), w in small_rat(), q in small_rat(), m in small_rat(),
        ) {
            let a = [rat(1), rat(-1), rat(2), rat(-2), frac(3, 2)][ai].clone();
            match solve_rational(&FiveParams { a, k, t, w, q, m }) {
                Ok(sol) => {
                    let rep = verify_system(&sol).unwrap();
                    prop_assert!(rep.verdict);
                    prop_assert_eq!(rep.quotient, Some(true));
                }
                Err(Error::DegenerateParameter { .. }) | Err(Error::UndefinedQuotient) => {}
                Err(e) => prop_assert!(false, "unexpected error {e:?}"),
            }
        }
    }
}
