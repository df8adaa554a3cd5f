//! Birational maps between the cubic curves and their Weierstrass models.
//!
//! C1: g(x) + g(y) = g(T), C2: g(u) − g(v) = g(T), C3: g(T) = Q·g(p),
//! with g(X) = X(X+a)(X+b).

use crate::arith::{frac, rat, RatFunc, Rational, Var};
use crate::error::{Error, Result};

use super::group::{CurvePoint, WeierstrassCurve};
use super::models::{canonical_point, check_params, fz, CurveTag};

fn c(v: Var, x: i128) -> RatFunc {
    fz(v, &[x])
}

/// g(T) = T(T+a)(T+b) in Q(T).
pub(crate) fn g_of_t(a: i128, b: i128) -> RatFunc {
    fz(Var::T, &[0, a * b, a + b, 1])
}

fn exceptional() -> Error {
    Error::ExceptionalPoint { m: 0 }
}

/// (x, y) on C1 or (u, v) on C2 ↦ point of E1 or E2.
pub fn phi_forward(
    tag: CurveTag,
    a: i64,
    b: i64,
    pair: (&RatFunc, &RatFunc),
) -> Result<CurvePoint> {
    let (a, b) = check_params(a, b)?;
    let t = Var::T;
    let (x, y) = pair;
    let n = a * a - a * b + b * b;
    let g = g_of_t(a, b);
    match tag {
        CurveTag::E1 => {
            let s = x + y;
            let den = &s.scale(&rat(3)) + &c(t, 2 * a + 2 * b);
            let xn = &(&s.scale(&Rational::from_integer(n.into())) + &g.scale(&rat(9)))
                + &c(t, -2 * (a + b) * (a * a - 4 * a * b + b * b)).scale(&frac(1, 3));
            let xx = xn
                .scale(&rat(36))
                .checked_div(&den)
                .map_err(|_| exceptional())?;
            let lin =
                &(&fz(t, &[2 * a - b, 3]) * &fz(t, &[2 * a + 2 * b, 3])) * &fz(t, &[2 * b - a, 3]);
            let yy = (&lin * &(x - y))
                .scale(&rat(-108))
                .checked_div(&den)
                .map_err(|_| exceptional())?;
            Ok(CurvePoint::new(xx, yy))
        }
        CurveTag::E2 => {
            let d = x - y;
            let un = &d.scale(&Rational::from_integer(n.into())) + &g.scale(&rat(9));
            let uu = un
                .scale(&rat(12))
                .checked_div(&d)
                .map_err(|_| exceptional())?;
            let s = &(x + y).scale(&rat(3)) + &c(t, 2 * a + 2 * b);
            let vv = (&g * &s)
                .scale(&rat(324))
                .checked_div(&d)
                .map_err(|_| exceptional())?;
            Ok(CurvePoint::new(uu, vv))
        }
        CurveTag::E3 => Err(Error::InvalidParameter("use Phi3 for E3".into())),
    }
}

/// Point of E1 or E2 ↦ (x, y) on C1 or (u, v) on C2.
///
/// The E2 inverse is the exact inverse of the forward map; in it the ±V
/// and ±972g(T) terms pair up as written below.
pub fn phi_inverse(tag: CurveTag, a: i64, b: i64, p: &CurvePoint) -> Result<(RatFunc, RatFunc)> {
    let (a, b) = check_params(a, b)?;
    let t = Var::T;
    let (xx, yy) = p.coords().ok_or_else(exceptional)?;
    let n = a * a - a * b + b * b;
    let g972 = g_of_t(a, b).scale(&rat(972));
    let den = (xx - &c(t, 12 * n)).scale(&rat(18));
    if den.is_zero() {
        return Err(exceptional());
    }
    let base = xx.scale(&Rational::from_integer((-6 * (a + b)).into()));
    let (first, second) = match tag {
        CurveTag::E1 => {
            let k = c(t, -72 * (a + b) * (a * a - 4 * a * b + b * b));
            let common = &(&base + &g972) + &k;
            (&common - yy, &common + yy)
        }
        CurveTag::E2 => {
            let common = &(&base + yy) + &c(t, 72 * (a * a * a + b * b * b));
            (&common + &g972, &common - &g972)
        }
        CurveTag::E3 => return Err(Error::InvalidParameter("use Phi3 for E3".into())),
    };
    Ok((first.checked_div(&den)?, second.checked_div(&den)?))
}

/// The map C3 → E3 and its inverse over Q(Q).
///
/// Lines p = wT through the origin of C3 meet it again where
/// α(w)T² + β(w)T + γ(w) = 0; the discriminant β² − 4αγ is a quartic in w with
/// square constant term (a−b)², which is brought to Weierstrass form and scaled
/// by (9, 27). Composing with P ↦ R + W″ − P, R the image of (−a, −a), sends
/// (−a, −a) to W″.
#[derive(Clone, Debug)]
pub struct Phi3 {
    a: i128,
    b: i128,
    curve: WeierstrassCurve,
    w2: CurvePoint,
    r: CurvePoint,
    qq: Rational,
    c1: RatFunc,
    c2: RatFunc,
    c3: RatFunc,
    a1: RatFunc,
    b2: RatFunc,
}

impl Phi3 {
    pub fn new(curve: &WeierstrassCurve, a: i64, b: i64) -> Result<Self> {
        let (ai, bi) = check_params(a, b)?;
        let v = Var::Q;
        let qq = Rational::from_integer((ai - bi).into());
        // Δ(w) = (a−b)² + 4abQ·w − 2(a+b)²Q·w² + 4abQ·w³ + (a−b)²Q²·w⁴
        let c1 = fz(v, &[0, 4 * ai * bi]);
        let c2 = fz(v, &[0, -2 * (ai + bi) * (ai + bi)]);
        let c3 = c1.clone();
        let a1 = c1.scale(&qq.recip());
        let a2 = &c2 - &c1.pow(2).scale(&(&qq * &qq * rat(4)).recip());
        let b2 = &a1.pow(2) + &a2.scale(&rat(4));
        let mut phi = Phi3 {
            a: ai,
            b: bi,
            curve: curve.clone(),
            w2: canonical_point(CurveTag::E3, a, b)?,
            r: CurvePoint::Infinity,
            qq,
            c1,
            c2,
            c3,
            a1,
            b2,
        };
        let minus_a = c(v, -ai);
        phi.r = phi.psi(&minus_a, &minus_a)?;
        if !curve.contains(&phi.r) {
            return Err(Error::CurveConstruction { curve: "E3" });
        }
        Ok(phi)
    }

    /// α(w) = 1 − Qw³ and β(w) = (a+b)(1 − Qw²).
    fn alpha_beta(&self, w: &RatFunc) -> (RatFunc, RatFunc) {
        let q = RatFunc::x(Var::Q);
        let one = RatFunc::one(Var::Q);
        let alpha = &one - &(&q * &w.pow(3));
        let beta =
            (&one - &(&q * &w.pow(2))).scale(&Rational::from_integer((self.a + self.b).into()));
        (alpha, beta)
    }

    /// The quartic-to-Weierstrass map, before the translation by R + W″.
    fn psi(&self, t: &RatFunc, p: &RatFunc) -> Result<CurvePoint> {
        let v = Var::Q;
        let qq = &self.qq;
        let u = p.checked_div(t)?;
        let (alpha, beta) = self.alpha_beta(&u);
        let s = &(&alpha * t).scale(&rat(2)) + &beta;
        let qc = RatFunc::constant(v, qq.clone());
        let two_qq = qq * rat(2);
        let u2 = u.pow(2);
        let x = (&(&s + &qc).scale(&two_qq) + &(&self.c1 * &u)).checked_div(&u2)?;
        let y_num = &(&(&s + &qc).scale(&(qq * qq * rat(4)))
            + &(&(&self.c1 * &u) + &(&self.c2 * &u2)).scale(&two_qq))
            - &(&self.c1.pow(2) * &u2).scale(&two_qq.recip());
        let y = y_num.checked_div(&(&u2 * &u))?;
        let a3 = self.c3.scale(&two_qq);
        let y1 = &y + &(&(&self.a1 * &x) + &a3).scale(&frac(1, 2));
        let x1 = &x + &self.b2.scale(&frac(1, 12));
        Ok(CurvePoint::new(x1.scale(&rat(9)), y1.scale(&rat(27))))
    }

    fn psi_inverse(&self, pt: &CurvePoint) -> Result<(RatFunc, RatFunc)> {
        let (xx, yy) = pt.coords().ok_or_else(exceptional)?;
        let qq = &self.qq;
        let two_qq = qq * rat(2);
        let x = &xx.scale(&frac(1, 9)) - &self.b2.scale(&frac(1, 12));
        let a3 = self.c3.scale(&two_qq);
        let y = &yy.scale(&frac(1, 27)) - &(&(&self.a1 * &x) + &a3).scale(&frac(1, 2));
        let u_num = &(&x + &self.c2).scale(&two_qq) - &self.c1.pow(2).scale(&two_qq.recip());
        let u = u_num.checked_div(&y).map_err(|_| exceptional())?;
        let s = (&(&u * &x) - &self.c1).checked_div(&RatFunc::constant(Var::Q, two_qq.clone()))?;
        let s = &(&u * &s) - &RatFunc::constant(Var::Q, qq.clone());
        let (alpha, beta) = self.alpha_beta(&u);
        let t = (&s - &beta)
            .checked_div(&alpha.scale(&rat(2)))
            .map_err(|_| exceptional())?;
        let p = &u * &t;
        Ok((t, p))
    }

    /// (T, p) on C3 ↦ point of E3; (−a, −a) goes to W″.
    pub fn forward(&self, t: &RatFunc, p: &RatFunc) -> Result<CurvePoint> {
        let base = self.curve.add(&self.r, &self.w2)?;
        self.curve.sub(&base, &self.psi(t, p)?)
    }

    /// Point of E3 ↦ (T, p) on C3.
    pub fn inverse(&self, pt: &CurvePoint) -> Result<(RatFunc, RatFunc)> {
        let base = self.curve.add(&self.r, &self.w2)?;
        self.psi_inverse(&self.curve.sub(&base, pt)?)
    }

    /// R − [m−1]W″ pulled back, i.e. the preimage of [m]W″, given [m−1]W″.
    pub fn inverse_of_multiple(&self, prev: &CurvePoint) -> Result<(RatFunc, RatFunc)> {
        self.psi_inverse(&self.curve.sub(&self.r, prev)?)
    }

    /// The image R of (−a, −a) under the untranslated map.
    pub fn base_point(&self) -> &CurvePoint {
        &self.r
    }
}
