//! The three Weierstrass models attached to the cubic f(X) = X(X+a)(X+b),
//! with their distinguished points and the validated curve constructor.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arith::{Poly, RatFunc, Rational, Var};
use crate::error::{Error, Result};

use super::group::{CurvePoint, WeierstrassCurve};

/// E1 (sums), E2 (differences) over Q(T); E3 (products) over Q(Q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveTag {
    E1,
    E2,
    E3,
}

impl CurveTag {
    pub fn var(self) -> Var {
        match self {
            CurveTag::E1 | CurveTag::E2 => Var::T,
            CurveTag::E3 => Var::Q,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CurveTag::E1 => "E1",
            CurveTag::E2 => "E2",
            CurveTag::E3 => "E3",
        }
    }
}

/// How the curve constants were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionPath {
    /// The tabulated constants contain the distinguished point.
    Printed,
    /// A and B solved from the distinguished point and its tabulated double.
    TwoPoint,
    /// A kept, B solved from the distinguished point alone.
    OnePoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Origin {
    pub tag: CurveTag,
    pub a: i64,
    pub b: i64,
    pub path: ConstructionPath,
}

/// Largest |a|, |b| accepted; keeps every tabulated coefficient inside i128.
pub const MAX_PARAM: i64 = 10_000;

/// Polynomial in `var` from ascending i128 coefficients.
pub(crate) fn pz(var: Var, c: &[i128]) -> Poly {
    let coeffs: Vec<Rational> = c
        .iter()
        .map(|&x| Rational::from_integer(BigInt::from(x)))
        .collect();
    Poly::from_coeffs(var, coeffs)
}

pub(crate) fn fz(var: Var, c: &[i128]) -> RatFunc {
    RatFunc::from_poly(pz(var, c))
}

fn quo(var: Var, num: &[i128], den: &[i128]) -> RatFunc {
    RatFunc::new(pz(var, num), pz(var, den)).expect("nonzero tabulated denominator")
}

pub(crate) fn check_params(a: i64, b: i64) -> Result<(i128, i128)> {
    if a == 0 || b == 0 || a == b {
        return Err(Error::InvalidParameter(alloc::format!(
            "need a, b nonzero and distinct, got ({a}, {b})"
        )));
    }
    if a.abs() > MAX_PARAM || b.abs() > MAX_PARAM {
        return Err(Error::InvalidParameter(alloc::format!(
            "|a|, |b| must not exceed {MAX_PARAM}"
        )));
    }
    Ok((a.into(), b.into()))
}

/// The tabulated (A, B); E3's constant term is read with the missing operator as "+".
pub fn printed_coefficients(tag: CurveTag, a: i64, b: i64) -> Result<(RatFunc, RatFunc)> {
    let (a, b) = check_params(a, b)?;
    let v = tag.var();
    let n = a * a - a * b + b * b;
    Ok(match tag {
        CurveTag::E1 => (
            fz(v, &[-432 * n * n]),
            fz(
                v,
                &[
                    -1728
                        * (a * a - 4 * a * b + b * b)
                        * (a * a + 2 * a * b - 2 * b * b)
                        * (2 * a * a - 2 * a * b - b * b),
                    46656 * a * b * (2 * a - b) * (a - 2 * b) * (a + b),
                    1164 * (8 * a.pow(4)
                        - 4 * a.pow(3) * b
                        - 51 * a * a * b * b
                        - 4 * a * b.pow(3)
                        + 8 * b.pow(4)),
                    23328 * (a + b) * (4 * a * a - 37 * a * b + 4 * b * b),
                    -314928 * (a * a + 4 * a * b + b * b),
                    -629856 * (a + b),
                    -314928,
                ],
            ),
        ),
        CurveTag::E2 => (
            fz(v, &[-432 * n * n]),
            fz(
                v,
                &[
                    3456 * n * n * n,
                    0,
                    -314928 * a * a * b * b,
                    -629856 * a * b * (a + b),
                    -314928 * (a * a + 4 * a * b + b * b),
                    -629856 * (a + b),
                    -314928,
                ],
            ),
        ),
        CurveTag::E3 => {
            let e = 27 * a * a * b * b * (a - b) * (a - b);
            let m = (2 * a - b) * (a - 2 * b) * (a + b);
            (fz(v, &[0, 0, -432 * n * n]), fz(v, &[e, 2 * m * m, e]))
        }
    })
}

/// W on E1, W′ on E2, W″ on E3.
pub fn canonical_point(tag: CurveTag, a: i64, b: i64) -> Result<CurvePoint> {
    let (a, b) = check_params(a, b)?;
    let v = tag.var();
    Ok(match tag {
        CurveTag::E1 => {
            let x = fz(
                v,
                &[-12 * a * a + 48 * a * b - 12 * b * b, 36 * (a + b), 108],
            );
            let y = &(&fz(v, &[2 * a - b, 3]) * &fz(v, &[2 * b - a, 3])) * &fz(v, &[0, 108]);
            CurvePoint::new(x, y)
        }
        CurveTag::E2 => {
            let x = fz(
                v,
                &[12 * a * a + 96 * a * b + 12 * b * b, 108 * (a + b), 108],
            );
            let y = &(&fz(v, &[324 * a, 324]) * &fz(v, &[b, 1])) * &fz(v, &[2 * a + 2 * b, 3]);
            CurvePoint::new(x, y)
        }
        CurveTag::E3 => {
            let x = fz(v, &[0, 12 * (a * a + 2 * a * b - 2 * b * b)]);
            let y = fz(v, &[0, -108 * a * (a - b) * b, -108 * a * (a - b) * b]);
            CurvePoint::new(x, y)
        }
    })
}

/// The tabulated double of the canonical point.
pub fn printed_double(tag: CurveTag, a: i64, b: i64) -> Result<CurvePoint> {
    let (a, b) = check_params(a, b)?;
    let v = tag.var();
    let (a2, b2, ab) = (a * a, b * b, a * b);
    Ok(match tag {
        CurveTag::E1 => {
            let x = quo(
                v,
                &[
                    12 * 3 * a2 * b2,
                    12 * 6 * ab * (a + b),
                    12 * (5 * a2 + 16 * ab + 5 * b2),
                    12 * 12 * (a + b),
                    12 * 9,
                ],
                &[0, 0, 1],
            );
            let y = quo(
                v,
                &[
                    -108 * 2 * a2 * ab * b2,
                    -108 * 6 * a2 * b2 * (a + b),
                    -108 * 2 * ab * (4 * a2 + 11 * ab + 4 * b2),
                    -108 * 2 * (a + b) * (2 * a2 + 13 * ab + 2 * b2),
                    -108 * (16 * a2 + 41 * ab + 16 * b2),
                    -108 * 21 * (a + b),
                    -108 * 9,
                ],
                &[0, 0, 0, 1],
            );
            CurvePoint::new(x, y)
        }
        CurveTag::E2 => {
            let l = pz(v, &[2 * a + 2 * b, 3]);
            let x_num = pz(
                v,
                &[
                    12 * (4 * a2 * a2 + 4 * a2 * ab + 27 * a2 * b2 + 4 * ab * b2 + 4 * b2 * b2),
                    12 * (12 * a2 * a + 54 * a2 * b + 54 * a * b2 + 12 * b2 * b),
                    12 * (45 * a2 + 144 * ab + 45 * b2),
                    12 * 108 * (a + b),
                    12 * 81,
                ],
            );
            let y_num = pz(
                v,
                &[
                    324 * 6 * a2 * b2 * (2 * a2 + ab + 2 * b2),
                    324 * 6 * ab * (a + b) * (4 * a2 + 5 * ab + 4 * b2),
                    324 * (8 * a2 * a2 + 68 * a2 * ab + 66 * a2 * b2 + 68 * ab * b2 + 8 * b2 * b2),
                    324 * (12 * a2 * a - 18 * a2 * b - 18 * a * b2 + 12 * b2 * b),
                    -324 * (54 * a2 + 189 * ab + 54 * b2),
                    -324 * 135 * (a + b),
                    -324 * 81,
                ],
            );
            let x = RatFunc::new(x_num, l.pow(2)).expect("nonzero");
            let y = RatFunc::new(y_num, l.pow(3)).expect("nonzero");
            CurvePoint::new(x, y)
        }
        CurveTag::E3 => {
            let c = a2 + 2 * ab - 2 * b2;
            let x_num = pz(
                v,
                &[
                    0,
                    -12 * 2 * a2 * c,
                    -12 * (8 * a2 * a2 + 4 * a2 * ab - a2 * b2 - 6 * ab * b2 + 3 * b2 * b2),
                    -12 * 2 * a2 * c,
                ],
            );
            let e = 2 * a2 * a2 + 3 * a2 * ab - a2 * b2 - 4 * ab * b2 + 2 * b2 * b2;
            let f = (a2 + ab - b2) * (4 * a2 * a2 + a2 * ab - 2 * ab * b2 + b2 * b2);
            let g = a2 * a2 * b * (a - b);
            let y_num = pz(
                v,
                &[
                    0,
                    -108 * g,
                    108 * 2 * a2 * e,
                    -108 * 2 * f,
                    108 * 2 * a2 * e,
                    -108 * g,
                ],
            );
            let den = pz(v, &[a2, 2 * a2, a2]);
            let x = RatFunc::new(x_num, den.clone()).expect("nonzero");
            let y = RatFunc::new(y_num, den).expect("nonzero");
            CurvePoint::new(x, y)
        }
    })
}

/// (A, B) through two affine points with distinct X.
fn through_two(p: &CurvePoint, r: &CurvePoint) -> Option<(RatFunc, RatFunc)> {
    let ((x1, y1), (x2, y2)) = (p.coords()?, r.coords()?);
    let k1 = &y1.pow(2) - &x1.pow(3);
    let k2 = &y2.pow(2) - &x2.pow(3);
    let a = (&k1 - &k2).checked_div(&(x1 - x2)).ok()?;
    let b = &k1 - &(&a * x1);
    Some((a, b))
}

/// Cheap necessary condition for [2]w = d: it holds after specializing the
/// variable at a sample value (inconclusive samples count as passing).
fn doubles_at_sample(c: &WeierstrassCurve, w: &CurvePoint, d: &CurvePoint) -> bool {
    let t0 = Rational::new(BigInt::from(7), BigInt::from(3));
    let (Ok((ca, _)), Ok(Some((x, y))), Ok(Some((dx, dy)))) =
        (c.eval(&t0), w.eval(&t0), d.eval(&t0))
    else {
        return true;
    };
    if y == Rational::from_integer(BigInt::from(0)) {
        return true;
    }
    let three = Rational::from_integer(BigInt::from(3));
    let two = Rational::from_integer(BigInt::from(2));
    let l = (&three * &x * &x + &ca) / (&two * &y);
    let x2 = &l * &l - &two * &x;
    let y2 = &l * (&x - &x2) - &y;
    x2 == dx && y2 == dy
}

/// Builds E1/E2/E3 for (a, b), checking that the canonical point lies on it.
///
/// If it does not, the constants are re-derived, first from the canonical
/// point together with its tabulated double (accepted only if doubling on the
/// new curve reproduces that double), then by solving for B alone.
pub fn make_curve(tag: CurveTag, a: i64, b: i64) -> Result<WeierstrassCurve> {
    let v = tag.var();
    let (pa, pb) = printed_coefficients(tag, a, b)?;
    let w = canonical_point(tag, a, b)?;
    let origin = |path| Origin { tag, a, b, path };

    let printed = WeierstrassCurve::new(v, pa.clone(), pb)?;
    if printed.contains(&w) {
        return Ok(printed.with_origin(origin(ConstructionPath::Printed)));
    }
    log::info!(
        "{} ({a},{b}): canonical point is off the tabulated curve (residual {})",
        tag.name(),
        printed.residual(&w)
    );

    let d = printed_double(tag, a, b)?;
    if let Some((na, nb)) = through_two(&w, &d) {
        let c = WeierstrassCurve::new_unchecked(v, na, nb);
        if doubles_at_sample(&c, &w, &d) && c.double(&w)? == d && !c.is_singular() {
            log::info!(
                "{} ({a},{b}): constants re-derived from the point and its double: A = {}, B = {}",
                tag.name(),
                c.a_coef(),
                c.b_coef()
            );
            return Ok(c.with_origin(origin(ConstructionPath::TwoPoint)));
        }
    }
    log::info!(
        "{} ({a},{b}): tabulated double rejected; solving for B with A kept",
        tag.name()
    );

    let (x, y) = w.coords().expect("affine canonical point");
    let nb = &(&y.pow(2) - &x.pow(3)) - &(&pa * x);
    match WeierstrassCurve::new(v, pa, nb) {
        Ok(c) => {
            log::info!("{} ({a},{b}): B = {}", tag.name(), c.b_coef());
            Ok(c.with_origin(origin(ConstructionPath::OnePoint)))
        }
        Err(_) => Err(Error::CurveConstruction { curve: tag.name() }),
    }
}
