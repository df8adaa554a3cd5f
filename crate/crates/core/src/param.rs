//! Degree-3 integer parametric solutions of f(z)=f(x)+f(y)=f(u)−f(v)=f(p)f(q),
//! f(X) = X(X+a), from a Pythagorean-type parametrization (m, n) and a shift k.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::{frac, Poly, Rational, RingElem, Var};
use crate::error::{Error, Result};
use crate::forms::QuadraticForm;
use crate::verify::{identity_certificate, SolutionTuple};

/// (a, m, n, k) with a ≠ 0 and n > m ≥ 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamConfig {
    a: i64,
    m: i64,
    n: i64,
    k: BigInt,
}

impl ParamConfig {
    pub fn new(a: i64, m: i64, n: i64, k: impl Into<BigInt>) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidParameter("a must be nonzero".into()));
        }
        if !(1 <= m && m < n) {
            return Err(Error::InvalidParameter(format!(
                "need n > m >= 1, got m={m}, n={n}"
            )));
        }
        if n > 1 << 12 {
            return Err(Error::InvalidParameter(format!("n = {n} is too large")));
        }
        Ok(ParamConfig {
            a,
            m,
            n,
            k: k.into(),
        })
    }

    pub fn a(&self) -> i64 {
        self.a
    }
    pub fn m(&self) -> i64 {
        self.m
    }
    pub fn n(&self) -> i64 {
        self.n
    }
    pub fn k(&self) -> &BigInt {
        &self.k
    }

    /// m² + n².
    pub fn big_a(&self) -> i64 {
        self.m * self.m + self.n * self.n
    }

    /// 4(m² + n²)², the period of admissible k.
    pub fn period(&self) -> i64 {
        4 * self.big_a() * self.big_a()
    }

    /// The same configuration with k reduced into [0, period).
    pub fn normalized(&self) -> Self {
        ParamConfig {
            k: self.k.mod_floor(&BigInt::from(self.period())),
            ..self.clone()
        }
    }
}

/// Which of the three conditions on k hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CongruenceStatus {
    pub parity: bool,
    pub first: bool,
    pub second: bool,
}

impl CongruenceStatus {
    pub fn holds(self) -> bool {
        self.parity && self.first && self.second
    }
}

/// Evaluates the two congruences modulo (m²+n²)² with i128 arithmetic on k mod (m²+n²)².
fn status_i128(a: i128, m: i128, n: i128, k: i128) -> CongruenceStatus {
    let aa = m * m + n * n;
    let md = aa * aa;
    let parity = if a.rem_euclid(2) == 0 {
        k.rem_euclid(4) == 0
    } else {
        k.rem_euclid(4) == 2
    };
    let km = k.rem_euclid(md);
    let kk = (km * ((km + a + 1).rem_euclid(md))).rem_euclid(md);
    let first = ((n * n - m * m)
        * ((4 * m * n * kk + a * (m * m + 2 * m * n - n * n)).rem_euclid(md)))
    .rem_euclid(md)
        == 0;
    let second = ((m * m + 2 * m * n - n * n)
        * (((m * m - 2 * m * n - n * n) * kk - 2 * a * m * n).rem_euclid(md)))
    .rem_euclid(md)
        == 0;
    CongruenceStatus {
        parity,
        first,
        second,
    }
}

pub fn congruence_status(cfg: &ParamConfig) -> CongruenceStatus {
    let md = BigInt::from(cfg.big_a() * cfg.big_a() * 4);
    let k = cfg.k.mod_floor(&md).to_i128().expect("k mod 4A² fits");
    status_i128(cfg.a.into(), cfg.m.into(), cfg.n.into(), k)
}

/// Both congruences modulo (m²+n²)² together with the parity rule on k.
pub fn congruence_check(cfg: &ParamConfig) -> bool {
    congruence_status(cfg).holds()
}

/// Admissible residues k in [lo, hi) ∩ [0, period), by direct scan.
pub fn solve_k_range(a: i64, m: i64, n: i64, lo: i64, hi: i64) -> Result<Vec<i64>> {
    let cfg = ParamConfig::new(a, m, n, 0)?;
    let hi = hi.min(cfg.period());
    let start = lo.max(0);
    // only k in the right class mod 4 can pass the parity rule
    let want = if a.rem_euclid(2) == 0 { 0 } else { 2 };
    let mut k = start + (want - start).rem_euclid(4);
    let mut out = Vec::new();
    while k < hi {
        if status_i128(a.into(), m.into(), n.into(), k.into()).holds() {
            out.push(k);
        }
        k += 4;
    }
    Ok(out)
}

/// Every admissible k modulo 4(m²+n²)².
pub fn solve_k(a: i64, m: i64, n: i64) -> Result<Vec<i64>> {
    let p = ParamConfig::new(a, m, n, 0)?.period();
    solve_k_range(a, m, n, 0, p)
}

/// The thirteen coefficients of the ansatz
/// u = Bt³+Ct²+Dt+E, v = Bt³+Ct²+Ft+G, x = Ht²+It+J, y = Kt²+Lt+M, p = At+k.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(non_snake_case)]
pub struct CoefficientRecord {
    pub A: Rational,
    pub B: Rational,
    pub C: Rational,
    pub D: Rational,
    pub E: Rational,
    pub F: Rational,
    pub G: Rational,
    pub H: Rational,
    pub I: Rational,
    pub J: Rational,
    pub K: Rational,
    pub L: Rational,
    pub M: Rational,
}

fn q(n: i64) -> Rational {
    crate::arith::rat(n)
}

#[allow(non_snake_case)]
impl CoefficientRecord {
    /// Closed forms for rational a, k (m, n integers).
    pub fn from_parts(a: &Rational, m: i64, n: i64, k: &Rational) -> Self {
        let (mm, nn) = (q(m), q(n));
        let A = &mm * &mm + &nn * &nn;
        let A2 = &A * &A;
        let B = &A2 * &A;
        let C = &A2 * (a * q(2) + k * q(3) + q(2));
        let D = &A * (a * a + a * k * q(4) + k * k * q(3) + a * q(3) + k * q(4)) + &A * frac(5, 4);
        let E = (a * k + k * k + a + k * q(2)) * (a + k) + (a * q(2) + k * q(5)) * frac(1, 4);
        let F = &D - &A * frac(1, 2);
        let G = &E - k * frac(1, 2);
        let H = q(4 * n * m * (n * n - m * m));
        let K = q(m.pow(4) - 6 * m * m * n * n + n.pow(4));
        let s = a + k * q(2) + q(1);
        let I = &H * &s / &A;
        let L = &K * &s / &A;
        let kk = k * (k + a + q(1));
        let J = q(n * n - m * m) * (&kk * q(4 * m * n) + a * q(m * m + 2 * m * n - n * n)) / &A2;
        let M = q(m * m + 2 * m * n - n * n)
            * (&kk * q(m * m - 2 * m * n - n * n) - a * q(2 * m * n))
            / &A2;
        CoefficientRecord {
            A,
            B,
            C,
            D,
            E,
            F,
            G,
            H,
            I,
            J,
            K,
            L,
            M,
        }
    }

    pub fn from_config(cfg: &ParamConfig) -> Self {
        Self::from_parts(
            &q(cfg.a),
            cfg.m,
            cfg.n,
            &Rational::from_integer(cfg.k.clone()),
        )
    }

    /// lhs − rhs of the five equations fixing (B..G); all zero for the closed forms.
    pub fn residuals_uv(&self, a: &Rational, k: &Rational) -> [Rational; 5] {
        let Self {
            A,
            B,
            C,
            D,
            E,
            F,
            G,
            ..
        } = self;
        let two = q(2);
        let [l1, l2, l3, l4, l5] = shared_lhs(A, a, k);
        [
            l1 - &two * B * (D - F),
            l2 - (&two * B * E - &two * B * G + &two * C * D - &two * C * F),
            l3 - (&two * C * E - &two * C * G + D * D - F * F),
            l4 - (&two * D * E + D * a - &two * F * G - F * a),
            l5 - (E - G) * (E + a + G),
        ]
    }

    /// lhs − rhs of the five equations fixing (H..M); the t² equation carries +I².
    pub fn residuals_xy(&self, a: &Rational, k: &Rational) -> [Rational; 5] {
        let Self {
            A,
            H,
            I,
            J,
            K,
            L,
            M,
            ..
        } = self;
        let two = q(2);
        let [l1, l2, l3, l4, l5] = shared_lhs(A, a, k);
        [
            l1 - (H * H + K * K),
            l2 - (&two * I * H + &two * K * L),
            l3 - (&two * H * J + H * a + &two * K * M + K * a + L * L + I * I),
            l4 - (&two * I * J + &two * L * M + L * a + I * a),
            l5 - (J * J + J * a + M * M + M * a),
        ]
    }
}

#[allow(non_snake_case)]
/// Coefficients of (At+k)(At+k+a)(At+k+a+1)(At+k+1) in t⁴, t³, t², t, 1.
fn shared_lhs(A: &Rational, a: &Rational, k: &Rational) -> [Rational; 5] {
    let one = q(1);
    let A2 = A * A;
    [
        &A2 * &A2,
        q(2) * &A2 * A * (a + k * q(2) + &one),
        &A2 * (a * a + a * k * q(6) + k * k * q(6) + a * q(3) + k * q(6) + &one),
        A * (a + k * q(2) + &one) * (a * k * q(2) + k * k * q(2) + a + k * q(2)),
        k * (k + &one) * (a + k + &one) * (a + k),
    ]
}

/// The family in T (after t = 4(m²+n²)T).
#[derive(Clone, Debug, PartialEq)]
pub struct PolySolution {
    pub config: ParamConfig,
    pub coefficients: CoefficientRecord,
    pub tuple: SolutionTuple<Poly>,
}

impl PolySolution {
    pub fn is_integral(&self) -> bool {
        self.tuple.entries().iter().all(|(_, p)| p.is_integral())
    }
}

/// Builds the family without checking the congruences (coefficients may be rational).
pub fn build_family_unchecked(cfg: &ParamConfig) -> Result<PolySolution> {
    let c = CoefficientRecord::from_config(cfg);
    let tv = Var::T;
    // t = 4A·T
    let t = Poly::x(tv).scale(&(&c.A * q(4)));
    let con = |x: &Rational| Poly::constant(tv, x.clone());
    let k = Rational::from_integer(cfg.k.clone());
    let a = q(cfg.a);
    let t2 = &t * &t;
    let t3 = &t2 * &t;
    let p = &t.scale(&c.A) + &con(&k);
    let qq = p.plus_scalar(&q(1));
    let z = &p * &p.plus_scalar(&(&a + q(1)));
    let cubic = &t3.scale(&c.B) + &t2.scale(&c.C);
    let u = &(&cubic + &t.scale(&c.D)) + &con(&c.E);
    let v = &(&cubic + &t.scale(&c.F)) + &con(&c.G);
    let x = &(&t2.scale(&c.H) + &t.scale(&c.I)) + &con(&c.J);
    let y = &(&t2.scale(&c.K) + &t.scale(&c.L)) + &con(&c.M);
    let form = QuadraticForm::from_int(cfg.a)?;
    Ok(PolySolution {
        config: cfg.clone(),
        coefficients: c,
        tuple: SolutionTuple::new(form, [z, x, y, u, v, p, qq]),
    })
}

/// Builds the integer family; fails if k violates the parity rule or a congruence.
pub fn build_family(cfg: &ParamConfig) -> Result<PolySolution> {
    let st = congruence_status(cfg);
    if !st.holds() {
        let mut failed: Vec<&str> = Vec::new();
        if !st.parity {
            failed.push(if cfg.a % 2 == 0 {
                "k ≡ 0 (mod 4) for even a"
            } else {
                "k ≡ 2 (mod 4) for odd a"
            });
        }
        if !st.first {
            failed.push("first congruence (numerator of J)");
        }
        if !st.second {
            failed.push("second congruence (numerator of M)");
        }
        let msg: String = failed.join(", ");
        return Err(Error::CongruenceFailure(format!(
            "(a,m,n,k) = ({},{},{},{}): {msg}",
            cfg.a, cfg.m, cfg.n, cfg.k
        )));
    }
    let sol = build_family_unchecked(cfg)?;
    if !sol.is_integral() {
        return Err(Error::CongruenceFailure(format!(
            "(a,m,n,k) = ({},{},{},{}): coefficients not integral",
            cfg.a, cfg.m, cfg.n, cfg.k
        )));
    }
    Ok(sol)
}

/// All three differences vanish as polynomials in T.
pub fn verify_identity(sol: &PolySolution) -> bool {
    let t = &sol.tuple;
    let f = |x: &Poly| t.form.eval(x);
    let fz = f(&t.z);
    identity_certificate(&fz.minus(&f(&t.x).plus(&f(&t.y))))
        && identity_certificate(&fz.minus(&f(&t.u).minus(&f(&t.v))))
        && identity_certificate(&fz.minus(&f(&t.p).times(&f(&t.q))))
}

/// The configuration with k replaced by residue + period·S.
pub fn shifted(cfg: &ParamConfig, s: &BigInt) -> ParamConfig {
    let k = &cfg.k + s * BigInt::from(cfg.period());
    ParamConfig { k, ..cfg.clone() }
}
