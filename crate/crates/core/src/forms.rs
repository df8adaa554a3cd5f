//! The polynomials f(X) = X(X+a), X(X+a)(X+b) and polygonal numbers.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{exact_sqrt, rat, Rational, RingElem};
use crate::error::{Error, Result};

/// f(X) = X(X+a) with a ≠ 0 (a may be rational).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    a: Rational,
}

impl QuadraticForm {
    pub fn new(a: Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::InvalidParameter("a must be nonzero".into()));
        }
        Ok(QuadraticForm { a })
    }

    pub fn from_int(a: i64) -> Result<Self> {
        Self::new(rat(a))
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn eval<R: RingElem>(&self, x: &R) -> R {
        x.times(&x.plus_scalar(&self.a))
    }
}

/// f(X) = X(X+a)(X+b) with a, b nonzero integers, a ≠ b.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CubicForm {
    a: i64,
    b: i64,
}

impl CubicForm {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a == 0 || b == 0 || a == b {
            return Err(Error::InvalidParameter(format!(
                "cubic form needs nonzero a != b, got a={a}, b={b}"
            )));
        }
        Ok(CubicForm { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn eval<R: RingElem>(&self, x: &R) -> R {
        x.times(&x.plus_scalar(&rat(self.a)))
            .times(&x.plus_scalar(&rat(self.b)))
    }
}

/// Either kind of form, for code that handles both.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    Quadratic(QuadraticForm),
    Cubic(CubicForm),
}

impl Form {
    pub fn eval<R: RingElem>(&self, x: &R) -> R {
        match self {
            Form::Quadratic(f) => f.eval(x),
            Form::Cubic(f) => f.eval(x),
        }
    }
}

impl From<QuadraticForm> for Form {
    fn from(f: QuadraticForm) -> Self {
        Form::Quadratic(f)
    }
}

impl From<CubicForm> for Form {
    fn from(f: CubicForm) -> Self {
        Form::Cubic(f)
    }
}

/// The k-th n-gonal number k((n−2)(k−1)+2)/2.
pub fn polygonal(n: i64, k: &BigInt) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "polygonal numbers need n >= 3, got {n}"
        )));
    }
    let twice: BigInt = k * (BigInt::from(n - 2) * (k - 1u32) + 2u32);
    let (q, r) = twice.div_rem(&BigInt::from(2));
    debug_assert!(r.is_zero());
    Ok(q)
}

/// (n−2)·P(n,k) − (n−4) = 2·P(n,l), evaluated literally.
pub fn hirose_condition(n: i64, k: &BigInt, l: &BigInt) -> bool {
    match (polygonal(n, k), polygonal(n, l)) {
        (Ok(pk), Ok(pl)) => (n - 2) * pk - (n - 4) == 2 * pl,
        _ => false,
    }
}

/// Pairs (k, l) with lo ≤ k ≤ hi, l ≥ 1 satisfying the Hirose condition.
///
/// For each k, l is the positive root of (n−2)l² − (n−4)l − R = 0 with
/// R = (n−2)P(n,k) − (n−4), accepted only when it is an exact integer.
pub fn hirose_search_range(n: i64, lo: u64, hi: u64) -> Result<Vec<(u64, u64)>> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "polygonal numbers need n >= 3, got {n}"
        )));
    }
    let n2 = BigInt::from(n - 2);
    let n4 = BigInt::from(n - 4);
    let mut out = Vec::new();
    for k in lo.max(1)..=hi {
        let pk = polygonal(n, &BigInt::from(k))?;
        let r = &n2 * pk - &n4;
        let disc = &n4 * &n4 + 4 * &n2 * &r;
        let Some(root) = exact_sqrt(&disc) else {
            continue;
        };
        let (l, rem) = (&n4 + root).div_rem(&(2 * &n2));
        if !rem.is_zero() || !l.is_positive() {
            continue;
        }
        if let Ok(l) = u64::try_from(&l) {
            out.push((k, l));
        }
    }
    Ok(out)
}

pub fn hirose_search(n: i64, bound: u64) -> Result<Vec<(u64, u64)>> {
    if bound < 1 {
        return Err(Error::InvalidParameter("bound must be >= 1".into()));
    }
    hirose_search_range(n, 1, bound)
}

/// P(n, P(n,k)) = P(n,k)·P(n,l): the identity the Hirose condition produces.
pub fn hirose_product_identity(n: i64, k: &BigInt, l: &BigInt) -> Result<bool> {
    let pk = polygonal(n, k)?;
    let ppk = polygonal(n, &pk)?;
    Ok(ppk == pk * polygonal(n, l)?)
}
