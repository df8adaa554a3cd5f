use num_bigint::BigInt;

use crate::arith::QuadIntSqrt2;

/// Which seed is multiplied: a+b√2 (`Plus`) or −a+b√2 (`Minus`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellParams {
    pub a: BigInt,
    pub b: BigInt,
    pub m: u32,
    pub sign: Sign,
}

impl PellParams {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, m: u32, sign: Sign) -> Self {
        PellParams {
            a: a.into(),
            b: b.into(),
            m,
            sign,
        }
    }
}

/// (X, Y) with X + Y√2 = (1+√2)^(2m+1)·(±a + b√2), so X² − 2Y² = 2b² − a².
pub fn pell_solutions(params: &PellParams) -> (BigInt, BigInt) {
    let a = match params.sign {
        Sign::Plus => params.a.clone(),
        Sign::Minus => -params.a.clone(),
    };
    let seed = QuadIntSqrt2::new(a, params.b.clone());
    let w = &QuadIntSqrt2::unit().pow(2 * params.m + 1) * &seed;
    (w.r, w.s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sol(a: i64, b: i64, m: u32, sign: Sign) -> (BigInt, BigInt) {
        pell_solutions(&PellParams::new(a, b, m, sign))
    }

    #[test]
    fn low_levels() {
        let (a, b) = (3i64, -5i64);
        assert_eq!(
            sol(a, b, 0, Sign::Plus),
            ((a + 2 * b).into(), (a + b).into())
        );
        assert_eq!(
            sol(a, b, 1, Sign::Plus),
            ((7 * a + 10 * b).into(), (5 * a + 7 * b).into())
        );
        assert_eq!(
            sol(a, b, 2, Sign::Plus),
            ((41 * a + 58 * b).into(), (29 * a + 41 * b).into())
        );
        assert_eq!(
            sol(a, b, 1, Sign::Minus),
            ((-7 * a + 10 * b).into(), (-5 * a + 7 * b).into())
        );
    }

    #[test]
    fn norm_equation_holds() {
        for a in [-7i64, 1, 4, 50] {
            for b in [-50i64, 0, 3] {
                for m in 0..=6 {
                    for s in [Sign::Plus, Sign::Minus] {
                        let (x, y) = sol(a, b, m, s);
                        assert_eq!(&x * &x - 2 * &y * &y, BigInt::from(2 * b * b - a * a));
                    }
                }
            }
        }
    }
}
