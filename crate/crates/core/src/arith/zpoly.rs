//! Dense integer polynomial kernels (ascending coefficients, trimmed).
//!
//! Everything heavy in the rational layer funnels through here so that the
//! inner loops only multiply and add `BigInt`s; rational normalization happens
//! once per result coefficient instead of once per operation.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub(crate) fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    if v.is_empty() {
        return v;
    }
    let mut g = content(&v);
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

/// Pseudo-remainder of `f` by `g` (g nonzero), scaled by powers of lc(g).
fn prem(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = f.to_vec();
    let dg = g.len() - 1;
    let lc = &g[dg];
    while r.len() > dg && !r.is_empty() {
        let dr = r.len() - 1;
        let lead = r[dr].clone();
        let shift = dr - dg;
        for c in r.iter_mut() {
            *c *= lc;
        }
        for (j, gc) in g.iter().enumerate() {
            r[shift + j] -= &lead * gc;
        }
        trim(&mut r);
        // keep the numbers from growing through the whole reduction
        if r.len() > 8 {
            r = primitive_keep_sign(r);
        }
    }
    r
}

fn primitive_keep_sign(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = content(&v);
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

/// Primitive gcd with positive leading coefficient; empty if both inputs vanish.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut f = primitive(a.to_vec());
    let mut g = primitive(b.to_vec());
    if f.len() < g.len() {
        core::mem::swap(&mut f, &mut g);
    }
    loop {
        if g.is_empty() {
            return f;
        }
        if g.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = primitive(prem(&f, &g));
        f = g;
        g = r;
    }
}

/// Exact quotient `a / b` over Z; `None` if `b` does not divide `a`.
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r: Vec<BigInt> = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let top = &r[i + db];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        for (j, bc) in b.iter().enumerate() {
            r[i + j] -= &c * bc;
        }
        q[i] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn gcd_of_shifted_squares() {
        // (x-1)(x+1) and (x+1)^2
        assert_eq!(gcd(&z(&[-1, 0, 1]), &z(&[1, 2, 1])), z(&[1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(gcd(&z(&[1, 0, 1]), &z(&[-1, 1])), z(&[1]));
    }

    #[test]
    fn exact_division_detects_remainder() {
        let p = mul(&z(&[3, 2]), &z(&[-5, 0, 7]));
        assert_eq!(exact_div(&p, &z(&[3, 2])), Some(z(&[-5, 0, 7])));
        assert_eq!(exact_div(&p, &z(&[1, 2])), None);
    }
}
