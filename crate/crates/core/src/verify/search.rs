//! Exhaustive oracle for f(z)=f(x)+f(y)=f(u)−f(v)=f(p)f(q), f(X)=X(X+a), a ∈ Z.
//!
//! No construction from the generators is used. Every entry is reported in
//! its canonical representative 2X+a ≥ 0 (f(X) = f(−X−a)), and only
//! nontrivial tuples (no entry with f = 0) are kept.

use alloc::format;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::forms::QuadraticForm;

use super::SolutionTuple;

/// Table of canonical f-values: value → X, with X ascending in `order`.
struct ValueTable {
    order: Vec<(i128, i128)>,
    index: HashMap<i128, i128>,
}

impl ValueTable {
    /// All X with 2X+a ≥ 0 and f(X) ≤ max_abs (f is increasing on that range).
    fn build(a: i128, max_abs: i128) -> Self {
        let mut order = Vec::new();
        let mut index = HashMap::new();
        let mut x = (-a).div_euclid(2) + i128::from((-a).rem_euclid(2) != 0);
        loop {
            let v = x * (x + a);
            if v > max_abs {
                break;
            }
            order.push((x, v));
            index.insert(v, x);
            x += 1;
        }
        ValueTable { order, index }
    }
}

fn quad_a(form: &QuadraticForm) -> Result<i128> {
    let a = form.a();
    if !a.is_integer() {
        return Err(Error::InvalidParameter(format!(
            "search needs an integer a, got {a}"
        )));
    }
    a.to_integer()
        .to_i128()
        .filter(|a| a.abs() <= 1 << 40)
        .ok_or_else(|| Error::InvalidParameter(format!("a = {a} is out of search range")))
}

fn pairs_sum(t: &ValueTable, f: i128) -> Vec<(i128, i128)> {
    let mut out = Vec::new();
    for &(x, fx) in &t.order {
        if fx == 0 {
            continue;
        }
        let rest = f - fx;
        if let Some(&y) = t.index.get(&rest) {
            if rest != 0 && x <= y {
                out.push((x, y));
            }
        }
    }
    out
}

fn pairs_product(t: &ValueTable, f: i128) -> Vec<(i128, i128)> {
    let mut out = Vec::new();
    for &(p, fp) in &t.order {
        if fp == 0 || f % fp != 0 {
            continue;
        }
        if let Some(&q) = t.index.get(&(f / fp)) {
            if p <= q {
                out.push((p, q));
            }
        }
    }
    out
}

/// (u, v) with f(u) − f(v) = f, from (U−V)(U+V) = 4f where U = 2u+a, V = 2v+a.
fn pairs_difference(a: i128, f: i128) -> Vec<(i128, i128)> {
    let n = 4 * f;
    let m = n.abs();
    let mut out = Vec::new();
    let mut d = 1i128;
    while d * d <= m {
        if m % d == 0 {
            let e = m / d;
            if (d + e) % 2 == 0 {
                let (big, small) = ((d + e) / 2, (e - d) / 2);
                let (uu, vv) = if n > 0 { (big, small) } else { (small, big) };
                if (uu - a) % 2 == 0 && (vv - a) % 2 == 0 && uu != a.abs() && vv != a.abs() {
                    out.push(((uu - a) / 2, (vv - a) / 2));
                }
            }
        }
        d += 1;
    }
    out.sort();
    out
}

/// Nontrivial canonical tuples with lo ≤ z ≤ hi; shards over z-ranges concatenate.
pub fn brute_force_range(form: &QuadraticForm, lo: u64, hi: u64) -> Result<Vec<SolutionTuple>> {
    let a = quad_a(form)?;
    let lo = i128::from(lo.max(1));
    let hi = i128::from(hi);
    if hi < lo {
        return Ok(Vec::new());
    }
    let max_abs = (lo..=hi)
        .map(|z| (z * (z + a)).abs())
        .max()
        .unwrap_or(0)
        .max(a * a / 4 + 1);
    let table = ValueTable::build(a, max_abs);
    let r = |x: i128| Rational::from_integer(BigInt::from(x));
    let mut out = Vec::new();
    for z in lo..=hi {
        let f = z * (z + a);
        if f == 0 {
            continue;
        }
        let sums = pairs_sum(&table, f);
        if sums.is_empty() {
            continue;
        }
        let prods = pairs_product(&table, f);
        if prods.is_empty() {
            continue;
        }
        let diffs = pairs_difference(a, f);
        for &(x, y) in &sums {
            for &(u, v) in &diffs {
                for &(p, q) in &prods {
                    out.push(SolutionTuple::new(
                        form.clone(),
                        [z, x, y, u, v, p, q].map(r),
                    ));
                }
            }
        }
    }
    Ok(out)
}

pub fn brute_force(form: &QuadraticForm, bound: u64) -> Result<Vec<SolutionTuple>> {
    if bound < 1 {
        return Err(Error::InvalidParameter("bound must be >= 1".into()));
    }
    brute_force_range(form, 1, bound)
}

/// Canonical representative of X under X ↦ −X−a.
pub fn canonical(a: &Rational, x: &Rational) -> Rational {
    let two = Rational::from_integer(BigInt::from(2));
    if &two * x + a < Rational::from_integer(BigInt::from(0)) {
        -x - a
    } else {
        x.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::verify::verify_system;

    fn quad(a: i64) -> QuadraticForm {
        QuadraticForm::from_int(a).unwrap()
    }

    fn has(list: &[SolutionTuple], e: [i64; 7]) -> bool {
        let e = e.map(rat);
        list.iter().any(|t| {
            [&t.z, &t.x, &t.y, &t.u, &t.v, &t.p, &t.q]
                .into_iter()
                .eq(e.iter())
        })
    }

    #[test]
    fn finds_a_one_seed() {
        let found = brute_force(&quad(1), 100).unwrap();
        assert!(has(&found, [8, 5, 6, 36, 35, 2, 3]));
        for t in &found {
            let rep = verify_system(t).unwrap();
            assert!(rep.verdict && rep.all_nontrivial(), "{t:?}");
        }
    }

    #[test]
    fn tiny_bound_is_sound() {
        for t in brute_force(&quad(1), 3).unwrap() {
            assert!(verify_system(&t).unwrap().verdict);
        }
    }

    #[test]
    fn shards_concatenate() {
        let whole = brute_force(&quad(-3), 60).unwrap();
        let mut parts = brute_force_range(&quad(-3), 1, 17).unwrap();
        parts.extend(brute_force_range(&quad(-3), 18, 60).unwrap());
        assert_eq!(whole, parts);
        for t in &whole {
            assert!(verify_system(t).unwrap().verdict);
        }
    }

    #[test]
    fn difference_pairs_are_complete() {
        // compare with a direct scan for a few values
        for a in [-4i128, 1, 5] {
            for z in 1..40i128 {
                let f = z * (z + a);
                if f == 0 {
                    continue;
                }
                let mut slow = Vec::new();
                let lim = f.abs() + a.abs() + 2;
                for u in -lim..=lim {
                    if 2 * u + a < 0 {
                        continue;
                    }
                    for v in -lim..=lim {
                        if 2 * v + a < 0 {
                            continue;
                        }
                        let (fu, fv) = (u * (u + a), v * (v + a));
                        if fu != 0 && fv != 0 && fu - fv == f {
                            slow.push((u, v));
                        }
                    }
                }
                slow.sort();
                assert_eq!(pairs_difference(a, f), slow, "a={a} z={z}");
            }
        }
    }

    #[test]
    fn canonical_representative() {
        assert_eq!(canonical(&rat(1), &rat(-9)), rat(8));
        assert_eq!(canonical(&rat(1), &rat(8)), rat(8));
        assert_eq!(canonical(&rat(4), &rat(-2)), rat(-2));
    }

    #[test]
    fn rejects_rational_a() {
        let f = QuadraticForm::new(crate::arith::frac(1, 2)).unwrap();
        assert!(brute_force(&f, 5).is_err());
    }
}
