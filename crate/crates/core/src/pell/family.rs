use alloc::format;

use num_bigint::BigInt;

use crate::arith::{frac, rat, Poly, Rational, Var};
use crate::error::{Error, Result};
use crate::forms::QuadraticForm;
use crate::verify::SolutionTuple;

use super::rules::{Construction, ResidueRule};

/// A one-parameter integer family in t, with the values it was derived from.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadFamily {
    pub a: i64,
    pub rule: ResidueRule,
    pub offset: i64,
    /// c(t) = c_modulus·t + offset.
    pub c: Poly,
    pub b1: Poly,
    pub b2: Poly,
    /// b = y − x, equal to (b₁b₂ + e)/d.
    pub b: Poly,
    pub tuple: SolutionTuple<Poly>,
}

fn k(n: i64) -> Poly {
    Poly::constant(Var::LOWER_T, rat(n))
}

/// Builds the family for `a` from `rule` with the `offset_choice`-th c-offset.
pub fn build_family(a: i64, rule: &ResidueRule, offset_choice: usize) -> Result<QuadFamily> {
    if !rule.applies(a) {
        return Err(Error::RuleMismatch(format!(
            "a = {a} is not ≡ {} (mod {})",
            rule.a_residue, rule.a_modulus
        )));
    }
    let offset = *rule.c_offsets.get(offset_choice).ok_or_else(|| {
        Error::RuleMismatch(format!(
            "offset index {offset_choice} out of range ({} offsets)",
            rule.c_offsets.len()
        ))
    })?;
    let t = Poly::x(Var::LOWER_T);
    let c = &t.scale(&rat(rule.c_modulus)) + &k(offset);
    let ka = k(a);
    let cc = &c * &c;
    let two_c = c.scale(&rat(2));
    let con = rule.construction;

    // 4c² + 2ac (shared by β and the u,v cubic)
    let quad = &cc.scale(&rat(4)) + &c.scale(&rat(2 * a));
    let (z, p, q, beta, x, y, uv_core) = match con {
        Construction::PlusLevel1 | Construction::PlusLevel2 => {
            let z = &two_c * &(&two_c + &k(a + 1));
            let p = two_c.clone();
            let q = &two_c + &k(1);
            let (beta, x, y) = if con == Construction::PlusLevel1 {
                let beta = (&(&quad + &two_c) + &k(-3 * a)).scale(&frac(1, 5));
                let x = &ka.scale(&rat(2)) + &beta.scale(&rat(3));
                let y = &ka.scale(&rat(2)) + &beta.scale(&rat(4));
                (beta, x, y)
            } else {
                let beta = (&(&quad + &two_c) + &k(-20 * a)).scale(&frac(1, 29));
                let x = &ka.scale(&rat(14)) + &beta.scale(&rat(20));
                let y = &ka.scale(&rat(14)) + &beta.scale(&rat(21));
                (beta, x, y)
            };
            let core = &(&(&quad + &k(a)) + &c.scale(&rat(4))) * &(&two_c + &ka);
            (z, p, q, beta, x, y, core)
        }
        Construction::MinusLevel1 => {
            let z = &(&two_c + &k(-1)) * &(&two_c + &ka);
            let p = &two_c + &k(-1);
            let q = two_c.clone();
            let beta = (&(&quad - &two_c) + &k(3 * a)).scale(&frac(1, 5));
            let x = &ka.scale(&rat(-3)) + &beta.scale(&rat(3));
            let y = &ka.scale(&rat(-3)) + &beta.scale(&rat(4));
            let core = &(&(&quad + &k(-a)) - &c.scale(&rat(4))) * &(&two_c + &ka);
            (z, p, q, beta, x, y, core)
        }
    };
    let u = &uv_core + &(&ka + &c.scale(&rat(5))).scale(&frac(1, 2));
    let v = &uv_core + &(&ka + &c.scale(&rat(3))).scale(&frac(1, 2));

    let b1 = &two_c + &k(con.b1_shift());
    let b2 = &(&b1 + &ka) + &k(con.b2_shift());
    let (d, e) = con.b_quotient();
    let b = (&(&b1 * &b2) + &k(e)).scale(&frac(1, d));
    debug_assert_eq!(b, beta);

    let form = QuadraticForm::from_int(a)?;
    let tuple = SolutionTuple::new(form, [z, x, y, u, v, p, q]);
    for (name, e) in tuple.entries() {
        if !e.is_integral() {
            return Err(Error::CongruenceFailure(format!(
                "{name}(t) = {e} has non-integral coefficients for a = {a}, c ≡ {offset} (mod {})",
                rule.c_modulus
            )));
        }
    }
    Ok(QuadFamily {
        a,
        rule: rule.clone(),
        offset,
        c,
        b1,
        b2,
        b,
        tuple,
    })
}

/// The family's tuple at the integer t.
pub fn instantiate(family: &QuadFamily, t: &BigInt) -> SolutionTuple<Rational> {
    let t = Rational::from_integer(t.clone());
    family
        .tuple
        .map(|p| Ok(p.eval(&t)))
        .expect("polynomial evaluation is total")
}
