//! JSON encodings shared by the subcommands. Every exact value is a decimal
//! string (`"-5/17"`, `"72"`), so no reader has to guess at number widths.

use num_bigint::BigInt;
use num_integer::Integer;
use polysys_core::arith::{Poly, RatFunc, Rational, Var};
use polysys_core::forms::Form;
use polysys_core::verify::{verify_system, SolutionTuple, VerificationReport};
use serde_json::{json, Map, Value};

use crate::args::FormSpec;

pub fn rat(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn int(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn form_label(form: &Form) -> String {
    FormSpec(form.clone()).to_string()
}

/// Coefficients (constant term first) of the numerator and denominator,
/// scaled to coprime integers with a positive leading denominator coefficient.
pub fn ratfunc(f: &RatFunc) -> Value {
    let all = f.numer().coeffs().iter().chain(f.denom().coeffs());
    let lcm = all
        .clone()
        .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let scaled = |p: &Poly| -> Vec<BigInt> {
        p.coeffs()
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect()
    };
    let (mut num, mut den) = (scaled(f.numer()), scaled(f.denom()));
    let g = num
        .iter()
        .chain(&den)
        .fold(BigInt::from(0), |acc, c| acc.gcd(c));
    if g > BigInt::from(1) {
        for c in num.iter_mut().chain(den.iter_mut()) {
            *c /= &g;
        }
    }
    if num.is_empty() {
        num.push(BigInt::from(0));
    }
    json!({
        "num": num.iter().map(int).collect::<Vec<_>>(),
        "den": den.iter().map(int).collect::<Vec<_>>(),
    })
}

/// `{variable, entries: name → {num, den}}`.
pub fn symbolic<'a>(var: Var, entries: impl IntoIterator<Item = (&'a str, RatFunc)>) -> Value {
    let map: Map<String, Value> = entries
        .into_iter()
        .map(|(name, f)| (name.to_string(), ratfunc(&f)))
        .collect();
    json!({ "variable": var.to_string(), "entries": map })
}

pub fn poly_family(var: Var, tuple: &SolutionTuple<Poly>) -> Value {
    symbolic(
        var,
        tuple
            .entries()
            .into_iter()
            .map(|(n, p)| (n, RatFunc::from_poly(p.clone()))),
    )
}

pub fn entries(t: &SolutionTuple<Rational>) -> Vec<Value> {
    t.entries().into_iter().map(|(_, v)| rat(v)).collect()
}

/// A verified tuple: `{at?, form, tuple, common_value, nontrivial, verified}`.
/// The flag is returned alongside so callers can set the exit status.
pub fn tuple_record(
    at: Option<(&str, Value)>,
    t: &SolutionTuple<Rational>,
) -> polysys_core::Result<(Value, bool)> {
    let rep = verify_system(t)?;
    let mut m = Map::new();
    if let Some((name, v)) = at {
        m.insert("at".into(), json!({ name: v }));
    }
    m.insert("form".into(), Value::String(form_label(&t.form)));
    m.insert("tuple".into(), Value::Array(entries(t)));
    m.insert("common_value".into(), rat(&rep.common_value));
    m.insert("nontrivial".into(), Value::Bool(rep.all_nontrivial()));
    m.insert("verified".into(), Value::Bool(rep.verdict));
    Ok((Value::Object(m), rep.verdict))
}

pub fn report(t: &SolutionTuple<Rational>, rep: &VerificationReport) -> Value {
    let nontrivial: Map<String, Value> = rep
        .nontrivial
        .iter()
        .map(|(n, ok)| (n.to_string(), Value::Bool(*ok)))
        .collect();
    json!({
        "form": form_label(&t.form),
        "tuple": entries(t),
        "sum": rep.sum,
        "difference": rep.difference,
        "product": rep.product,
        "quotient": rep.quotient,
        "common_value": rat(&rep.common_value),
        "nontrivial": nontrivial,
        "verdict": rep.verdict,
    })
}
