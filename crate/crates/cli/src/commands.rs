use std::fs;
use std::io::Read;
use std::thread;

use num_bigint::BigInt;
use polysys_core::arith::{parse_rational, rat, Rational, Var};
use polysys_core::curve::compose_full;
use polysys_core::forms::{
    hirose_condition, hirose_product_identity, hirose_search_range, polygonal, QuadraticForm,
};
use polysys_core::param::{
    build_family as build_param_family, solve_k, CoefficientRecord, ParamConfig,
};
use polysys_core::pell::{
    build_family, instantiate, level1_rules, ResidueRule, ResidueTable, RuleSource,
};
use polysys_core::rational_param::{solve_rational, FiveParams};
use polysys_core::verify::{
    brute_force_range, verify_polygonal_display, verify_system, SolutionTuple, POLYGONAL_DISPLAY,
};
use polysys_core::Error;
use serde_json::{json, Map, Value};

use crate::args::{
    Classes, Command, FormSpec, GenerateCubic, GenerateParam, GenerateQuad, GenerateRational,
    Polygonal, Search, Verify,
};
use crate::error::{CliError, CliResult};
use crate::json;

/// Environment variable naming a residue table file to load instead of the shipped one.
pub const TABLE_ENV: &str = "POLYSYS_RESIDUE_TABLE";

/// Largest m²+n² for which generate-param scans all 4(m²+n²)² residues.
const MAX_SCAN_A: i64 = 1000;

/// What a subcommand produced; `ok` is false if any check in it failed.
#[derive(Debug)]
pub struct Outcome {
    pub value: Value,
    pub ok: bool,
}

impl Outcome {
    fn new(value: Value, ok: bool) -> Self {
        Outcome { value, ok }
    }
}

pub fn run(cmd: &Command) -> CliResult<Outcome> {
    match cmd {
        Command::GenerateQuad(a) => generate_quad(a),
        Command::GenerateParam(a) => generate_param(a),
        Command::GenerateRational(a) => generate_rational(a),
        Command::GenerateCubic(a) => generate_cubic(a),
        Command::Verify(a) => verify(a),
        Command::Search(a) => search(a),
        Command::Classes(a) => classes(a),
        Command::Polygonal(a) => polygonal_cmd(a),
    }
}

fn read_source(path: &str) -> CliResult<String> {
    let io = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io)
    }
}

pub fn load_table() -> CliResult<ResidueTable> {
    match std::env::var(TABLE_ENV) {
        Ok(path) => {
            log::info!("loading residue table from {path}");
            Ok(ResidueTable::parse(&read_source(&path)?)?)
        }
        Err(_) => Ok(ResidueTable::builtin()?),
    }
}

fn source_label(s: RuleSource) -> &'static str {
    match s {
        RuleSource::M1 => "level-1",
        RuleSource::M2 => "level-2 table",
    }
}

fn rule_json(rule: &ResidueRule, offset: i64) -> Value {
    json!({
        "construction": format!("{:?}", rule.construction),
        "source": source_label(rule.source()),
        "a_class": format!("{} mod {}", rule.a_residue, rule.a_modulus),
        "c": format!("{} t + {}", rule.c_modulus, offset),
        "c_offsets": rule.c_offsets.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

fn records<I, T>(
    items: I,
    mut each: impl FnMut(T) -> CliResult<(Value, bool)>,
) -> CliResult<(Vec<Value>, bool)>
where
    I: IntoIterator<Item = T>,
{
    let mut out = Vec::new();
    let mut ok = true;
    for it in items {
        let (v, good) = each(it)?;
        ok &= good;
        out.push(v);
    }
    Ok((out, ok))
}

fn generate_quad(args: &GenerateQuad) -> CliResult<Outcome> {
    let form = QuadraticForm::from_int(args.a)?;
    let table = load_table()?;
    let rules = table.rules_for(args.a);
    if rules.is_empty() {
        return Err(Error::RuleMismatch(format!("no residue rule covers a = {}", args.a)).into());
    }
    let rule = rules.get(args.rule).ok_or_else(|| {
        CliError::Usage(format!(
            "--rule {} out of range: {} rule(s) apply to a = {}",
            args.rule,
            rules.len(),
            args.a
        ))
    })?;
    if args.offset >= rule.c_offsets.len() {
        return Err(CliError::Usage(format!(
            "--offset {} out of range: the rule has {} c-offsets",
            args.offset,
            rule.c_offsets.len()
        )));
    }
    let fam = build_family(args.a, rule, args.offset)?;
    let (tuples, ok) = records(args.t.iter(), |t| {
        let tup = instantiate(&fam, &BigInt::from(t));
        Ok(json::tuple_record(
            Some(("t", Value::String(t.to_string()))),
            &tup,
        )?)
    })?;
    let value = json!({
        "form": json::form_label(&form.into()),
        "rule": rule_json(rule, fam.offset),
        "rule_count": rules.len(),
        "family": json::poly_family(Var::LOWER_T, &fam.tuple),
        "tuples": tuples,
    });
    Ok(Outcome::new(value, ok))
}

fn coefficients(c: &CoefficientRecord) -> Value {
    let named = [
        ("A", &c.A),
        ("B", &c.B),
        ("C", &c.C),
        ("D", &c.D),
        ("E", &c.E),
        ("F", &c.F),
        ("G", &c.G),
        ("H", &c.H),
        ("I", &c.I),
        ("J", &c.J),
        ("K", &c.K),
        ("L", &c.L),
        ("M", &c.M),
    ];
    Value::Object(
        named
            .iter()
            .map(|(n, v)| (n.to_string(), json::rat(v)))
            .collect(),
    )
}

fn generate_param(args: &GenerateParam) -> CliResult<Outcome> {
    let probe = ParamConfig::new(args.a, args.m, args.n, 0)?;
    let ks: Vec<BigInt> = match &args.k {
        Some(k) => vec![k.clone()],
        None => {
            if probe.big_a() > MAX_SCAN_A {
                return Err(CliError::Usage(format!(
                    "m²+n² = {} is above the scan limit {MAX_SCAN_A}; pass --k",
                    probe.big_a()
                )));
            }
            solve_k(args.a, args.m, args.n)?
                .into_iter()
                .map(BigInt::from)
                .collect()
        }
    };
    let mut ok = true;
    let mut families = Vec::new();
    for k in &ks {
        let cfg = ParamConfig::new(args.a, args.m, args.n, k.clone())?;
        let sol = build_param_family(&cfg)?;
        let (tuples, good) = records(args.at.iter(), |t| {
            let tv = rat(t);
            let tup = sol.tuple.map(|p| Ok(p.eval(&tv)))?;
            Ok(json::tuple_record(
                Some(("T", Value::String(t.to_string()))),
                &tup,
            )?)
        })?;
        ok &= good;
        families.push(json!({
            "k": json::int(k),
            "coefficients": coefficients(&sol.coefficients),
            "family": json::poly_family(Var::T, &sol.tuple),
            "tuples": tuples,
        }));
    }
    let value = json!({
        "form": json::form_label(&QuadraticForm::from_int(args.a)?.into()),
        "a": args.a.to_string(),
        "m": args.m.to_string(),
        "n": args.n.to_string(),
        "modulus": probe.period().to_string(),
        "residues": ks.iter().map(json::int).collect::<Vec<_>>(),
        "families": families,
    });
    Ok(Outcome::new(value, ok))
}

fn generate_rational(args: &GenerateRational) -> CliResult<Outcome> {
    let params = FiveParams {
        a: args.a.0.clone(),
        k: args.k.0.clone(),
        t: args.t.0.clone(),
        w: args.w.0.clone(),
        q: args.q.0.clone(),
        m: args.m.0.clone(),
    };
    let tup = solve_rational(&params)?;
    let (record, ok) = json::tuple_record(None, &tup)?;
    let value = json!({
        "form": json::form_label(&tup.form),
        "params": {
            "k": json::rat(&params.k),
            "t": json::rat(&params.t),
            "w": json::rat(&params.w),
            "q": json::rat(&params.q),
            "m": json::rat(&params.m),
        },
        "tuples": [record],
    });
    Ok(Outcome::new(value, ok))
}

fn generate_cubic(args: &GenerateCubic) -> CliResult<Outcome> {
    let full = compose_full(args.a, args.b, args.m)?;
    let mut ok = true;
    let mut equations = Vec::new();
    for pair in full.pairs() {
        let holds = pair.is_solution(args.a, args.b)?;
        ok &= holds;
        equations.push(json!({
            "equation": format!("{:?}", pair.tag).to_lowercase(),
            "variable": pair.first.var().to_string(),
            "first": json::ratfunc(&pair.first),
            "second": json::ratfunc(&pair.second),
            "holds": holds,
        }));
    }
    let sym = full.symbolic()?;
    let names = polysys_core::curve::FULL_ENTRY_NAMES;
    let (tuples, good) = records(&args.specialize, |q| {
        let tup = full.specialize(&q.0)?;
        Ok(json::tuple_record(Some(("q", json::rat(&q.0))), &tup)?)
    })?;
    ok &= good;
    let form = polysys_core::forms::CubicForm::new(args.a, args.b)?;
    let value = json!({
        "form": json::form_label(&form.into()),
        "m": args.m,
        "family": json::symbolic(Var::LOWER_Q, names.iter().copied().zip(sym)),
        "equations": equations,
        "tuples": tuples,
    });
    Ok(Outcome::new(value, ok))
}

fn tuple_from_values(form: &FormSpec, vals: &[Rational]) -> CliResult<SolutionTuple> {
    let (main, rs) = match vals.len() {
        7 => (vals, None),
        9 => (&vals[..7], Some((vals[7].clone(), vals[8].clone()))),
        n => {
            return Err(CliError::Usage(format!(
                "expected 7 or 9 entries, found {n}"
            )))
        }
    };
    let entries: [Rational; 7] = main.to_vec().try_into().expect("seven entries");
    let t = SolutionTuple::new(form.0.clone(), entries);
    Ok(match rs {
        Some((r, s)) => t.with_quotient(r, s),
        None => t,
    })
}

/// Every object in `doc` carrying a string `form` and an array `tuple`.
fn collect_tuples(doc: &Value, out: &mut Vec<SolutionTuple>) -> CliResult<()> {
    match doc {
        Value::Object(m) => {
            if let (Some(Value::String(f)), Some(Value::Array(items))) =
                (m.get("form"), m.get("tuple"))
            {
                let form: FormSpec = f.parse().map_err(CliError::Usage)?;
                let vals = items
                    .iter()
                    .map(|v| {
                        v.as_str()
                            .and_then(parse_rational)
                            .ok_or_else(|| CliError::Usage(format!("bad tuple entry {v}")))
                    })
                    .collect::<CliResult<Vec<_>>>()?;
                out.push(tuple_from_values(&form, &vals)?);
            }
            for v in m.values() {
                collect_tuples(v, out)?;
            }
        }
        Value::Array(items) => {
            for v in items {
                collect_tuples(v, out)?;
            }
        }
        _ => {}
    }
    Ok(())
}

fn verify(args: &Verify) -> CliResult<Outcome> {
    let tuples = match (&args.form, &args.tuple, &args.input) {
        (Some(form), Some(tuple), None) => vec![tuple_from_values(form, &tuple.0)?],
        (None, None, Some(path)) => {
            let doc: Value = serde_json::from_str(&read_source(path)?)
                .map_err(|e| CliError::Usage(format!("{path}: invalid JSON: {e}")))?;
            let mut out = Vec::new();
            collect_tuples(&doc, &mut out)?;
            if out.is_empty() {
                return Err(CliError::Usage(format!("{path}: no tuples found")));
            }
            out
        }
        _ => {
            return Err(CliError::Usage(
                "pass --form with --tuple, or --input".into(),
            ))
        }
    };
    let mut reports = Vec::new();
    let mut ok = true;
    for t in &tuples {
        let rep = verify_system(t)?;
        ok &= rep.verdict;
        reports.push(json::report(t, &rep));
    }
    let value = if args.input.is_none() {
        reports.pop().expect("one report")
    } else {
        json!({ "checked": reports.len(), "verdict": ok, "reports": reports })
    };
    Ok(Outcome::new(value, ok))
}

/// Splits 1..=bound into at most `jobs` contiguous shards, runs `work` on
/// each in its own thread and concatenates the results in shard order.
fn sharded<T: Send>(
    bound: u64,
    jobs: u32,
    work: impl Fn(u64, u64) -> polysys_core::Result<Vec<T>> + Sync,
) -> CliResult<Vec<T>> {
    let jobs = u64::from(jobs).clamp(1, bound.max(1));
    let size = bound.div_ceil(jobs);
    let shards: Vec<(u64, u64)> = (0..jobs)
        .map(|i| (i * size + 1, ((i + 1) * size).min(bound)))
        .filter(|(lo, hi)| lo <= hi)
        .collect();
    log::debug!("searching 1..={bound} in {} shard(s)", shards.len());
    let parts = thread::scope(|s| {
        let handles: Vec<_> = shards
            .iter()
            .map(|&(lo, hi)| {
                let work = &work;
                s.spawn(move || work(lo, hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect::<Vec<_>>()
    });
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

fn search(args: &Search) -> CliResult<Outcome> {
    let form = QuadraticForm::from_int(args.a)?;
    let found = sharded(args.bound, args.jobs, |lo, hi| {
        brute_force_range(&form, lo, hi)
    })?;
    let (tuples, ok) = records(&found, |t| Ok(json::tuple_record(None, t)?))?;
    let value = json!({
        "form": json::form_label(&form.into()),
        "bound": args.bound.to_string(),
        "count": tuples.len(),
        "tuples": tuples,
    });
    Ok(Outcome::new(value, ok))
}

fn classes(args: &Classes) -> CliResult<Outcome> {
    let modulus: i64 = args
        .modulus
        .parse()
        .map_err(|_| CliError::Usage(format!("unsupported modulus {}", args.modulus)))?;
    let (residues, source): (Vec<i64>, &str) = match modulus {
        5 => {
            let mut v: Vec<i64> = level1_rules().iter().map(|r| r.a_residue % 5).collect();
            v.sort_unstable();
            v.dedup();
            (v, "level-1 Pell construction, a mod 10 folded to a mod 5")
        }
        145 => (
            load_table()?.classes_mod_145(),
            "level-2 residue table, classes with a ≡ 2, 3 (mod 5)",
        ),
        58 => {
            let mut v: Vec<i64> = load_table()?.rows().iter().map(|r| r.a_residue).collect();
            v.sort_unstable();
            (v, "level-2 residue table, a classes as tabulated")
        }
        m => return Err(CliError::Usage(format!("unsupported modulus {m}"))),
    };
    let value = json!({
        "modulus": modulus.to_string(),
        "count": residues.len(),
        "residues": residues.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "source": source,
    });
    Ok(Outcome::new(value, true))
}

fn polygonal_cmd(args: &Polygonal) -> CliResult<Outcome> {
    match args {
        Polygonal::Value { n, k } => {
            let v = polygonal(*n, k)?;
            let value = json!({ "n": n.to_string(), "k": json::int(k), "value": json::int(&v) });
            Ok(Outcome::new(value, true))
        }
        Polygonal::Check { n, k, l } => {
            // Validates n before the boolean checks, which cannot report errors.
            polygonal(*n, k)?;
            let condition = hirose_condition(*n, k, l);
            let identity = hirose_product_identity(*n, k, l)?;
            let value = json!({
                "n": n.to_string(),
                "k": json::int(k),
                "l": json::int(l),
                "index_relation": condition,
                "product_identity": identity,
            });
            Ok(Outcome::new(value, condition && identity))
        }
        Polygonal::Search { n, bound, jobs } => {
            let pairs = sharded(*bound, *jobs, |lo, hi| hirose_search_range(*n, lo, hi))?;
            let rows: Vec<Value> = pairs
                .iter()
                .map(|(k, l)| json!({ "k": k.to_string(), "l": l.to_string() }))
                .collect();
            let value = json!({
                "n": n.to_string(),
                "bound": bound.to_string(),
                "count": rows.len(),
                "pairs": rows,
            });
            Ok(Outcome::new(value, true))
        }
        Polygonal::Display => {
            let rep = verify_polygonal_display();
            let p = |k: i64| polygonal(12, &BigInt::from(k));
            let mut values = Map::new();
            for (name, k) in polysys_core::verify::ENTRY_NAMES
                .iter()
                .zip(POLYGONAL_DISPLAY)
            {
                values.insert(
                    name.to_string(),
                    json!({ "index": k.to_string(), "value": json::int(&p(k)?) }),
                );
            }
            let value = json!({
                "n": "12",
                "entries": values,
                "sum": rep.sum,
                "difference": rep.difference,
                "product": rep.product,
                "common_value": json::int(&rep.common_value),
                "verdict": rep.verdict,
            });
            Ok(Outcome::new(value, rep.verdict))
        }
    }
}
