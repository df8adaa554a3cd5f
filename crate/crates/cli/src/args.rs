use std::fmt;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use polysys_core::arith::{parse_rational, Rational};
use polysys_core::forms::{CubicForm, Form, QuadraticForm};

#[derive(Parser, Debug)]
#[command(
    name = "polysys",
    version,
    about = "Generate and exactly verify solutions of f(z) = f(x)+f(y) = f(u)-f(v) = f(p)f(q) [= f(r)/f(s)]"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    pub output: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Integer tuples for f(X) = X(X+a) from the Pell-equation families.
    GenerateQuad(GenerateQuad),
    /// Residues k mod 4(m²+n²)² and the integer families in T they give.
    GenerateParam(GenerateParam),
    /// The rational tuple for f(X) = X(X+a), quotient included, from (k, t, w, q, m).
    GenerateRational(Box<GenerateRational>),
    /// The one-parameter family for f(X) = X(X+a)(X+b) from the m-th curve multiples.
    GenerateCubic(GenerateCubic),
    /// Check a tuple, or every tuple in a JSON document, exactly.
    Verify(Verify),
    /// Exhaustive search for f(X) = X(X+a) with 1 ≤ z ≤ bound.
    Search(Search),
    /// Residue classes of a known to admit the integer families.
    Classes(Classes),
    /// Polygonal numbers and the index relation behind the 12-gonal identity.
    #[command(subcommand)]
    Polygonal(Polygonal),
}

#[derive(Args, Debug)]
pub struct GenerateQuad {
    #[arg(long, allow_hyphen_values = true)]
    pub a: i64,
    /// Parameter values, `lo..hi` inclusive or a single value.
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub t: IntRange,
    /// Index into the rules that apply to a.
    #[arg(long, default_value_t = 0)]
    pub rule: usize,
    /// Index into the rule's c-offsets.
    #[arg(long, default_value_t = 0)]
    pub offset: usize,
}

#[derive(Args, Debug)]
pub struct GenerateParam {
    #[arg(long, allow_hyphen_values = true)]
    pub a: i64,
    #[arg(long)]
    pub m: i64,
    #[arg(long)]
    pub n: i64,
    /// Use this k instead of scanning all residues.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<BigInt>,
    /// Values of T to instantiate each family at.
    #[arg(long = "at", allow_hyphen_values = true, default_value = "0")]
    pub at: IntRange,
}

#[derive(Args, Debug)]
pub struct GenerateRational {
    #[arg(long, allow_hyphen_values = true)]
    pub a: RationalArg,
    #[arg(long, allow_hyphen_values = true)]
    pub k: RationalArg,
    #[arg(long, allow_hyphen_values = true)]
    pub t: RationalArg,
    #[arg(long, allow_hyphen_values = true)]
    pub w: RationalArg,
    #[arg(long, allow_hyphen_values = true)]
    pub q: RationalArg,
    #[arg(long, allow_hyphen_values = true)]
    pub m: RationalArg,
}

#[derive(Args, Debug)]
pub struct GenerateCubic {
    #[arg(long, allow_hyphen_values = true)]
    pub a: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub b: i64,
    /// Which multiple of the base points to pull back.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..=6))]
    pub m: u32,
    /// Also emit the exact tuple at q = VALUE (repeatable).
    #[arg(long, allow_hyphen_values = true)]
    pub specialize: Vec<Specialization>,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["tuple", "input"])))]
pub struct Verify {
    /// `quad:A` for X(X+A) or `cubic:a,b` for X(X+a)(X+b).
    #[arg(long, requires = "tuple")]
    pub form: Option<FormSpec>,
    /// z,x,y,u,v,p,q or z,x,y,u,v,p,q,r,s; entries may be fractions.
    #[arg(long, allow_hyphen_values = true, requires = "form")]
    pub tuple: Option<TupleArg>,
    /// JSON document (or `-` for stdin); every object with `form` and `tuple` is checked.
    #[arg(long, conflicts_with = "form")]
    pub input: Option<String>,
}

#[derive(Args, Debug)]
pub struct Search {
    #[arg(long, allow_hyphen_values = true)]
    pub a: i64,
    #[arg(long)]
    pub bound: u64,
    /// Worker threads; the z-range is split into contiguous shards.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=256))]
    pub jobs: u32,
}

#[derive(Args, Debug)]
pub struct Classes {
    /// 5, 145 or 58.
    #[arg(value_parser = ["5", "145", "58"])]
    pub modulus: String,
}

#[derive(Subcommand, Debug)]
pub enum Polygonal {
    /// The k-th n-gonal number.
    Value {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: BigInt,
    },
    /// Check (n−2)P(k) − (n−4) = 2P(l) and P(P(k)) = P(k)·P(l).
    Check {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: BigInt,
        #[arg(long)]
        l: BigInt,
    },
    /// All (k, l) with k ≤ bound satisfying the index relation.
    Search {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        bound: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=256))]
        jobs: u32,
    },
    /// Verify the 12-gonal identity built from (6568, 14686).
    Display,
}

/// `lo..hi` inclusive, or a single value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

/// Upper limit on the number of values a range may expand to.
pub const MAX_RANGE_LEN: i64 = 100_000;

impl IntRange {
    pub fn iter(self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let int = |x: &str| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| format!("{x:?} is not an integer"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (int(lo)?, int(hi)?),
            None => (int(s)?, int(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        if hi.abs_diff(lo) >= MAX_RANGE_LEN as u64 {
            return Err(format!(
                "range {lo}..{hi} has more than {MAX_RANGE_LEN} values"
            ));
        }
        Ok(IntRange { lo, hi })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RationalArg(pub Rational);

impl FromStr for RationalArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        parse_rational(s)
            .map(RationalArg)
            .ok_or_else(|| format!("{s:?} is not an integer or fraction n/d"))
    }
}

/// `q=VALUE`.
#[derive(Clone, Debug, PartialEq)]
pub struct Specialization(pub Rational);

impl FromStr for Specialization {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let value = s.strip_prefix("q=").ok_or("expected q=VALUE")?;
        Ok(Specialization(RationalArg::from_str(value)?.0))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FormSpec(pub Form);

impl FromStr for FormSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, rest) = s.split_once(':').ok_or("expected quad:A or cubic:a,b")?;
        let form: Form = match kind.trim() {
            "quad" => {
                let a = RationalArg::from_str(rest)?.0;
                QuadraticForm::new(a).map_err(|e| e.to_string())?.into()
            }
            "cubic" => {
                let (a, b) = rest.split_once(',').ok_or("expected cubic:a,b")?;
                let int = |x: &str| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|_| format!("{x:?} is not an integer"))
                };
                CubicForm::new(int(a)?, int(b)?)
                    .map_err(|e| e.to_string())?
                    .into()
            }
            other => return Err(format!("unknown form kind {other:?}")),
        };
        Ok(FormSpec(form))
    }
}

impl fmt::Display for FormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Form::Quadratic(q) => write!(f, "quad:{}", q.a()),
            Form::Cubic(c) => write!(f, "cubic:{},{}", c.a(), c.b()),
        }
    }
}

/// Seven or nine comma-separated rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct TupleArg(pub Vec<Rational>);

impl FromStr for TupleArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let vals = s
            .split(',')
            .map(|x| RationalArg::from_str(x).map(|r| r.0))
            .collect::<Result<Vec<_>, _>>()?;
        match vals.len() {
            7 | 9 => Ok(TupleArg(vals)),
            n => Err(format!("expected 7 or 9 entries, found {n}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;
    use polysys_core::arith::{frac, rat};

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn ranges() {
        assert_eq!(
            "0..2".parse::<IntRange>().unwrap(),
            IntRange { lo: 0, hi: 2 }
        );
        assert_eq!(
            "-3".parse::<IntRange>().unwrap(),
            IntRange { lo: -3, hi: -3 }
        );
        assert_eq!(
            "-10..-4".parse::<IntRange>().unwrap(),
            IntRange { lo: -10, hi: -4 }
        );
        assert!("3..1".parse::<IntRange>().is_err());
        assert!("a..1".parse::<IntRange>().is_err());
        assert!("0..1000000".parse::<IntRange>().is_err());
    }

    #[test]
    fn forms_round_trip_through_display() {
        for s in ["quad:1", "quad:3/2", "quad:-4", "cubic:1,3", "cubic:-3,4"] {
            assert_eq!(s.parse::<FormSpec>().unwrap().to_string(), s);
        }
        for bad in ["quad:0", "cubic:2,2", "cubic:1", "sext:1", "1"] {
            assert!(bad.parse::<FormSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn tuples_and_specializations() {
        let t: TupleArg = "8,5,6,36,35,2,3".parse().unwrap();
        assert_eq!(t.0[6], rat(3));
        let t: TupleArg = "-5/17,1,2,3,4,5,6,7,8".parse().unwrap();
        assert_eq!(t.0[0], frac(-5, 17));
        assert!("1,2,3".parse::<TupleArg>().is_err());
        assert_eq!("q=1/2".parse::<Specialization>().unwrap().0, frac(1, 2));
        assert!("t=1".parse::<Specialization>().is_err());
    }
}
