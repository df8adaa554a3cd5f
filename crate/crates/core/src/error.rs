use alloc::string::String;

use crate::arith::{Rational, Var};

/// Errors raised by the exact-arithmetic layer and the generators built on it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable mismatch: {left} vs {right}")]
    VariableMismatch { left: Var, right: Var },

    #[error("division by the zero element")]
    DivisionByZero,

    #[error("evaluation at a pole: {var} = {point}")]
    Pole { var: Var, point: Rational },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("residue rule does not apply: {0}")]
    RuleMismatch(String),

    #[error("congruence conditions fail: {0}")]
    CongruenceFailure(String),

    #[error("vanishing denominator in {param}")]
    DegenerateParameter { param: &'static str },

    #[error("f(s) = 0, the quotient f(r)/f(s) is undefined")]
    UndefinedQuotient,

    #[error("pull-back of [{m}]P hits the exceptional locus")]
    ExceptionalPoint { m: u32 },

    #[error("unsupported modulus {0}")]
    UnsupportedModulus(i64),

    #[error("residue table row {row}: {reason}")]
    Table { row: usize, reason: String },

    #[error("curve {curve}: printed constants and every re-derivation failed")]
    CurveConstruction { curve: &'static str },
}

pub type Result<T> = core::result::Result<T, Error>;
