//! Integer families for f(X) = X(X+a) driven by X² − 2Y² = 2b² − a².

mod family;
mod rules;
mod solve;

pub use family::{build_family, instantiate, QuadFamily};
pub use rules::{
    covered_classes, level1_rules, rules_for, Construction, ResidueRule, ResidueTable, RuleSource,
    BUILTIN_TABLE, COVERED_MOD_145,
};
pub use solve::{pell_solutions, PellParams, Sign};
