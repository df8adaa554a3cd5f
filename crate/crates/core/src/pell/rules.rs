use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// The three closed-form constructions, by Pell level and seed sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    /// m = 1, seed a+b√2, b₁ = 2c−3.
    PlusLevel1,
    /// m = 1, seed −a+b√2, b₁ = 2c+3.
    MinusLevel1,
    /// m = 2, seed a+b√2, b₁ = 2c−20.
    PlusLevel2,
}

/// Which table a rule comes from: the m = 1 cases or the m = 2 table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleSource {
    M1,
    M2,
}

impl Construction {
    pub fn source(self) -> RuleSource {
        match self {
            Construction::PlusLevel1 | Construction::MinusLevel1 => RuleSource::M1,
            Construction::PlusLevel2 => RuleSource::M2,
        }
    }

    /// b₁ = 2c + shift.
    pub fn b1_shift(self) -> i64 {
        match self {
            Construction::PlusLevel1 => -3,
            Construction::MinusLevel1 => 3,
            Construction::PlusLevel2 => -20,
        }
    }

    /// b₂ = b₁ + a + shift.
    pub fn b2_shift(self) -> i64 {
        match self {
            Construction::PlusLevel1 => 7,
            Construction::MinusLevel1 => -7,
            Construction::PlusLevel2 => 41,
        }
    }

    /// (d, e): b = (b₁b₂ + e)/d.
    pub fn b_quotient(self) -> (i64, i64) {
        match self {
            Construction::PlusLevel1 | Construction::MinusLevel1 => (5, 12),
            Construction::PlusLevel2 => (29, 420),
        }
    }

    pub fn pell_level(self) -> u32 {
        match self {
            Construction::PlusLevel1 | Construction::MinusLevel1 => 1,
            Construction::PlusLevel2 => 2,
        }
    }
}

/// a ≡ a_residue (mod a_modulus) admits c ≡ offset (mod c_modulus).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidueRule {
    pub construction: Construction,
    pub a_residue: i64,
    pub a_modulus: i64,
    pub c_offsets: Vec<i64>,
    pub c_modulus: i64,
    /// b₁ classes as tabulated (m = 2 table only).
    pub b1_classes: Vec<i64>,
}

impl ResidueRule {
    pub fn source(&self) -> RuleSource {
        self.construction.source()
    }

    pub fn applies(&self, a: i64) -> bool {
        a.rem_euclid(self.a_modulus) == self.a_residue
    }
}

fn m1(construction: Construction, a_residue: i64, offsets: [i64; 2]) -> ResidueRule {
    ResidueRule {
        construction,
        a_residue,
        a_modulus: 10,
        c_offsets: offsets.to_vec(),
        c_modulus: 10,
        b1_classes: Vec::new(),
    }
}

/// The m = 1 rules: a ≡ 0,5,1,6 (mod 10) with seed a+b√2, a ≡ 4,9 with −a+b√2.
pub fn level1_rules() -> Vec<ResidueRule> {
    use Construction::*;
    vec![
        m1(PlusLevel1, 0, [0, 2]),
        m1(PlusLevel1, 5, [5, 7]),
        m1(PlusLevel1, 1, [1, 3]),
        m1(PlusLevel1, 6, [6, 8]),
        m1(MinusLevel1, 4, [2, 4]),
        m1(MinusLevel1, 9, [7, 9]),
    ]
}

/// Shipped m = 2 table, rows `a mod 58 ; b₁ mod 29 ; c mod 58`.
pub const BUILTIN_TABLE: &str = include_str!("../../data/m2_residues.txt");

/// The m = 2 residue table, validated row by row when loaded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueTable {
    rows: Vec<ResidueRule>,
}

fn parse_list(field: &str, row: usize, what: &str) -> Result<Vec<i64>> {
    field
        .split(',')
        .map(|s| {
            s.trim().parse::<i64>().map_err(|_| Error::Table {
                row,
                reason: format!("bad {what} entry {:?}", s.trim()),
            })
        })
        .collect()
}

/// All c mod 58 with c ≡ a (mod 2) and 29 | 4c² + 2ac + 2c − 20a.
fn admissible_c(a: i64) -> Vec<i64> {
    (0..58)
        .filter(|c| {
            (c - a).rem_euclid(2) == 0
                && (4 * c * c + 2 * a * c + 2 * c - 20 * a).rem_euclid(29) == 0
        })
        .collect()
}

fn check_row(rule: &ResidueRule, row: usize) -> Result<()> {
    let fail = |reason: String| Err(Error::Table { row, reason });
    let a = rule.a_residue;
    if !(0..58).contains(&a) {
        return fail(format!("a class {a} is not reduced mod 58"));
    }
    let mut listed: Vec<i64> = rule.c_offsets.clone();
    listed.sort_unstable();
    if listed.iter().any(|c| !(0..58).contains(c)) {
        return fail(format!(
            "c classes {:?} are not reduced mod 58",
            rule.c_offsets
        ));
    }
    let derived = admissible_c(a);
    if listed != derived {
        return fail(format!(
            "c classes {listed:?} differ from the solutions {derived:?} of the congruences"
        ));
    }
    let mut b1s: Vec<i64> = rule
        .c_offsets
        .iter()
        .map(|c| (2 * c - 20).rem_euclid(29))
        .collect();
    b1s.sort_unstable();
    let mut b1_listed = rule.b1_classes.clone();
    b1_listed.sort_unstable();
    if b1s != b1_listed {
        return fail(format!(
            "b1 classes {b1_listed:?} do not match b1 = 2c - 20 = {b1s:?}"
        ));
    }
    for b1 in &b1s {
        if (b1 * (b1 + a + 41) + 420).rem_euclid(29) != 0 {
            return fail(format!("b1 = {b1} does not make b integral"));
        }
    }
    Ok(())
}

impl ResidueTable {
    pub fn builtin() -> Result<Self> {
        Self::parse(BUILTIN_TABLE)
    }

    /// Parses and self-checks a table; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut seen = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let row = i + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(';').collect();
            if fields.len() != 3 {
                return Err(Error::Table {
                    row,
                    reason: format!("expected 3 fields, found {}", fields.len()),
                });
            }
            let a = parse_list(fields[0], row, "a")?;
            let [a] = a[..] else {
                return Err(Error::Table {
                    row,
                    reason: "a field must hold one class".into(),
                });
            };
            let rule = ResidueRule {
                construction: Construction::PlusLevel2,
                a_residue: a,
                a_modulus: 58,
                c_offsets: parse_list(fields[2], row, "c")?,
                c_modulus: 58,
                b1_classes: parse_list(fields[1], row, "b1")?,
            };
            check_row(&rule, row)?;
            if seen.contains(&a) {
                return Err(Error::Table {
                    row,
                    reason: format!("duplicate a class {a}"),
                });
            }
            seen.push(a);
            rows.push(rule);
        }
        Ok(ResidueTable { rows })
    }

    pub fn rows(&self) -> &[ResidueRule] {
        &self.rows
    }

    /// Level-1 rules for `a`, followed by the table row for `a` if there is one.
    pub fn rules_for(&self, a: i64) -> Vec<ResidueRule> {
        let mut out: Vec<ResidueRule> = level1_rules()
            .into_iter()
            .filter(|r| r.applies(a))
            .collect();
        out.extend(self.rows.iter().filter(|r| r.applies(a)).cloned());
        out
    }

    /// Classes of a mod 145 covered by the table but not by the level-1 rules.
    pub fn classes_mod_145(&self) -> Vec<i64> {
        let mut out: Vec<i64> = (0..145)
            .filter(|x| {
                matches!(x % 5, 2 | 3) && self.rows.iter().any(|r| r.a_residue % 29 == x % 29)
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// Rules whose class contains `a`, using the shipped table.
pub fn rules_for(a: i64) -> Result<Vec<ResidueRule>> {
    if a == 0 {
        return Err(Error::InvalidParameter("a must be nonzero".into()));
    }
    Ok(ResidueTable::builtin()?.rules_for(a))
}

/// The classes of a mod 145 listed as covered by the m = 2 table.
pub const COVERED_MOD_145: [i64; 28] = [
    2, 3, 8, 23, 28, 32, 37, 48, 52, 53, 57, 58, 63, 68, 73, 77, 82, 87, 92, 93, 97, 98, 102, 113,
    118, 122, 127, 142,
];

/// Residues of a known to give infinite families: modulus 5 (level 1),
/// 145 (classes ≡ 2,3 mod 5 reached by the table) or 58 (the table's a classes).
pub fn covered_classes(modulus: i64) -> Result<Vec<i64>> {
    match modulus {
        5 => Ok(vec![0, 1, 4]),
        145 => Ok(COVERED_MOD_145.to_vec()),
        58 => {
            let mut v: Vec<i64> = ResidueTable::builtin()?
                .rows()
                .iter()
                .map(|r| r.a_residue)
                .collect();
            v.sort_unstable();
            Ok(v)
        }
        m => Err(Error::UnsupportedModulus(m)),
    }
}
