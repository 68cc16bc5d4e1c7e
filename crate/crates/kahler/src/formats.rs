//! JSON encodings: multivector terms, solution families and the fixture file.

use std::path::Path;

use kahler_core::blade::{Blade, Generator, GeneratorSet};
use kahler_core::fixtures::{Fixtures, Table1Row, Table2Cell, TableEntry};
use kahler_core::idempotents::{ConstituentName, IdempotentDescriptor};
use kahler_core::multivector::Multivector;
use kahler_core::propersolve::SolutionFamily;
use kahler_core::rational::Rational;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parse::{parse_multivector, parse_rational, ParseError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("unknown generator {0:?}")]
    Generator(String),
    #[error("repeated generator in {0:?}")]
    Repeated(Vec<String>),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("coefficient {0} does not fit in 64 bits")]
    Overflow(Rational),
    #[error("{field}: {source}")]
    Expression { field: String, source: ParseError },
    #[error("{field}: bad value {value:?}")]
    Field { field: String, value: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub cot: Vec<String>,
    pub tan: Vec<String>,
    pub num: i64,
    pub den: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultivectorJson {
    pub terms: Vec<TermJson>,
}

fn names(set: GeneratorSet) -> Vec<String> {
    set.iter().map(|g| g.name().to_string()).collect()
}

fn set_from_names(list: &[String]) -> Result<GeneratorSet, FormatError> {
    let mut bits = 0u8;
    for n in list {
        let g = Generator::from_name(n).ok_or_else(|| FormatError::Generator(n.clone()))?;
        if bits & g.bit() != 0 {
            return Err(FormatError::Repeated(list.to_vec()));
        }
        bits |= g.bit();
    }
    Ok(GeneratorSet::from_bits(bits))
}

pub fn multivector_to_json(u: &Multivector) -> Result<MultivectorJson, FormatError> {
    let terms = u
        .terms()
        .map(|(b, c)| {
            let (num, den) = (c.numer().to_i64(), c.denom().to_i64());
            match (num, den) {
                (Some(num), Some(den)) => Ok(TermJson { cot: names(b.cot), tan: names(b.tan), num, den }),
                _ => Err(FormatError::Overflow(c.clone())),
            }
        })
        .collect::<Result<_, _>>()?;
    Ok(MultivectorJson { terms })
}

/// Generator lists are read as sets in canonical order; a term listing
/// generators out of order is not reordered with a sign.
pub fn multivector_from_json(m: &MultivectorJson) -> Result<Multivector, FormatError> {
    let mut out = Multivector::zero();
    for t in &m.terms {
        if t.den == 0 {
            return Err(FormatError::ZeroDenominator);
        }
        let blade = Blade::new(set_from_names(&t.cot)?, set_from_names(&t.tan)?);
        out.add_term(blade, Rational::new(BigInt::from(t.num), BigInt::from(t.den)));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionJson {
    pub mu: String,
    pub nullspace: Vec<Vec<String>>,
    pub covalue: Vec<String>,
    pub residual_zero: bool,
}

impl From<&SolutionFamily> for SolutionJson {
    fn from(f: &SolutionFamily) -> Self {
        SolutionJson {
            mu: f.mu.to_string(),
            nullspace: f.nullspace_basis.iter().map(|v| v.iter().map(ToString::to_string).collect()).collect(),
            covalue: f.covalue.iter().map(ToString::to_string).collect(),
            residual_zero: f.residual_zero(),
        }
    }
}

// Fixture file. Multivectors are stored as expressions, idempotents as
// labels such as "I12+ P1+" or "-eps- I12'+".

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Json {
    pub x_a: String,
    pub x: String,
    pub dr_x: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2CellJson {
    pub constant: String,
    pub lambda: u8,
    pub mu: String,
    pub mu_lambda: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixturesJson {
    pub table1: Vec<Table1Json>,
    pub table2: Vec<Vec<Table2CellJson>>,
    pub table3: Vec<EntryJson>,
    pub table4: Vec<EntryJson>,
    pub table4_caption: Vec<String>,
    pub table5: Vec<EntryJson>,
}

fn entries_to_json(entries: &[TableEntry]) -> Vec<EntryJson> {
    entries
        .iter()
        .map(|e| EntryJson { name: e.name.to_string(), value: e.descriptor.label() })
        .collect()
}

impl From<&Fixtures> for FixturesJson {
    fn from(f: &Fixtures) -> Self {
        FixturesJson {
            table1: f
                .table1
                .iter()
                .map(|r| Table1Json { x_a: r.descriptor.label(), x: r.x.render(), dr_x: r.dr_x.render() })
                .collect(),
            table2: f
                .table2
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| Table2CellJson {
                            constant: c.constant.to_string(),
                            lambda: c.lambda,
                            mu: c.mu.to_string(),
                            mu_lambda: c.mu_lambda,
                        })
                        .collect()
                })
                .collect(),
            table3: entries_to_json(&f.table3),
            table4: entries_to_json(&f.table4),
            table4_caption: f.table4_caption.clone(),
            table5: entries_to_json(&f.table5),
        }
    }
}

fn expr(field: String, text: &str) -> Result<Multivector, FormatError> {
    parse_multivector(text).map_err(|source| FormatError::Expression { field, source })
}

fn rational(field: String, text: &str) -> Result<Rational, FormatError> {
    parse_rational(text).map_err(|source| FormatError::Expression { field, source })
}

fn descriptor(field: String, text: &str) -> Result<IdempotentDescriptor, FormatError> {
    IdempotentDescriptor::parse_label(text).ok_or(FormatError::Field { field, value: text.to_string() })
}

fn entries_from_json(table: &str, list: &[EntryJson]) -> Result<Vec<TableEntry>, FormatError> {
    list.iter()
        .enumerate()
        .map(|(n, e)| {
            let field = format!("{table}[{n}]");
            Ok(TableEntry {
                name: ConstituentName::parse(&e.name)
                    .ok_or(FormatError::Field { field: format!("{field}.name"), value: e.name.clone() })?,
                descriptor: descriptor(format!("{field}.value"), &e.value)?,
            })
        })
        .collect()
}

impl TryFrom<&FixturesJson> for Fixtures {
    type Error = FormatError;

    fn try_from(j: &FixturesJson) -> Result<Self, FormatError> {
        let table1 = j
            .table1
            .iter()
            .enumerate()
            .map(|(n, r)| {
                Ok(Table1Row {
                    descriptor: descriptor(format!("table1[{n}].x_a"), &r.x_a)?,
                    x: expr(format!("table1[{n}].x"), &r.x)?,
                    dr_x: expr(format!("table1[{n}].dr_x"), &r.dr_x)?,
                })
            })
            .collect::<Result<_, FormatError>>()?;
        let table2 = j
            .table2
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .map(|(c, cell)| {
                        Ok(Table2Cell {
                            constant: rational(format!("table2[{r}][{c}].constant"), &cell.constant)?,
                            lambda: cell.lambda,
                            mu: rational(format!("table2[{r}][{c}].mu"), &cell.mu)?,
                            mu_lambda: cell.mu_lambda,
                        })
                    })
                    .collect::<Result<Vec<_>, FormatError>>()
            })
            .collect::<Result<_, FormatError>>()?;
        Ok(Fixtures {
            table1,
            table2,
            table3: entries_from_json("table3", &j.table3)?,
            table4: entries_from_json("table4", &j.table4)?,
            table4_caption: j.table4_caption.clone(),
            table5: entries_from_json("table5", &j.table5)?,
        })
    }
}

/// File name of the fixture set inside a fixtures directory.
pub const FIXTURE_FILE: &str = "tables.json";

/// Loads fixtures from a JSON file, or from `tables.json` inside a directory.
pub fn load_fixtures(path: &Path) -> Result<Fixtures, FormatError> {
    let file = if path.is_dir() { path.join(FIXTURE_FILE) } else { path.to_path_buf() };
    let text = std::fs::read_to_string(&file)
        .map_err(|source| FormatError::Io { path: file.display().to_string(), source })?;
    let parsed: FixturesJson = serde_json::from_str(&text)?;
    Fixtures::try_from(&parsed)
}

pub fn fixtures_to_string(f: &Fixtures) -> String {
    let mut s = serde_json::to_string_pretty(&FixturesJson::from(f)).expect("fixtures serialize");
    s.push('\n');
    s
}
