//! Transcribed reference tables, copied as printed (suspect cells included).
//!
//! These are comparison data only; nothing in the solver reads them.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::blade::{Axis, Blade, GeneratorSet};
use crate::idempotents::{ConstituentKind, ConstituentName, IdempotentDescriptor, Plane};
use crate::multivector::Multivector;
use crate::rational::{rat, Rational};

/// One row of Table 1: `X_A` and the printed `dr X_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub descriptor: IdempotentDescriptor,
    pub x: Multivector,
    pub dr_x: Multivector,
}

/// One printed Table 2 cell, `c λ_a + m λ_b μ`. The two λ indices are kept
/// separately because one printed cell uses the wrong index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table2Cell {
    pub constant: Rational,
    pub lambda: u8,
    pub mu: Rational,
    pub mu_lambda: u8,
}

impl fmt::Display for Table2Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn term(f: &mut fmt::Formatter<'_>, c: &Rational, body: &str, first: bool) -> fmt::Result {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, _) => write!(f, " {sign} ")?,
            }
            let m = c.abs();
            if m.is_one() {
                f.write_str(body)
            } else {
                write!(f, "{m} {body}")
            }
        }
        let mut first = true;
        if !self.constant.is_zero() {
            term(f, &self.constant, &alloc::format!("λ{}", self.lambda), true)?;
            first = false;
        }
        if !self.mu.is_zero() {
            term(f, &self.mu, &alloc::format!("λ{}μ", self.mu_lambda), first)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A named table entry (`a^3_1`, `u^3_1`, ...).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub name: ConstituentName,
    pub descriptor: IdempotentDescriptor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixtures {
    pub table1: Vec<Table1Row>,
    /// `table2[A - 1][column]`, columns in constraint-blade order
    /// `dx1 dx2 dx3 dx12 dx13 dx23 dx123`.
    pub table2: Vec<Vec<Table2Cell>>,
    pub table3: Vec<TableEntry>,
    pub table4: Vec<TableEntry>,
    /// Plane labels named in the Table 4 caption.
    pub table4_caption: Vec<String>,
    pub table5: Vec<TableEntry>,
}

/// `(den)^-1 Σ num · dx^{digits}`; digits `""` is the scalar.
fn bold_terms(terms: &[(&str, i64)], den: i64) -> Multivector {
    Multivector::from_terms(terms.iter().map(|(digits, num)| {
        let axes = digits.bytes().map(|b| Axis::from_index(b - b'0').expect("axis digit"));
        (Blade::diagonal(GeneratorSet::from_axes(axes)), rat(*num, den))
    }))
}

fn desc(label: &str) -> IdempotentDescriptor {
    IdempotentDescriptor::parse_label(label).expect("fixture label")
}

fn entry(name: &str, label: &str) -> TableEntry {
    TableEntry { name: ConstituentName::parse(name).expect("fixture name"), descriptor: desc(label) }
}

/// Blade digits with a coefficient in quarters.
type Quarters = &'static [(&'static str, i64)];

fn table1() -> Vec<Table1Row> {
    let rows: [(&str, Quarters, Quarters); 8] = [
        (
            "I12+ P1+",
            &[("", 1), ("1", 1), ("2", 1), ("12", 1)],
            &[("", 2), ("1", 2), ("2", 2), ("12", 2), ("3", 1), ("13", 1), ("23", 1), ("123", 1)],
        ),
        (
            "I12+ P1-",
            &[("", 1), ("1", -1), ("2", -1), ("12", 1)],
            &[("", -2), ("1", 2), ("2", 2), ("12", -2), ("3", 1), ("13", -1), ("23", -1), ("123", 1)],
        ),
        (
            "I12- P1+",
            &[("", 1), ("1", 1), ("2", -1), ("12", -1)],
            &[("3", 1), ("13", 1), ("23", -1), ("123", -1)],
        ),
        (
            "I12- P1-",
            &[("", 1), ("1", -1), ("2", 1), ("12", -1)],
            &[("3", 1), ("13", -1), ("23", 1), ("123", -1)],
        ),
        (
            "I12+ P3+",
            &[("", 1), ("3", 1), ("12", 1), ("123", 1)],
            &[("1", 2), ("13", 2), ("2", 2), ("23", 2), ("", 1), ("3", 1), ("12", 1), ("123", 1)],
        ),
        (
            "I12+ P3-",
            &[("", 1), ("3", -1), ("12", 1), ("123", -1)],
            &[("1", 2), ("13", -2), ("2", 2), ("23", -2), ("", -1), ("3", 1), ("12", -1), ("123", 1)],
        ),
        (
            "I12- P3+",
            &[("", 1), ("3", 1), ("12", -1), ("123", -1)],
            &[("", 1), ("3", 1), ("12", -1), ("123", -1)],
        ),
        (
            "I12- P3-",
            &[("", 1), ("3", -1), ("12", -1), ("123", 1)],
            &[("", -1), ("3", 1), ("12", 1), ("123", -1)],
        ),
    ];
    rows.iter()
        .map(|(label, x, dr_x)| Table1Row {
            descriptor: desc(label),
            x: bold_terms(x, 4),
            dr_x: bold_terms(dr_x, 4),
        })
        .collect()
}

fn table2() -> Vec<Vec<Table2Cell>> {
    // (constant num, constant den, μ coefficient) per printed cell
    type Cell = (i64, i64, i64);
    const H: i64 = 2;
    let rows: [[Cell; 7]; 8] = [
        [(1, 1, 1), (1, 1, 1), (1, H, 0), (1, 1, 1), (1, H, 0), (1, H, 0), (1, H, 0)],
        [(1, 1, -1), (1, 1, -1), (1, H, 0), (-1, 1, 1), (-1, H, 0), (-1, H, 0), (1, H, 0)],
        [(0, 1, 1), (0, 1, -1), (1, H, 0), (0, 1, -1), (1, H, 0), (-1, H, 0), (-1, H, 0)],
        [(0, 1, -1), (0, 1, 1), (1, H, 0), (0, 1, -1), (-1, H, 0), (1, H, 0), (-1, H, 0)],
        [(1, 1, 0), (1, 1, 0), (1, H, 1), (1, H, 1), (1, 1, 0), (1, 1, 0), (1, H, 1)],
        [(1, 1, 0), (1, 1, 0), (1, H, -1), (-1, H, 1), (-1, 1, 0), (-1, 1, 0), (1, H, -1)],
        [(0, 1, 0), (0, 1, 0), (1, H, 1), (-1, H, -1), (0, 1, 0), (0, 1, 0), (-1, H, -1)],
        [(0, 1, 0), (0, 1, 0), (1, H, -1), (1, H, -1), (0, 1, 0), (0, 1, 0), (-1, H, 1)],
    ];
    rows.iter()
        .enumerate()
        .map(|(r, row)| {
            let a = r as u8 + 1;
            row.iter()
                .enumerate()
                .map(|(c, &(num, den, mu))| Table2Cell {
                    constant: rat(num, den),
                    lambda: a,
                    mu: rat(mu, 1),
                    // row 6, dx123 column is printed with λ2
                    mu_lambda: if a == 6 && c == 6 { 2 } else { a },
                })
                .collect()
        })
        .collect()
}

fn table3() -> Vec<TableEntry> {
    [
        ("a^3_1", "I12+ P1+"),
        ("a^3_2", "I12+ P1-"),
        ("a^3_3", "-I12'+"),
        ("b^3_1", "I12- P2+"),
        ("b^3_2", "I12- P2-"),
        ("b^3_3", "-I12'-"),
    ]
    .iter()
    .map(|(n, l)| entry(n, l))
    .collect()
}

fn table4() -> Vec<TableEntry> {
    [
        ("a^1_1", "-I23'+"),
        ("a^1_2", "I23+ P2+"),
        ("a^1_3", "I23+ P2-"),
        ("b^1_1", "-I23'-"),
        ("b^1_2", "I23- P3+"),
        ("b^1_3", "I23- P3-"),
        ("a^2_1", "I31+ P3-"),
        ("a^2_2", "-I31'+"),
        ("a^2_3", "I31+ P3+"),
        ("b^2_1", "I31- P1-"),
        ("b^2_2", "-I31'-"),
        ("b^2_3", "I31- P1+"),
    ]
    .iter()
    .map(|(n, l)| entry(n, l))
    .collect()
}

fn table5() -> Vec<TableEntry> {
    [
        ("u^3_1", "eps+ I12+ P1+"),
        ("u^3_2", "eps+ I12+ P1-"),
        ("u^3_3", "-eps+ I12'+"),
        ("d^3_1", "eps+ I12- P2+"),
        ("d^3_2", "eps+ I12- P2-"),
        ("d^3_3", "-eps+ I12'-"),
        ("dbar^3_1", "eps- I12+ P2-"),
        ("dbar^3_2", "eps+ I12+ P2+"),
        ("dbar^3_3", "-eps- I12'+"),
        ("ubar^3_1", "eps- I12- P1-"),
        ("ubar^3_2", "eps- I12- P1+"),
        ("ubar^3_3", "-eps- I12'-"),
    ]
    .iter()
    .map(|(n, l)| entry(n, l))
    .collect()
}

impl Fixtures {
    /// The built-in transcription.
    pub fn embedded() -> Self {
        Fixtures {
            table1: table1(),
            table2: table2(),
            table3: table3(),
            table4: table4(),
            table4_caption: alloc::vec!["22".to_string(), "31".to_string()],
            table5: table5(),
        }
    }
}

/// Planes actually used by a set of entries, in first-seen order.
pub fn planes_of(entries: &[TableEntry]) -> Vec<Plane> {
    let mut out: Vec<Plane> = Vec::new();
    for e in entries {
        if !out.contains(&e.descriptor.plane) {
            out.push(e.descriptor.plane);
        }
    }
    out
}

/// True for the ε-free naming layer.
pub fn is_ab(kind: ConstituentKind) -> bool {
    matches!(kind, ConstituentKind::A | ConstituentKind::B)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idempotents::constituent;
    use crate::rational::int;

    #[test]
    fn shapes() {
        let f = Fixtures::embedded();
        assert_eq!(f.table1.len(), 8);
        assert_eq!(f.table2.len(), 8);
        assert!(f.table2.iter().all(|r| r.len() == 7));
        assert_eq!(f.table3.len(), 6);
        assert_eq!(f.table4.len(), 12);
        assert_eq!(f.table5.len(), 12);
    }

    #[test]
    fn table1_x_column_is_the_expansion() {
        for row in Fixtures::embedded().table1 {
            assert_eq!(row.descriptor.expand(), row.x, "{}", row.descriptor);
        }
    }

    #[test]
    fn cell_text() {
        let f = Fixtures::embedded();
        assert_eq!(alloc::format!("{}", f.table2[0][0]), "λ1 + λ1μ");
        assert_eq!(alloc::format!("{}", f.table2[5][6]), "1/2 λ6 - λ2μ");
        assert_eq!(alloc::format!("{}", f.table2[2][0]), "λ3μ");
        assert_eq!(alloc::format!("{}", f.table2[6][0]), "0");
        assert_eq!(f.table2[4][0].constant, int(1));
    }

    #[test]
    fn ab_entries_agree_with_generated_layer() {
        let f = Fixtures::embedded();
        for e in f.table3.iter().chain(&f.table4) {
            assert!(is_ab(e.name.kind));
            assert_eq!(constituent(e.name), e.descriptor, "{}", e.name);
        }
        assert_eq!(planes_of(&f.table4), alloc::vec![Plane::P23, Plane::P31]);
    }
}
