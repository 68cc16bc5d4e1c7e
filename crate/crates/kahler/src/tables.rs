//! Computed versions of the five reference tables, rendered as markdown,
//! CSV or JSON.

use std::fmt::Write as _;

use kahler_core::blade::Axis;
use kahler_core::elements::dr;
use kahler_core::idempotents::{ab_table, eps_table, Plane};
use kahler_core::propersolve::{build_system, plane_basis, ProperValueProblem};
use kahler_core::rational::zero;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Md,
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(title: impl Into<String>, headers: &[&str]) -> Self {
        Table { title: title.into(), headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Md => self.markdown(),
            TableFormat::Csv => self.csv(),
            TableFormat::Json => self.json(),
        }
    }

    pub fn markdown(&self) -> String {
        let mut out = format!("**{}**\n\n", self.title);
        let line = |cells: &[String]| format!("| {} |\n", cells.iter().map(|c| c.replace('|', "\\|")).collect::<Vec<_>>().join(" | "));
        out.push_str(&line(&self.headers));
        let _ = writeln!(out, "|{}", "---|".repeat(self.headers.len()));
        for row in &self.rows {
            out.push_str(&line(row));
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> =
                    self.headers.iter().cloned().zip(row.iter().map(|c| Value::String(c.clone()))).collect();
                Value::Object(obj)
            })
            .collect();
        let doc = serde_json::json!({ "title": self.title, "rows": rows });
        let mut s = serde_json::to_string_pretty(&doc).expect("json");
        s.push('\n');
        s
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TableError {
    #[error("no table {0}; tables are numbered 1 to 5")]
    UnknownId(u8),
    #[error("--plane only applies to table 5")]
    PlaneNotApplicable,
}

pub fn table1() -> Table {
    let mut t = Table::new("Table 1. dr acting on I12 P1 and I12 P3", &["A", "X_A", "expansion", "dr X_A"]);
    for (n, d) in plane_basis(Plane::P12).iter().enumerate() {
        let x = d.expand();
        t.rows.push(vec![(n + 1).to_string(), d.label(), x.render(), (&dr() * &x).render()]);
    }
    t
}

pub fn table2() -> Table {
    let names = ["dx1", "dx2", "dx3", "dx12", "dx13", "dx23", "dx123"];
    let mut headers = vec!["A"];
    headers.extend(names);
    headers.push("scalar");
    let mut t = Table::new("Table 2. coefficients of λ_A in [(K+1) dr + 4μ] X_A", &headers);
    let system = build_system(&ProperValueProblem::standard(zero()))
        .expect("plane-12 basis stays in the bold subalgebra");
    for a in 0..system.columns() {
        let mut row = vec![(a + 1).to_string()];
        row.extend(system.entries.iter().map(|r| r[a].to_string()));
        row.push(system.scalar_row[a].to_string());
        t.rows.push(row);
    }
    t
}

fn ab_rows(t: &mut Table, m: Axis) {
    for (name, d) in ab_table(m) {
        t.rows.push(vec![name.to_string(), d.label(), d.expand().render()]);
    }
}

pub fn table3() -> Table {
    let mut t = Table::new("Table 3. constituent I12 P idempotents", &["name", "idempotent", "expansion"]);
    ab_rows(&mut t, Axis::X3);
    t
}

pub fn table4() -> Table {
    let mut t = Table::new("Table 4. constituent I23 P and I31 P idempotents", &["name", "idempotent", "expansion"]);
    ab_rows(&mut t, Axis::X1);
    ab_rows(&mut t, Axis::X2);
    t
}

/// Markdown keeps the grid layout (rows u, d, dbar, ubar; one column per
/// subscript); CSV and JSON list one entry per row.
pub fn table5(plane: Plane, format: TableFormat) -> Table {
    let title = format!("Table 5. constituent idempotents of type eps I{plane} P");
    let entries = eps_table(plane.normal());
    if format == TableFormat::Md {
        let mut t = Table::new(title, &["row", "subscript 1", "subscript 2", "subscript 3"]);
        for chunk in entries.chunks(3) {
            let (first, _) = chunk[0];
            let mut row = vec![format!("{}^{}", first.kind.label(), first.m)];
            row.extend(chunk.iter().map(|(_, d)| d.label()));
            t.rows.push(row);
        }
        t
    } else {
        let mut t = Table::new(title, &["name", "idempotent", "expansion"]);
        for (n, d) in entries {
            t.rows.push(vec![n.to_string(), d.label(), d.expand().render()]);
        }
        t
    }
}

pub fn render(id: u8, format: TableFormat, plane: Option<Plane>) -> Result<String, TableError> {
    if plane.is_some() && id != 5 {
        return Err(TableError::PlaneNotApplicable);
    }
    let t = match id {
        1 => table1(),
        2 => table2(),
        3 => table3(),
        4 => table4(),
        5 => table5(plane.unwrap_or(Plane::P12), format),
        other => return Err(TableError::UnknownId(other)),
    };
    Ok(t.render(format))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_first_row() {
        let t = table1();
        assert_eq!(t.rows.len(), 8);
        assert_eq!(t.rows[0][1], "I12+ P1+");
        assert_eq!(t.rows[0][2], "1/4 + 1/4 dx1 + 1/4 dx2 + 1/4 dx12");
    }

    #[test]
    fn table2_cells() {
        let t = table2();
        assert_eq!(t.rows[0][1], "1 + 1μ");
        // dx123 column constant parts vanish
        assert!(t.rows.iter().all(|r| !r[7].starts_with("1/2") && !r[7].starts_with("-1/2")));
    }

    #[test]
    fn table5_markdown_grid() {
        let md = render(5, TableFormat::Md, None).unwrap();
        assert!(md.contains("| u^3 | eps+ I12+ P1+ | eps+ I12+ P1- | -eps+ I12'+ |"));
        assert!(md.contains("| dbar^3 | eps- I12+ P2- | eps- I12+ P2+ | -eps- I12'+ |"));
        let other = render(5, TableFormat::Csv, Some(Plane::P23)).unwrap();
        assert!(other.starts_with("name,idempotent,expansion\n"));
        assert!(other.contains("u^1_2,eps+ I23+ P2+,"));
    }

    #[test]
    fn bad_requests() {
        assert_eq!(render(6, TableFormat::Md, None), Err(TableError::UnknownId(6)));
        assert_eq!(render(2, TableFormat::Md, Some(Plane::P23)), Err(TableError::PlaneNotApplicable));
    }

    #[test]
    fn json_rows_keyed_by_header() {
        let j: Value = serde_json::from_str(&render(3, TableFormat::Json, None).unwrap()).unwrap();
        assert_eq!(j["rows"][0]["name"], "a^3_1");
        assert_eq!(j["rows"][2]["idempotent"], "-I12'+");
    }
}
