//! Command-line driver. [`run`] parses arguments, writes to the given
//! streams and returns the process exit code.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use kahler_core::blade::Signature;
use kahler_core::fixtures::Fixtures;
use kahler_core::idempotents::{enumerate, Level, Plane};
use kahler_core::multivector::Multivector;
use kahler_core::propersolve::{solve, ProperValueProblem, SolutionFamily};
use kahler_core::rational::Rational;
use kahler_core::verify::{run_all, Report};
use serde_json::json;
use thiserror::Error;

use crate::formats::{load_fixtures, multivector_to_json, FormatError, SolutionJson};
use crate::parse::{parse_multivector, parse_operator, parse_rational, ParseError};
use crate::report::{self, ReportFormat};
use crate::tables::{self, TableError, TableFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "kahler", version, about = "Exact Clifford-algebra calculator for Kähler-Dirac idempotents")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PlaneArg {
    #[value(name = "12")]
    P12,
    #[value(name = "23")]
    P23,
    #[value(name = "31")]
    P31,
}

impl From<PlaneArg> for Plane {
    fn from(p: PlaneArg) -> Plane {
        match p {
            PlaneArg::P12 => Plane::P12,
            PlaneArg::P23 => Plane::P23,
            PlaneArg::P31 => Plane::P31,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Formal,
    Distinct,
    Constituents,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Level {
        match l {
            LevelArg::Formal => Level::Formal,
            LevelArg::Distinct => Level::Distinct,
            LevelArg::Constituents => Level::Constituents,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a multivector expression
    Eval {
        #[arg(short = 'e', long = "expr", allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Apply an operator expression to a multivector
    Apply {
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Solve [(K+1) dr + 4μ] Σ λ_A X_A = const over one plane's eight idempotents
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, value_enum, default_value_t = PlaneArg::P12)]
        plane: PlaneArg,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
    },
    /// List the ε·I·P idempotents
    Enumerate {
        #[arg(long, value_enum)]
        level: LevelArg,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Print one of the reference tables, computed from scratch
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        id: u8,
        #[arg(long, value_enum, default_value_t = TableFormat::Md)]
        format: TableFormat,
        /// Plane of the ε layer (table 5 only)
        #[arg(long, value_enum)]
        plane: Option<PlaneArg>,
    },
    /// Re-derive every identity and table and compare with the transcribed fixtures
    Verify {
        #[arg(long)]
        only: Option<String>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Fixture file, or directory holding tables.json
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{what}: {source}")]
    Parse { what: &'static str, source: ParseError },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("{0}")]
    Solve(String),
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

fn parsed<T>(what: &'static str, r: Result<T, ParseError>) -> Result<T, CliError> {
    r.map_err(|source| CliError::Parse { what, source })
}

fn render_mv(u: &Multivector, format: OutFormat) -> Result<String, CliError> {
    Ok(match format {
        OutFormat::Text => format!("{}\n", u.render()),
        OutFormat::Json => {
            let mut s = serde_json::to_string_pretty(&json!({
                "text": u.render(),
                "terms": multivector_to_json(u)?.terms,
            }))
            .expect("json");
            s.push('\n');
            s
        }
    })
}

fn vector_text(v: &[Rational]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn solution_text(plane: Plane, f: &SolutionFamily) -> String {
    let mut out = format!("plane {plane}, μ = {}\nnullspace dimension {}\n", f.mu, f.dimension());
    for (n, (v, c)) in f.nullspace_basis.iter().zip(&f.covalue).enumerate() {
        out.push_str(&format!("v{} = {}  co-value {}\n", n + 1, vector_text(v), c));
    }
    out.push_str(&format!("non-scalar residual zero: {}\n", f.residual_zero()));
    out
}

fn enumerate_text(level: Level, format: OutFormat) -> String {
    let items = enumerate(level);
    match format {
        OutFormat::Text => items
            .iter()
            .map(|e| match e.name {
                Some(n) => format!("{n}  {}  =  {}\n", e.descriptor.label(), e.expansion.render()),
                None => format!("{}  =  {}\n", e.descriptor.label(), e.expansion.render()),
            })
            .collect(),
        OutFormat::Json => {
            let list: Vec<_> = items
                .iter()
                .map(|e| {
                    let mut obj = json!({
                        "descriptor": e.descriptor.label(),
                        "expansion": e.expansion.render(),
                    });
                    if let Some(n) = e.name {
                        obj["name"] = json!(n.to_string());
                    }
                    obj
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&json!({ "count": items.len(), "items": list })).expect("json");
            s.push('\n');
            s
        }
    }
}

fn filter_report(report: Report, only: Option<&str>) -> Result<Report, CliError> {
    match only {
        None => Ok(report),
        Some(id) => {
            let checks: Vec<_> = report.checks.into_iter().filter(|c| c.id == id).collect();
            if checks.is_empty() {
                Err(CliError::UnknownCheck(id.to_string()))
            } else {
                Ok(Report { checks })
            }
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let sig = Signature::ALL_PLUS;
    match command {
        Command::Eval { expr, format } => {
            let u = parsed("expression", parse_multivector(&expr))?;
            out.write_all(render_mv(&u, format)?.as_bytes())?;
        }
        Command::Apply { op, to, format } => {
            let op = parsed("--op", parse_operator(&op))?;
            let u = parsed("--to", parse_multivector(&to))?;
            out.write_all(render_mv(&op.apply(&u, &sig), format)?.as_bytes())?;
        }
        Command::Solve { mu, plane, format } => {
            let mu = parsed("--mu", parse_rational(&mu))?;
            let plane = Plane::from(plane);
            let family = solve(&ProperValueProblem::for_plane(plane, mu)).map_err(|e| CliError::Solve(e.to_string()))?;
            let text = match format {
                OutFormat::Text => solution_text(plane, &family),
                OutFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&SolutionJson::from(&family)).expect("json");
                    s.push('\n');
                    s
                }
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Enumerate { level, format } => {
            out.write_all(enumerate_text(level.into(), format).as_bytes())?;
        }
        Command::Tables { id, format, plane } => {
            out.write_all(tables::render(id, format, plane.map(Plane::from))?.as_bytes())?;
        }
        Command::Verify { only, format, fixtures } => {
            let fx = match fixtures {
                Some(path) => load_fixtures(&path)?,
                None => Fixtures::embedded(),
            };
            let report = filter_report(run_all(&fx), only.as_deref())?;
            out.write_all(report::render(&report, format).as_bytes())?;
            if !report.passed() {
                return Ok(EXIT_MISMATCH);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Runs the program on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("kahler").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_idempotent() {
        let (code, out, _) = call(&["eval", "-e", "I12+ P1+"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1/4 + 1/4 dx1 + 1/4 dx2 + 1/4 dx12\n");
    }

    #[test]
    fn eval_leading_minus() {
        let (code, out, _) = call(&["eval", "-e", "-dt dt"]);
        assert_eq!((code, out.as_str()), (0, "-1\n"));
    }

    #[test]
    fn apply_total_space_to_scalar_mixture() {
        let (code, out, _) = call(&["apply", "--op", "K1 ∘ Lmul(dx1+dx2+dx3)", "--to", "1"]);
        assert_eq!(code, 0);
        assert!(!out.trim().is_empty());
    }

    #[test]
    fn parse_error_exit_2() {
        let (code, out, err) = call(&["eval", "-e", "dx1 +"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("byte 5"), "{err}");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["eval", "-e", "1", "--bogus"]).0, 2);
        assert_eq!(call(&["tables", "--id", "6"]).0, 2);
        assert_eq!(call(&["tables", "--id", "2", "--plane", "23"]).0, 2);
        assert_eq!(call(&["solve", "--mu", "1/0"]).0, 2);
        assert_eq!(call(&["verify", "--only", "Eq999"]).0, 2);
    }

    #[test]
    fn help_is_success() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }

    #[test]
    fn solve_text_format() {
        let (code, out, _) = call(&["solve", "--mu", "0", "--format", "text"]);
        assert_eq!(code, 0);
        assert!(out.contains("nullspace dimension 3"));
    }

    #[test]
    fn verify_only_one_check() {
        let (code, out, _) = call(&["verify", "--only", "Table1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("Table1 "));
        assert!(out.ends_with("1 checks, 0 mismatches, documented deviations: none\n"));
    }
}
