use std::path::PathBuf;
use std::process::{Command, Output};

use kahler::formats::{fixtures_to_string, load_fixtures};
use kahler_core::fixtures::Fixtures;
use kahler_core::rational::int;

fn kahler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kahler")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

#[test]
fn solve_mu0_gives_three_vectors() {
    let o = kahler(&["solve", "--mu", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["nullspace"].as_array().unwrap().len(), 3);
    assert_eq!(v["covalue"], serde_json::json!(["0", "0", "0"]));
    assert_eq!(v["residual_zero"], true);
}

#[test]
fn solve_other_planes_and_mu() {
    for plane in ["12", "23", "31"] {
        let o = kahler(&["solve", "--mu", "0", "--plane", plane]);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["nullspace"].as_array().unwrap().len(), 3, "plane {plane}");
    }
    let o = kahler(&["solve", "--mu", "-1/4", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("μ = -1/4"));
}

#[test]
fn enumerate_levels() {
    for (level, n) in [("formal", 72), ("distinct", 48), ("constituents", 36)] {
        let o = kahler(&["enumerate", "--level", level]);
        assert_eq!(stdout(&o).lines().count(), n, "{level}");
        let j = kahler(&["enumerate", "--level", level, "--format", "json"]);
        let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
        assert_eq!(v["count"], n);
    }
}

#[test]
fn table5_markdown() {
    let o = kahler(&["tables", "--id", "5", "--format", "md"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("| row | subscript 1 | subscript 2 | subscript 3 |"));
    assert_eq!(text.lines().filter(|l| l.starts_with("| ")).count(), 5);
}

#[test]
fn every_table_in_every_format() {
    for id in ["1", "2", "3", "4", "5"] {
        for format in ["md", "csv", "json"] {
            let o = kahler(&["tables", "--id", id, "--format", format]);
            assert_eq!(o.status.code(), Some(0), "table {id} {format}");
            if format == "json" {
                let _: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
            }
        }
    }
}

#[test]
fn output_is_byte_stable() {
    let a = kahler(&["verify", "--format", "json"]);
    let b = kahler(&["verify", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_exits_zero_with_seven_errata() {
    let o = kahler(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("0 mismatches, documented deviations: E1 E2 E3 E4 E5 E6 E7\n"));
}

#[test]
fn verify_reads_checked_in_fixtures() {
    let dir = fixtures_dir();
    assert_eq!(kahler(&["verify", "--fixtures", dir.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn checked_in_fixtures_equal_embedded_copy() {
    let path = fixtures_dir().join("tables.json");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), fixtures_to_string(&Fixtures::embedded()));
    assert_eq!(load_fixtures(&path).unwrap(), Fixtures::embedded());
}

#[test]
fn tampered_fixtures_exit_one() {
    let mut fx = Fixtures::embedded();
    fx.table2[2][1].mu = int(5);
    let path = std::env::temp_dir().join(format!("kahler-tampered-{}.json", std::process::id()));
    std::fs::write(&path, fixtures_to_string(&fx)).unwrap();
    let o = kahler(&["verify", "--fixtures", path.to_str().unwrap(), "--only", "Table2/grid"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("mismatch"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    for args in [
        vec!["eval"],
        vec!["eval", "-e", "dx4"],
        vec!["apply", "--op", "K2", "--to", "1"],
        vec!["enumerate", "--level", "all"],
        vec!["verify", "--fixtures", "/nonexistent/kahler"],
        vec!["verify", "--format", "yaml"],
    ] {
        let o = kahler(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn eval_json_terms() {
    let o = kahler(&["eval", "-e", "1/2 (1 - dt)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["text"], "1/2 - 1/2 dt");
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}
