//! Acceptance suite: one PASS/FAIL line per criterion. Built without the
//! libtest harness so the lines always print; exits non-zero on any FAIL.

use std::collections::BTreeSet;
use std::process::Command;

use kahler_core::blade::{Axis, Blade, Sign, Signature};
use kahler_core::elements::{a, dr, dx_set, w};
use kahler_core::fixtures::Fixtures;
use kahler_core::idempotents::{enumerate, eps, i_plane, p_axis, Level, Plane};
use kahler_core::multivector::Multivector;
use kahler_core::operators::{apply_j, apply_k1, OperatorExpr};
use kahler_core::propersolve::{build_system, solve, ProperValueProblem};
use kahler_core::rational::{int, rat, zero, Rational};
use kahler_core::verify::{run_all, Erratum, Status};
use num_traits::Zero;

const SIG: Signature = Signature::ALL_PLUS;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn table1() -> Outcome {
    let fx = Fixtures::embedded();
    let hits = fx
        .table1
        .iter()
        .filter(|row| {
            let x = row.descriptor.expand();
            x == row.x && &dr() * &x == row.dr_x
        })
        .count();
    outcome(hits == 8 && fx.table1.len() == 8, format!("{hits}/8 rows match"))
}

fn table2() -> Outcome {
    let fx = Fixtures::embedded();
    let system = build_system(&ProperValueProblem::standard(zero())).expect("system");
    let dx123_col = 6;
    let mut e1 = 0;
    let mut e2 = 0;
    let mut other = Vec::new();
    for (r, row) in fx.table2.iter().enumerate() {
        let a_index = (r + 1) as u8;
        for (c, cell) in row.iter().enumerate() {
            let got = &system.entries[c][r];
            if got.constant != cell.constant {
                if c == dx123_col {
                    e1 += 1;
                } else {
                    other.push(format!("A{a_index} col{c} constant"));
                }
            }
            if !cell.constant.is_zero() && cell.lambda != a_index {
                other.push(format!("A{a_index} col{c} λ index"));
            }
            if got.mu_coeff != cell.mu {
                other.push(format!("A{a_index} col{c} μ"));
            }
            if !cell.mu.is_zero() && cell.mu_lambda != a_index {
                if (r, c) == (5, dx123_col) {
                    e2 += 1;
                } else {
                    other.push(format!("A{a_index} col{c} μ index"));
                }
            }
        }
    }
    let shape = fx.table2.len() == 8 && fx.table2.iter().all(|r| r.len() == 7);
    outcome(
        shape && e1 == 8 && e2 == 1 && other.is_empty(),
        format!("E1 cells {e1}/8, E2 cells {e2}/1, other differences {}", other.len()),
    )
}

fn mu0_family() -> Outcome {
    let family = solve(&ProperValueProblem::standard(zero())).expect("solve");
    let relations_hold = family.nullspace_basis.iter().all(|v| {
        let q = |n: i64| rat(n, 4);
        v[3] == v[2]
            && v[4] == -q(3) * &v[0] - q(1) * &v[1]
            && v[5] == -q(1) * &v[0] - q(3) * &v[1]
            && v[6] == q(3) * &v[0] - q(3) * &v[1] - &v[2]
            && v[7] == -q(3) * &v[0] + q(3) * &v[1] - &v[2]
    });
    let vec = |v: [i64; 8]| v.map(int).to_vec();
    let members = family.contains(&vec([1, 1, 0, 0, -1, -1, 0, 0])) && family.contains(&vec([0, 0, 1, 1, 0, 0, -1, -1]));
    outcome(
        family.dimension() == 3 && relations_hold && members,
        format!("dimension {}, relations {relations_hold}, members {members}", family.dimension()),
    )
}

fn zero_covalue() -> Outcome {
    let p = ProperValueProblem::standard(zero());
    let family = solve(&p).expect("solve");
    let op = OperatorExpr::total_space();
    let annihilated = family.nullspace_basis.iter().all(|v| op.apply(&p.combination(v), &SIG).is_zero());
    let pi_zero = family.covalue.iter().all(Rational::is_zero);
    outcome(annihilated && pi_zero, format!("image zero {annihilated}, π zero {pi_zero}"))
}

fn counting() -> Outcome {
    let formal = enumerate(Level::Formal).len();
    let distinct = enumerate(Level::Distinct).len();
    let constituents = enumerate(Level::Constituents);
    let unique: BTreeSet<String> = constituents.iter().map(|e| e.expansion.render()).collect();
    outcome(
        formal == 72 && distinct == 48 && constituents.len() == 36 && unique.len() == 36,
        format!("{formal} formal, {distinct} distinct, {} constituents, {} pairwise distinct", constituents.len(), unique.len()),
    )
}

fn operator_identity() -> Outcome {
    let mut ok = 0;
    let blades: Vec<Blade> = Blade::all().collect();
    for b in &blades {
        let u = Multivector::blade(*b);
        let k = apply_k1(&u, &SIG);
        let lhs = apply_k1(&k, &SIG);
        let mut rhs = k;
        for l in Axis::ALL {
            rhs = &rhs - &apply_j(l, &apply_j(l, &u, &SIG), &SIG);
        }
        if lhs == rhs {
            ok += 1;
        }
    }
    outcome(ok == 256 && blades.len() == 256, format!("{ok}/{} blades", blades.len()))
}

fn idempotent_suite() -> Outcome {
    let distinct = enumerate(Level::Distinct);
    let idem = distinct.iter().filter(|e| e.expansion.is_idempotent(&SIG)).count();
    let mut pairs: Vec<(Multivector, Multivector)> = vec![(eps(Sign::Plus), eps(Sign::Minus))];
    pairs.extend(Plane::ALL.map(|p| (i_plane(p, Sign::Plus), i_plane(p, Sign::Minus))));
    pairs.extend(Axis::ALL.map(|l| (p_axis(l, Sign::Plus), p_axis(l, Sign::Minus))));
    let pairs_ok = pairs
        .iter()
        .filter(|(p, m)| (p * m).is_zero() && (m * p).is_zero() && p + m == Multivector::one())
        .count();
    outcome(
        idem == 48 && distinct.len() == 48 && pairs_ok == pairs.len(),
        format!("{idem}/48 idempotent, {pairs_ok}/{} pairs", pairs.len()),
    )
}

fn catalogue() -> Outcome {
    let report = run_all(&Fixtures::embedded());
    let ids = [
        "Eq23", "Eq24", "Eq25", "Eq26", "Eq27", "Eq28a", "Eq29a", "Eq29b", "Eq30a", "Eq30b", "Eq31a", "Eq31b",
    ];
    let mut bad: Vec<&str> = ids
        .iter()
        .copied()
        .filter(|id| report.get(id).map(|c| c.status) != Some(Status::Match))
        .collect();
    if report.get("Eq28b").map(|c| c.status) != Some(Status::DocumentedDeviation(Erratum::E4)) {
        bad.push("Eq28b");
    }
    // one direct case per plane: (K+1) I_ij^+ P_i^+ = 2X - 1/2
    for p in Plane::ALL {
        let (i, _) = p.axes();
        let x = &i_plane(p, Sign::Plus) * &p_axis(i, Sign::Plus);
        if apply_k1(&x, &SIG) != &x.scale(&int(2)) - &Multivector::scalar(rat(1, 2)) {
            bad.push("direct");
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "13 identities, all planes and signs".to_string() } else { format!("failing: {bad:?}") })
}

fn eq10_holds(sig: &Signature) -> (usize, usize) {
    let mut held = 0;
    let mut total = 0;
    for (i, k) in [(Axis::X1, Axis::X3), (Axis::X2, Axis::X1), (Axis::X3, Axis::X2)] {
        let lhs = apply_j(i, &dx_set(&[k, i]), sig);
        total += 1;
        if lhs == w(k).mul_with(&a(&[i, k]), sig) {
            held += 1;
        }
    }
    (held, total)
}

fn signature_falsification() -> Outcome {
    let (plus, n) = eq10_holds(&Signature::ALL_PLUS);
    let (minus, _) = eq10_holds(&Signature::ALL_MINUS_COTANGENT);
    let harness = run_all(&Fixtures::embedded())
        .get("Eq10/all-minus-signature")
        .map(|c| c.status == Status::Match)
        .unwrap_or(false);
    outcome(
        plus == n && minus == 0 && harness,
        format!("all-plus {plus}/{n} hold, all-minus {minus}/{n} hold, harness check {harness}"),
    )
}

fn verify_command() -> Outcome {
    let run = Command::new(env!("CARGO_BIN_EXE_kahler")).args(["verify", "--format", "json"]).output();
    let Ok(run) = run else {
        return outcome(false, "could not start binary");
    };
    let code = run.status.code();
    let Ok(doc) = serde_json::from_slice::<serde_json::Value>(&run.stdout) else {
        return outcome(false, "report is not JSON");
    };
    let devs: Vec<String> = doc["documented_deviations"]
        .as_array()
        .map(|a| a.iter().filter_map(|e| e["id"].as_str().map(String::from)).collect())
        .unwrap_or_default();
    let want: Vec<String> = Erratum::ALL.iter().map(|e| e.id().to_string()).collect();
    let mismatches = doc["mismatches"].as_u64();
    outcome(
        code == Some(0) && mismatches == Some(0) && devs == want,
        format!("exit {code:?}, {mismatches:?} mismatches, deviations {}", devs.join(" ")),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Table 1 reproduction", table1),
        ("Table 2 grid with errata E1, E2", table2),
        ("μ=0 solution family", mu0_family),
        ("zero co-value", zero_covalue),
        ("counting 72/48/36", counting),
        ("operator identity on 256 blades", operator_identity),
        ("idempotent suite", idempotent_suite),
        ("section-4 catalogue", catalogue),
        ("signature falsification", signature_falsification),
        ("verify command", verify_command),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.ok {
            failed += 1;
        }
        println!("criterion {:>2} {}: {} ({})", n + 1, if o.ok { "PASS" } else { "FAIL" }, name, o.detail);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
