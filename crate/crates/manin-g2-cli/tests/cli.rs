//! End-to-end tests that drive the compiled binary and check the exit-code
//! contract: 0 all checks pass, 1 a check failed, 2 parse/validation error.

use std::process::{Command, Output};

use manin_g2::report::{DeltaEntryJson, ReportJson};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_manin-g2"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn verify_base_fixture_passes() {
    let out = run(&["verify", "p=7;f=[0,5,0,0,0]"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("T = 0"), "{text}");
    assert!(text.contains("result: PASS"), "{text}");
    assert!(text.contains("delta_-1 = 16"), "{text}");
}

#[test]
fn verify_extension_fixture_reports_the_special_case() {
    let out = run(&[
        "verify",
        "p=7,k=2;f=[0,5,0,0,0]",
        "--n-range",
        "-2:2",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = ReportJson::parse(&stdout(&out)).expect("valid report JSON");
    assert_eq!(report.curve.p, 7);
    assert_eq!(report.curve.k, 2);
    assert_eq!(report.t, -28);
    assert_eq!(report.counts.n_jac, 4096);
    assert_eq!(report.special_case.map(|sc| sc.n), Some(7));
    assert!(report.hasse_weil.holds);
    assert_eq!(report.hasse_weil.discriminant, 0);
}

#[test]
fn validation_failures_exit_2() {
    for bad in [
        "p=2;f=[1,1,0,0,0]",   // even characteristic
        "p=7;f=[0,0,0,0,0]",   // not squarefree
        "p=7;f=[0,5]",         // wrong coefficient count
        "p=9;f=[0,5,0,0,0]",   // not prime
        "nonsense",
    ] {
        let out = run(&["verify", bad]);
        assert_eq!(out.status.code(), Some(2), "{bad}");
        assert!(!out.stderr.is_empty(), "{bad}");
    }
}

#[test]
fn delta_single_member_and_window() {
    let out = run(&["delta", "p=7;f=[0,5,0,0,0]", "-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("delta_-1 = 16"), "{}", stdout(&out));

    let out = run(&[
        "delta",
        "p=7;f=[0,5,0,0,0]",
        "--n-range",
        "0:2",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let entries: Vec<DeltaEntryJson> =
        serde_json::from_str(&stdout(&out)).expect("valid delta JSON");
    let values: Vec<u64> = entries.iter().map(|e| e.value).collect();
    assert_eq!(values, vec![14, 16, 22]);
}

#[test]
fn count_reports_the_jacobian_order() {
    let out = run(&["count", "p=7;f=[0,5,0,0,0]", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["n_q"], 8);
    assert_eq!(v["n_q2"], 78);
    assert_eq!(v["n_jac"], 64);
    assert_eq!(v["T"], 0);
}

#[test]
fn sweep_sample_passes_and_respects_the_guard() {
    let out = run(&[
        "sweep", "5", "--sample", "3", "--seed", "11", "--n-range", "-2:2", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["q"], 5);
    assert_eq!(v["tested"], 3);
    assert_eq!(v["passed"], 3);
    assert_eq!(v["failures"].as_array().map(Vec::len), Some(0));

    // the --max-q guard refuses oversized fields with a validation exit
    let out = run(&["sweep", "13", "--max-q", "11"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn demo_reproduces_the_supersingular_identity() {
    let out = run(&["demo-supersingular"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Phi == -7*iota: true"), "{text}");
    assert!(text.contains("zero class: true"), "{text}");
}
