use std::process::{Command, Output};

use altdiag_cli::Report;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altdiag"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("spawn altdiag")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_report(args: &[&str]) -> (Report, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = run(&full);
    let text = stdout(&o);
    let report: Report = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    // re-serialising gives the same document
    assert_eq!(report.to_json() + "\n", text);
    (report, o.status.code().unwrap())
}

#[test]
fn validate_with_oracle() {
    let o = run(&["validate", "--params", "2 1 1 5", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(
        out.lines().next().unwrap(),
        "alternating: yes (closed-form ✓, trace ✓), class M1(2;0,1,1)"
    );
}

#[test]
fn invalid_diagram_exits_one() {
    let o = run(&["validate", "--params", "2 0 0 0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("alternating: no"));
    let o = run(&["canon", "--params", "3 0 0 0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two_with_schema() {
    for args in [
        vec!["validate", "--params", "2 1 1"],
        vec!["validate"],
        vec!["canon", "--class", "M3(2;0,1,1)"],
        vec!["bogus"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    let o = run(&["homology", "--params", "2 x 1 5"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--params \"n m1 m2 m3"));
}

#[test]
fn poincare_sphere_identified() {
    let o = run(&["identify", "--params", "20 1 13 5 1 0", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(
        out.lines().next().unwrap(),
        "S2(-1/2,1/3,1/5) [Poincaré]; H1 check: match (trivial)"
    );
    assert!(out.contains("first field read as 4n"));
    // unambiguous spellings of the same diagram
    for input in [
        ["--params", "5 1 13 5 1 0"],
        ["--params", "D(20;1[1],13,5)"],
        ["--class", "M1(5;0[1],4,1)"],
    ] {
        let o = run(&["identify", input[0], input[1], "--check"]);
        assert!(stdout(&o).starts_with("S2(-1/2,1/3,1/5) [Poincaré]; H1 check: match (trivial)"));
    }
}

#[test]
fn enumerate_n1() {
    let (r, code) = json_report(&["enumerate", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r.results[0].text, "M1(1;0,1,0), M2(1;0,1,0)");
}

#[test]
fn homology_of_d8_1_1_5() {
    let (r, _) = json_report(&["homology", "--params", "2 1 1 5"]);
    let h1 = r.results.iter().find(|f| f.key == "h1").unwrap();
    assert_eq!(h1.text, "Z/2 + Z/2");
    assert_eq!(h1.value, serde_json::json!([2, 2]));
}

#[test]
fn json_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    std::fs::write(
        &path,
        r#"{"n":5,"m":[1,13,5],"l":1,"r":0,"prefactor":[0,0]}"#,
    )
    .unwrap();
    let (r, code) = json_report(&["canon", "--json", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r.summary, "M1(5;0[1],4,1)");
}

#[test]
fn every_command_round_trips_json() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("x.svg");
    let svg = svg.to_str().unwrap();
    for args in [
        vec!["validate", "--params", "3 1 5 3", "--oracle"],
        vec!["canon", "--class", "M2(4;1,2,1)"],
        vec!["enumerate", "--n", "2", "--max-n", "3"],
        vec!["homology", "--class", "M1(3;0[2],1[-1],0)"],
        vec!["identify", "--class", "M1(7;0,5,2)", "--check"],
        vec!["render", "--params", "2 1 1 5", "--out", svg],
        vec![
            "render",
            "--class",
            "M1(5;0[1],4,1)",
            "--branch-link",
            "--out",
            svg,
        ],
    ] {
        let (r, code) = json_report(&args);
        assert_eq!(code, r.exit_status, "{args:?}");
    }
}

#[test]
fn identify_warnings() {
    let (r, _) = json_report(&["identify", "--params", "2 1 1 5"]);
    assert!(r
        .warnings
        .iter()
        .any(|w| w.contains("overlapping identifications")));
    let (r, _) = json_report(&["identify", "--class", "M1(3;0[2],1[-1],0)"]);
    assert!(r.warnings.iter().any(|w| w.contains("s = r")));
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.svg");
    let o = run(&[
        "render",
        "--params",
        "2 1 1 5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<?xml") || svg.starts_with("<svg"));
    assert_eq!(svg.matches("class=\"arc\"").count(), 32);
}

#[test]
fn sweep_reports_every_criterion() {
    let o = run(&["sweep", "--max-n", "2"]);
    let out = stdout(&o);
    for k in 1..=8 {
        assert!(out.contains(&format!("criterion {k}: [")), "{out}");
    }
    assert!(out.contains("smith_random: 10000 matrices ok"));
    // the canonical-set clause of criterion 6 does not hold, so sweep fails
    assert!(out.contains("[FAIL] 6."));
    assert_eq!(o.status.code(), Some(1));
}
