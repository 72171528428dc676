use std::io::Write;
use std::process::{Command, Output};

use weightsys::poly::TermJson;
use weightsys::Polynomial;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weightsys"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn eval_examples() {
    let cases: [(&[&str], &str); 4] = [
        (&["eval", "so", "2 1"], "C2"),
        (&["eval", "gl", "--diagram", "1 2 1 2"], "C1^2 + C2^2 - C0*C2"),
        (&["eval", "so", "--diagram", "1 2 1 2"], "C2^2 - 2*C0*C2 + 4*C2"),
        (&["eval", "so", "--diagram", "(1,3)(2,4)", "--canonicalize-rotations"], "C2^2 - 2*C0*C2 + 4*C2"),
    ];
    for (args, expected) in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&o).trim(), expected);
    }
}

#[test]
fn parse_errors_exit_with_two() {
    let o = run(&["eval", "gl", "1 x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("`x`"));
    let o = run(&["eval", "so", "--diagram", "1 2 1"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(&["eval", "su", "2 1"]).status.code(), Some(2));
    assert_eq!(run(&["dims", "--max-n", "9"]).status.code(), Some(2));
    assert_eq!(run(&["odd-casimirs", "--max", "4"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "pp", "--family", "so", "--M", "1"]).status.code(), Some(2));
}

#[test]
fn json_round_trip() {
    let o = run(&["--format", "json", "eval", "so", "3 4 1 2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "so");
    let terms: Vec<TermJson> = serde_json::from_value(v["value"].clone()).unwrap();
    let p = Polynomial::from_json(&terms).unwrap();
    assert_eq!(p.to_string(), "C2^2 - 2*C0*C2 + 4*C2");
}

#[test]
fn file_input() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "2 1\n# comment\n\n2 3 1").unwrap();
    let path = f.path().to_str().unwrap();
    let o = run(&["eval", "so", "--file", path]);
    assert_eq!(stdout(&o), "C2\n1/2*C0*C2 - C2\n");
    let o = run(&["--format", "json", "eval", "gl", "--file", path]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn dims_table() {
    let o = run(&["dims", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let dims: Vec<String> = stdout(&o)
        .lines()
        .map(|l| l.split_whitespace().find(|t| t.starts_with("dim_A=")).unwrap().to_string())
        .collect();
    assert_eq!(dims, ["dim_A=1", "dim_A=2", "dim_A=3", "dim_A=6", "dim_A=10"]);
    assert!(stdout(&o).lines().all(|l| l.ends_with("ker_gl=0 ker_joint=0")));
    assert!(stderr(&o).contains("computing n = 5"));
    // text output is reproducible
    assert_eq!(stdout(&run(&["dims", "--max-n", "5"])), stdout(&o));

    let o = run(&["--format", "json", "dims", "--max-n", "6"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let last = &v.as_array().unwrap()[5];
    assert_eq!(last["dim_A"], 19);
    assert_eq!(last["ker_gl"], 1);
    assert_eq!(last["ker_joint"], 1);
    for key in ["n", "num_diagrams", "rank_4T", "elapsed"] {
        assert!(last.get(key).is_some(), "{key}");
    }
}

#[test]
fn kernels_at_six() {
    let o = run(&["kernels", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("n=6 dim_A=19 ker_gl=1 ker_joint=1"));
    assert_eq!(out.lines().filter(|l| l.starts_with("kernel ")).count(), 1);
}

#[test]
fn verifications_pass() {
    for args in [
        &["verify", "h"][..],
        &["verify", "odd-casimirs", "--max", "7"],
        &["verify", "oracle", "--family", "so", "--N", "3", "--max-size", "3"],
        &["verify", "pp", "--family", "sp", "--M", "2", "--order", "8"],
        &["pp-verify", "--family", "osp", "--N", "3", "--M", "1"],
        &["oracle", "--family", "sp", "--M", "1", "--perm", "2 3 1"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert_eq!(stdout(&o).lines().last(), Some("PASS"), "{args:?}");
    }
    let o = run(&["verify", "h"]);
    assert!(stdout(&o).contains("w_gl(h) = 0"));
}

#[test]
fn odd_casimirs_listing() {
    let o = run(&["odd-casimirs", "--max", "3"]);
    assert_eq!(stdout(&o), "C1 = 0\nC3 = 1/2*C0*C2 - C2\n");
    let o = run(&["--format", "json", "pp-verify", "--family", "so", "--N", "4", "--order", "6"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["family"], "so");
    assert_eq!(v["N"], 4);
    assert_eq!(v["reflection_ok"], true);
    assert!(v["first_failure"].is_null());
}
