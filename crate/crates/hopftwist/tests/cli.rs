//! Black-box tests of the command-line interface: exit codes, JSON reports,
//! file round trips, and the verification mode.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopftwist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, content).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn validate_exit_codes() {
    let out = run(&["validate", "--preset", "sweedler"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("valid"));

    let out = run(&["validate", "--preset", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["validate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn theta_group_function_z2() {
    let out = run(&["theta", "--preset", "groupFunctionAlgebra", "--group", "Z2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "t_e^2 - t_g^2");
}

#[test]
fn identity_verdict_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let yy = write(
        dir.path(),
        "yy.json",
        r#"{"terms":[{"coeff":"1","word":[2,2]}]}"#,
    );
    // Y^2 is central but has a nonzero universal image, so it is no identity
    let out = run(&["identity-test", "--preset", "sweedler", "--poly", &yy]);
    assert_eq!(out.status.code(), Some(1));

    // commutator of two central words is an identity
    let comm = write(
        dir.path(),
        "comm.json",
        r#"{"terms":[{"coeff":"1","word":[0,1,1]},{"coeff":"-1","word":[1,1,0]}]}"#,
    );
    let out = run(&["identity-test", "--preset", "sweedler", "--poly", &comm]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["central-test", "--preset", "sweedler", "--poly", &yy]);
    assert_eq!(out.status.code(), Some(0));

    // the quadric relation T^2 - 4 X^2 Y^2 - ((b^2-4ac)/a) E^2 X^2
    let quadric = write(
        dir.path(),
        "quadric.json",
        r#"{"terms":[
            {"coeff":"1","word":[1,2,1,2]},
            {"coeff":"1","word":[1,2,2,1]},
            {"coeff":"1","word":[2,1,1,2]},
            {"coeff":"1","word":[2,1,2,1]},
            {"coeff":"-4","word":[1,1,2,2]},
            {"coeff":"-(b^2 - 4 a c)/a","word":[0,0,1,1]}
        ]}"#,
    );
    let out = run(&["identity-test", "--preset", "sweedler", "--poly", &quadric]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("is an H-identity"));
}

#[test]
fn json_report_and_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let out = run(&[
        "sigma",
        "--preset",
        "sweedler",
        "--json",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["report"]["sigma"][0][0], "t_1");
    assert_eq!(
        parsed["report"]["sigmaInv"][0][0],
        parsed["report"]["sigmaInv"][0][1]
    );

    let out = run(&["--verify", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verified"));

    // tampering with the stored verdict is detected
    let mut tampered: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    tampered["report"]["sigma"][0][0] = Value::String("t_x".into());
    fs::write(&report, serde_json::to_string(&tampered).unwrap()).unwrap();
    let out = run(&["--verify", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn hopf_file_round_trip() {
    // a hand-written k[Z/2] in the exchange schema
    let dir = tempfile::tempdir().unwrap();
    let hopf = write(
        dir.path(),
        "kz2.json",
        r#"{
            "name": "kZ2",
            "dim": 2,
            "basis": ["e", "g"],
            "counit": ["1", "1"],
            "delta": [
                {"of": 0, "terms": [[0, 0, "1"]]},
                {"of": 1, "terms": [[1, 1, "1"]]}
            ],
            "mult": [
                {"left": 0, "right": 0, "terms": [[0, "1"]]},
                {"left": 0, "right": 1, "terms": [[1, "1"]]},
                {"left": 1, "right": 0, "terms": [[1, "1"]]},
                {"left": 1, "right": 1, "terms": [[0, "1"]]}
            ],
            "unit": ["1", "0"],
            "antipode": [["1", "0"], ["0", "1"]]
        }"#,
    );
    let out = run(&["theta", "--hopf", &hopf]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "t_e*t_g");

    let out = run(&["tinv", "--hopf", &hopf]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("tinv_g = 1/t_g"));

    // a broken antipode is a false verdict for validate
    let broken = fs::read_to_string(&hopf)
        .unwrap()
        .replace(r#"[["1", "0"], ["0", "1"]]"#, r#"[["1", "0"], ["0", "-1"]]"#);
    let bad = write(dir.path(), "bad.json", &broken);
    let out = run(&["validate", "--hopf", &bad]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cocycle_file_and_twist() {
    let dir = tempfile::tempdir().unwrap();
    // a nontrivial cocycle on k[Z/2]: alpha(g,g) = 5
    let coc = write(dir.path(), "alpha.json", r#"[["1","1"],["1","5"]]"#);
    let out = run(&[
        "twist-table",
        "--preset",
        "groupAlgebra",
        "--group",
        "Z2",
        "--cocycle",
        &coc,
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("g . g = (5) (x) e"));

    // a non-cocycle is rejected with a counterexample and exit 1
    let bad = write(dir.path(), "bad.json", r#"[["1","2"],["1","5"]]"#);
    let out = run(&[
        "cocycle-check",
        "--preset",
        "groupAlgebra",
        "--group",
        "Z2",
        "--cocycle",
        &bad,
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("fails at"));
}

#[test]
fn search_report_schema() {
    let out = run(&[
        "identity-search",
        "--preset",
        "sweedler",
        "--a",
        "1",
        "--b",
        "0",
        "--c",
        "1",
        "--degree",
        "2",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["report"]["degree"], 2);
    assert_eq!(v["report"]["verified"], true);
    assert!(v["report"]["kernelDim"].as_u64().unwrap() > 0);
    assert!(v["report"]["basis"].as_array().unwrap().len() > 0);
}

#[test]
fn column_cap_is_enforced() {
    let out = Command::new(env!("CARGO_BIN_EXE_hopftwist"))
        .args(["identity-search", "--preset", "sweedler", "--degree", "4"])
        .env("HOPFTWIST_COLUMN_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("cap"));
}

#[test]
fn sigma_spec_denominator_error() {
    let dir = tempfile::tempdir().unwrap();
    let assign = write(
        dir.path(),
        "assign.json",
        r#"{"t_1":"0","t_x":"1","t_y":"0","t_z":"0"}"#,
    );
    let out = run(&[
        "sigma-spec",
        "--preset",
        "sweedler",
        "--assign",
        &assign,
    ]);
    assert_eq!(out.status.code(), Some(2));
}
