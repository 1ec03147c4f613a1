use std::process::{Command, Output};

const TORIC: &str = r#"{
  "name": "toric",
  "conductor": 2,
  "labels": ["1", "e", "m", "f"],
  "S": [
    [[[0,1,1]], [[0,1,1]], [[0,1,1]], [[0,1,1]]],
    [[[0,1,1]], [[0,1,1]], [[0,-1,1]], [[0,-1,1]]],
    [[[0,1,1]], [[0,-1,1]], [[0,1,1]], [[0,-1,1]]],
    [[[0,1,1]], [[0,-1,1]], [[0,-1,1]], [[0,1,1]]]
  ],
  "T": [0, 0, 0, 1]
}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modcat")).args(args).output().expect("spawn modcat")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn validate_catalog() {
    for name in ["toric_code", "double_semion", "fibonacci"] {
        let o = run(&["validate", "--catalog", name]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert!(stdout(&o).starts_with(&format!("valid: {name}")));
    }
}

#[test]
fn validate_file_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(&dir, "toric.json", TORIC);
    let o = run(&["validate", &good, "--format", "rows"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "valid\ttoric\t4\t2\t2\t1:[[0,4,1]]\n");

    let bad = write(&dir, "bad.json", &TORIC.replacen("[[0,1,1]]]\n  ]", "[[0,2,1]]]\n  ]", 1));
    let o = run(&["validate", &bad]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("violation: Verlinde integrality")), "{text}");

    let o = run(&["reps", &bad]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn input_errors() {
    assert_eq!(run(&["validate", "/nonexistent/x.json"]).status.code(), Some(2));
    assert_eq!(run(&["validate", "--catalog", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["validate"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "x.json", "{\"name\": 1}");
    let o = run(&["validate", &p]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
}

#[test]
fn double_then_validate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.json");
    let p = path.to_str().unwrap();
    for name in ["toric_code", "fibonacci"] {
        assert_eq!(run(&["double", "--catalog", name, "-o", p]).status.code(), Some(0));
        let o = run(&["validate", p]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).starts_with(&format!("valid: Z({name})")));
    }
}

#[test]
fn congruence_examples() {
    let o = run(&["congruence", "--catalog", "toric_code"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("canonical: level 2, image 6"));
    let o = run(&["congruence", "--catalog", "double_semion", "--format", "rows"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 13);
    assert_eq!(text.lines().next().unwrap(), "congruence\tcanonical\t4\t4\t4\t24\ttrue");
}

#[test]
fn caps_are_reported() {
    let o = run(&["congruence", "--catalog", "double_semion", "--enum-cap", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("cap exceeded"));
    let o = run(&["image", "--catalog", "toric_code", "--closure-cap", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(run(&["image", "--catalog", "toric_code", "--closure-cap", "0"]).status.code(), Some(2));
}

#[test]
fn indicator_rows_are_deterministic() {
    let args = ["indicators", "--catalog", "double_semion", "--m-range", "1..3", "--l-range", "-1..1", "--format", "rows"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().count(), 3 * 3 * 16 * 4);
    assert!(text.lines().all(|l| l.starts_with("nu\t")));
    assert!(text.lines().any(|l| l == "nu\t1\t0\t0\t0\t0\t1:[[0,1,1]]"));
    assert_eq!(run(&["indicators", "--catalog", "fibonacci", "--m-range", "3..1"]).status.code(), Some(2));
}

#[test]
fn bantay_second_indicator() {
    let o = run(&["bantay", "--catalog", "double_semion", "--m", "2", "--format", "rows"]);
    let text = stdout(&o);
    let classical: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("bantay\t2\t0\t0\t"))
        .map(|l| l.rsplit('\t').next().unwrap())
        .collect();
    assert_eq!(classical, ["1:[[0,1,1]]", "1:[[0,1,1]]", "1:[[0,-1,1]]", "1:[[0,-1,1]]"]);
}

#[test]
fn y_tensors() {
    let o = run(&["y", "--catalog", "toric_code", "--m", "2", "--format", "rows"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 64);
    let o = run(&["y", "--catalog", "toric_code", "--m", "2", "--root", "0,0,0,18"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["y", "--catalog", "toric_code", "--m", "2", "--root", "0,0,0,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn equiv_check_and_report() {
    let o = run(&["equiv-check", "--catalog", "fibonacci", "--m-max", "4", "--l-max", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 violations: all hold"));
    let o = run(&["report", "--catalog", "toric_code"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for section in ["== validate ==", "== liftings ==", "== congruence ==", "== indicator identities =="] {
        assert!(text.contains(section), "{section}");
    }
}
