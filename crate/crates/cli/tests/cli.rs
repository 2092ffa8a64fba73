use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn mstruct(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mstruct"))
        .current_dir(root())
        .args(args)
        .output()
        .expect("failed to spawn mstruct")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// Compares against `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites it.
fn assert_golden(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "output differs from golden file {name}");
}

fn run_with_report(args: &[&str]) -> (Output, String) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut full: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    full.extend(["--report", &p]);
    let out = mstruct(&full);
    let json = fs::read_to_string(&path).unwrap_or_default();
    (out, json)
}

#[test]
fn running_example_golden() {
    let (out, json) = run_with_report(&["run", "scripts/running_example.ms"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_golden("running_example.txt", &stdout(&out));
    assert_golden("running_example.json", &json);
}

#[test]
fn examples_golden() {
    let (out, json) = run_with_report(&["examples"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_golden("examples.json", &json);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let plane = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["label"] == "plane-p6/r0")
        .expect("plane example present");
    assert_eq!(plane["value"]["structure"]["multiplicity"], 4);
    assert_eq!(plane["value"]["structure"]["m"], 2);
}

#[test]
fn reports_are_byte_identical() {
    let (_, a) = run_with_report(&["run", "scripts/construction.ms"]);
    let (_, b) = run_with_report(&["run", "scripts/construction.ms"]);
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn failing_check_exits_nonzero() {
    let out = mstruct(&["run", data("failing.ms").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL assert: contains(I, x)"));
}

#[test]
fn syntax_error_is_located() {
    let out = mstruct(&["run", data("bad_syntax.ms").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("2:12: missing operand after '^'"), "{}", stderr(&out));
}

#[test]
fn runtime_error_names_statement() {
    let out = mstruct(&["run", data("runtime_error.ms").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3: `f = I + x`"), "{}", stderr(&out));
}

#[test]
fn construct_subcommand() {
    let out = mstruct(&["construct", "-n", "5", "--case", "B", "--lambda", "2", "--mu", "-3"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("[construct/B/n5]"));
    assert!(text.contains("normal_form: B(n=5)"));
    assert!(!text.contains("FAIL"));

    let out = mstruct(&["construct", "-n", "4", "--alphas", "1/2,-1"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("multiplicity: 8"));

    let out = mstruct(&["construct", "-n", "3", "--case", "B", "--alphas", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_subcommand() {
    let out = mstruct(&["check", "scripts/running_example.ideal"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("m: 3"));
    assert!(text.contains("NOTE lci"));
}

#[test]
fn global_flags() {
    let out = mstruct(&["run", "scripts/running_example.ms", "--order", "lex", "--trunc", "8"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("QQ[x,y] order grevlex"));

    let out = mstruct(&["--chart", "w=2", "examples"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mstruct(&["--order", "fancy", "examples"]);
    assert_eq!(out.status.code(), Some(2));
}
