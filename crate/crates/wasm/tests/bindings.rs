use mstruct_wasm::{construct, recognize, run_script};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).expect("bindings return JSON")
}

#[test]
fn script_round_trip() {
    let v = parse(&run_script("ring R = QQ[x,y];\nJ = ideal(x^2, y^2);\nassert(equal(length(J), 4));"));
    assert_eq!(v["ok"], true);
    assert!(v["text"].as_str().unwrap().contains("PASS assert"));
    assert_eq!(v["report"]["entries"].as_array().unwrap().len(), 3);
}

#[test]
fn script_errors_are_reported() {
    let v = parse(&run_script("ring R = QQ[x];\nI = ideal(x^);"));
    assert_eq!(v["ok"], false);
    assert_eq!(v["text"], "error: 2:12: missing operand after '^'");
    assert!(v["report"].is_null());
}

#[test]
fn recognizes_second_family() {
    let v = parse(&recognize("x, y", "x^4 + y^4, x*y"));
    let value = &v["report"]["entries"][0]["value"];
    assert_eq!(value["family"], "B");
    assert_eq!(value["n"], 4);
    assert_eq!(value["certified"], true);
}

#[test]
fn construction_passes() {
    let v = parse(&construct(3, "A", "1/2"));
    assert_eq!(v["ok"], true, "{}", v["text"]);
    let v = parse(&construct(3, "B", ""));
    assert_eq!(v["ok"], true);
    let v = parse(&construct(3, "C", ""));
    assert_eq!(v["ok"], false);
}
