use std::cmp::Ordering;
use std::path::PathBuf;
use std::process::{Command, Output};

use monord::orderings::{kb_cmp, min_type_cmp, triangle_cmp};
use monord::{MonomialIdeal, TermOrder};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn monord(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monord"))
        .args(args)
        .env_remove("MONORD_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

fn load(name: &str) -> MonomialIdeal {
    MonomialIdeal::parse(&std::fs::read_to_string(data(name)).unwrap()).unwrap()
}

#[test]
fn normalize_drops_redundant_generators() {
    let out = monord(&["normalize", &data("redundant.ideal")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "dim 2\n1 0");
}

#[test]
fn normalize_round_trips() {
    for name in ["redundant.ideal", "staircase.ideal", "three.ideal", "zero2.ideal", "unit2.ideal"] {
        let out = monord(&["normalize", &data(name)]);
        let again = MonomialIdeal::parse(&stdout(&out)).unwrap();
        assert_eq!(again, load(name), "{name}");
        let out = monord(&["--json", "normalize", &data(name)]);
        let again: MonomialIdeal = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(again, load(name), "{name}");
    }
}

#[test]
fn hilbert_json_for_zero_ideal() {
    let v = json(&monord(&["--json", "hilbert", &data("zero2.ideal")]));
    assert_eq!(v["p"], serde_json::json!([0, 0, 1]));
    assert_eq!(v["p_text"], "C(T+2,2)");
    assert_eq!(v["psi"], "w^2");
    assert_eq!(v["height"], "w^2");
    assert!(v["c"].is_null() && v["n0"].is_null());
}

#[test]
fn hilbert_json_fields() {
    let v = json(&monord(&["--json", "hilbert", &data("staircase.ideal"), "--upto", "5"]));
    for key in ["H", "h", "p", "threshold", "c", "psi", "phi", "n0", "height"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["H"], serde_json::json!([1, 2, 3, 3, 3, 3]));
    assert_eq!(v["h"], serde_json::json!([1, 3, 6, 9, 12, 15]));
    assert_eq!(v["c"], serde_json::json!([3, 0]));
    assert_eq!(v["psi"], "w*3");
    assert_eq!(v["phi"], 3);
    assert_eq!(v["threshold"], 3);
}

#[test]
fn bounds_text() {
    let out = monord(&["bounds", "2"]);
    let text = stdout(&out);
    assert!(text.contains("height: w^2 + 1"));
    assert!(text.contains("kb: w^w + 1"));
    assert!(text.contains("upper: w^(w^2 + w*2 + 1)"));
    assert_eq!(monord(&["bounds", "0"]).status.code(), Some(65));
}

#[test]
fn compare_exit_codes_match_library() {
    let names = [
        "redundant.ideal",
        "staircase.ideal",
        "zero2.ideal",
        "unit2.ideal",
        "y2.ideal",
        "xy.ideal",
        "x2.ideal",
    ];
    for a in names {
        for b in names {
            let (e, f) = (load(a), load(b));
            let expected = [
                ("kb", kb_cmp(&e, &f, &TermOrder::DegLex).unwrap()),
                ("triangle", triangle_cmp(&e, &f).unwrap()),
                ("mintype", min_type_cmp(&e, &f).unwrap()),
            ];
            for (order, want) in expected {
                let out = monord(&["compare", "--order", order, &data(a), &data(b)]);
                let code = match want {
                    Ordering::Less => 10,
                    Ordering::Equal => 11,
                    Ordering::Greater => 12,
                };
                assert_eq!(out.status.code(), Some(code), "{order} {a} {b}");
                let v = json(&out);
                assert_eq!(v["order"], order);
                assert!(v["decision"]["by"].is_string());
            }
        }
    }
}

#[test]
fn compare_term_orders() {
    let a = data("three.ideal");
    let b = data("three_b.ideal");
    let m = format!("matrix:{}", data("grevlexish.matrix"));
    assert!(matches!(monord(&["compare", "--term-order", &m, &a, &b]).status.code(), Some(10 | 12)));
    // plain lex is not of type ω in three variables
    let lex = format!("matrix:{}", data("lex3.matrix"));
    assert_eq!(monord(&["compare", "--term-order", "lex", &a, &b]).status.code(), Some(64));
    assert_eq!(monord(&["compare", "--term-order", &lex, &a, &b]).status.code(), Some(64));
    assert_eq!(monord(&["compare", "--term-order", "revlex", &a, &b]).status.code(), Some(64));
    let dims = monord(&["compare", &a, &data("xy.ideal")]);
    assert_eq!(dims.status.code(), Some(65));
}

#[test]
fn chainbound_values_and_budget() {
    assert_eq!(stdout(&monord(&["chainbound", "--m", "2", "--affine", "1,0"])).trim(), "3");
    assert_eq!(stdout(&monord(&["chainbound", "--m", "1", "--affine", "1,0", "--tm"])).trim(), "3");
    let out = monord(&["chainbound", "--m", "4", "--affine", "2,1"]);
    assert_eq!(out.status.code(), Some(69));
    assert!(stdout(&out).starts_with("budget exceeded at depth "));
    let out = Command::new(env!("CARGO_BIN_EXE_monord"))
        .args(["chainbound", "--m", "3", "--affine", "2,1"])
        .env("MONORD_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(69));
    let v = json(&monord(&["--json", "chainbound", "--m", "2", "--affine", "1,0", "--sequence", "5"]));
    assert_eq!(v["value"], 3);
    assert_eq!(v["sequence"], serde_json::json!([[1, 0], [0, 1], [0, 0]]));
}

#[test]
fn decompose_and_friends() {
    let out = monord(&["--json", "decompose", &data("staircase.ideal")]);
    assert_eq!(json(&out)["components"], serde_json::json!([[0, 1], [2, 0]]));
    assert_eq!(monord(&["decompose", &data("zero2.ideal")]).status.code(), Some(65));
    let out = monord(&["lexify", &data("y2.ideal")]);
    assert_eq!(stdout(&out).trim(), "dim 2\n2 0");
    let out = monord(&["contains", &data("staircase.ideal"), "x1^3*x2"]);
    assert_eq!(stdout(&out).trim(), "true");
    let out = monord(&["contains", &data("staircase.ideal"), "0 5"]);
    assert_eq!(stdout(&out).trim(), "false");
    let out = monord(&["cone", &data("xy.ideal")]);
    assert_eq!(stdout(&out).trim(), "dim 3\n1 1 0");
    let out = monord(&["directsum", &data("x2.ideal"), &data("y2.ideal")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("dim 4"));
}

#[test]
fn ordinal_eval() {
    assert_eq!(stdout(&monord(&["ordinal-eval", "[w + 1]**2"])).trim(), "w^2 + w*2 + 1");
    let v = json(&monord(&["--json", "ordinal-eval", "ot[w + 1]"]));
    assert_eq!(v["value"], "w^(w + 1) + 1");
    assert_eq!(v["successor"], true);
    assert_eq!(monord(&["ordinal-eval", "w + w^2"]).status.code(), Some(65));
}

#[test]
fn errors_and_usage() {
    let out = monord(&["normalize", &data("malformed.ideal")]);
    assert_eq!(out.status.code(), Some(65));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2, column 3"), "{err}");
    assert_eq!(monord(&["normalize", "/nonexistent/file.ideal"]).status.code(), Some(64));
    assert_eq!(monord(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(monord(&["chainbound", "--m", "2", "--affine", "x"]).status.code(), Some(64));
}
