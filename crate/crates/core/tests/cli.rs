use std::process::{Command, Output};

use serde_json::Value;

use qweyl::{MWElement, QPoly, SymElement};

fn qweyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qweyl"))
        .args(args)
        .env_remove("QWEYL_MAX_GUARD")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .trim_end()
        .to_string()
}

fn ok(args: &[&str]) -> String {
    let out = qweyl(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    serde_json::from_str(&ok(&all)).unwrap()
}

#[test]
fn normal_order_renderings() {
    assert_eq!(ok(&["normal-order", "yx"]), "(q)*x^1*y^1 + (1)*x^2");
    assert_eq!(ok(&["normal-order", ""]), "(1)");
    assert_eq!(
        ok(&["normal-order", "yxx", "--format", "latex"]),
        "q^{2}x^{2}y + (1+q)x^{3}"
    );
    assert_eq!(
        ok(&["normal-order", "yx", "--q-at", "1/2"]),
        "(1/2)*x^1*y^1 + (1)*x^2"
    );
    assert_eq!(
        ok(&["normal-order", "yxyyx", "--strategy", "rightmost"]),
        ok(&["normal-order", "yxyyx"])
    );
}

#[test]
fn json_envelope_round_trips() {
    let doc = json(&["normal-order", "yyxx"]);
    assert_eq!(doc["kind"], "mw_element");
    assert_eq!(doc["meta"]["guards"]["word_len"], 64);
    let value = MWElement::from_json(&doc["value"]).unwrap();
    let text = ok(&["normal-order", "yyxx"]);
    assert_eq!(value.to_string(), text);

    let doc = json(&["ncoeff", "3", "2", "1"]);
    assert_eq!(
        QPoly::from_json(&doc["value"]).unwrap().to_string(),
        ok(&["ncoeff", "3", "2", "1"])
    );

    let doc = json(&["sympow", "(1,1)(2,1);(2,2)(1,1)", "--scaled"]);
    let e = SymElement::from_json(&doc["value"]).unwrap();
    assert_eq!(e.terms().len(), 8);

    // big integers travel as strings
    let doc = json(&["npoly", "(2,3)(3,3)(3,4)", "6", "--method", "q1"]);
    assert_eq!(doc["value"], Value::String("59400".into()));
}

#[test]
fn ncoeff_methods() {
    let all = ok(&["ncoeff", "2", "1", "1", "--method", "all"]);
    assert_eq!(all.lines().filter(|l| l.ends_with(": q + q^2")).count(), 4);
    assert!(all.ends_with("AGREE"));
    assert_eq!(ok(&["ncoeff", "3", "2", "0"]), "q^6");
    assert_eq!(ok(&["ncoeff", "0", "5", "1"]), "0");
    // the subset forms need b >= 1; the comparison skips them
    let zero_b = ok(&["ncoeff", "2", "0", "0", "--method", "all"]);
    assert!(zero_b.contains("subsets: n/a"));
    assert!(zero_b.ends_with("AGREE"));
    assert_eq!(
        qweyl(&["ncoeff", "2", "0", "0", "--method", "subsets"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn npoly_methods() {
    assert_eq!(ok(&["npoly", "(1,1)(1,1)", "0"]), "q");
    assert_eq!(ok(&["npoly", "(1,1)(1,1)", "0", "--method", "juju"]), "q");
    assert_eq!(ok(&["npoly", "(3,4)", "0"]), "1");
    assert_eq!(
        ok(&["npoly", "(2,3)(3,3)(3,4)", "6", "--method", "q1"]),
        "59400"
    );
    assert_eq!(ok(&["npoly", "(0,2)(1,0)", "2", "--method", "mk"]), "2");
    assert!(ok(&["npoly", "(1,2)(2,1)", "1", "--method", "all"]).ends_with("AGREE"));
}

#[test]
fn sympow_methods() {
    let both = ok(&["sympow", "(1,1)(2,1);(2,2)(1,1)", "--method", "both"]);
    assert_eq!(both.lines().count(), 3);
    assert!(both.ends_with("AGREE"));
    assert_eq!(ok(&["sympow", "(1,1)(2,1)"]), "(1)*x1^1*y1^1*x2^2*y2^1");
    let scaled = ok(&["sympow", "(1,1)(2,1);(2,2)(1,1)", "--scaled"]);
    assert!(scaled.contains("(1 + q)*x1^3*y1^1*x2^5*y2^2"));
    let halved = ok(&["sympow", "(1,1)(2,1);(2,2)(1,1)"]);
    assert!(halved.contains("(1/2 + 1/2*q)*x1^3*y1^1*x2^5*y2^2"));
}

#[test]
fn verify_suites() {
    let out = ok(&["verify", "c-coeffs", "--max-a", "6", "--max-b", "6"]);
    assert_eq!(out, "c-coeffs: PASS (280 cases)");
    let printed = ok(&[
        "verify",
        "identities",
        "--variant",
        "printed",
        "--max-n",
        "2",
    ]);
    assert!(printed.contains("REPORTED"));
    assert!(printed.contains("Primary/Rho: holds in 81/81 cases with one pair"));
    let small = [
        "verify",
        "all",
        "--max-a",
        "3",
        "--max-b",
        "3",
        "--max-n",
        "2",
        "--max-exp",
        "1",
        "--max-total",
        "6",
        "--max-word",
        "4",
        "--random",
        "10",
    ];
    assert!(ok(&small)
        .lines()
        .filter(|l| !l.starts_with(' '))
        .all(|l| l.contains("PASS")));
}

#[test]
fn exit_codes() {
    assert_eq!(qweyl(&["normal-order", "xzy"]).status.code(), Some(2));
    assert_eq!(qweyl(&["npoly", "(1,2", "0"]).status.code(), Some(2));
    assert_eq!(
        qweyl(&["sympow", "(1,1);(1,1)(2,2)"]).status.code(),
        Some(2)
    );
    assert_eq!(qweyl(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        qweyl(&["ncoeff", "1", "1", "1", "--q-at", "one half"])
            .status
            .code(),
        Some(2)
    );
    let long = "yx".repeat(33);
    assert_eq!(qweyl(&["normal-order", &long]).status.code(), Some(3));
    assert_eq!(
        qweyl(&["npoly", "(2,3)(3,3)(3,4)", "6", "--method", "mk"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn guard_variable_raises_limits() {
    let out = Command::new(env!("CARGO_BIN_EXE_qweyl"))
        .args(["npoly", "(2,3)(3,3)(3,4)", "6", "--method", "mk"])
        .env("QWEYL_MAX_GUARD", "18")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "59400");
}

#[test]
fn output_is_deterministic() {
    let args = ["sympow", "(1,2)(0,1);(1,0)(2,1)", "--format", "json"];
    assert_eq!(ok(&args), ok(&args));
}
