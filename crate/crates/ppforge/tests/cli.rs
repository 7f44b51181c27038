use std::io::Write;
use std::process::{Command, Output, Stdio};

use proptest::prelude::*;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ppforge"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const E1E1: &str = r#"{"kind":"algebra","dim":1,"star":[[["1"]]],"circ":[[["0"]]]}"#;

#[test]
fn zinbiel_violation_is_localized() {
    let o = run(&["check", "-", "--check", "zinbiel"], Some(E1E1));
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("zinbiel at (1,1,1): lhs = [1], rhs = [2]"), "{}", stdout(&o));
}

#[test]
fn json_report() {
    let o = run(&["check", "-", "--check", "zinbiel", "--json"], Some(E1E1));
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], false);
    let viol = &v["results"][0]["violations"][0];
    assert_eq!(viol["identity"], "zinbiel");
    assert_eq!(viol["at"], serde_json::json!([1, 1, 1]));
    assert_eq!(viol["lhs"], serde_json::json!(["1"]));
}

#[test]
fn input_errors_exit_1() {
    let cases = [
        (r#"{"kind":"algebra","dim":1,"star":[[["1/0"]]],"circ":[[["0"]]]}"#, "NonRationalScalar"),
        (r#"{"kind":"algebra","dim":1,"star":[[["0.5"]]],"circ":[[["0"]]]}"#, "NonRationalScalar"),
        (r#"{"kind":"algebra","star":[[["1"]]],"circ":[[["0"]]]}"#, "MalformedInput"),
        (r#"{"kind":"algebra","dim":2,"star":[[["1"]]],"circ":[[["0"]]]}"#, "MalformedInput"),
        (r#"{"kind":"algebra","dim":1,"star":[[["1"]]],"circ":[[["0"]]],"extra":1}"#, "MalformedInput"),
        ("not json", "MalformedInput"),
    ];
    for (doc, err) in cases {
        let o = run(&["check", "-"], Some(doc));
        assert_eq!(o.status.code(), Some(1), "{doc}");
        assert!(stderr(&o).starts_with(&format!("error: {err}:")), "{doc}: {}", stderr(&o));
    }
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["check", "--catalog", "z2", "--check", "nope"][..],
        &["construct", "--catalog", "z2", "--target", "nope"],
        &["check", "--catalog", "nope"],
        &["roundtrip", "--catalog", "double-z2", "--lambda", "0"],
        &["check"],
    ] {
        let o = run(args, None);
        assert_eq!(o.status.code(), Some(1), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn classify_zero_r() {
    let doc = r#"{"kind":"rmatrix","dim":1,"star":[[["0"]]],"circ":[[["0"]]],"r":[["0"]]}"#;
    let o = run(&["classify", "-"], Some(doc));
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("triangular: true"), "{out}");
    assert!(out.contains("factorizable: false"), "{out}");
}

#[test]
fn catalog_defaults_pass() {
    let names = stdout(&run(&["catalog"], None));
    assert!(names.lines().count() > 20);
    for name in names.lines() {
        let o = run(&["check", "--catalog", name], None);
        assert_eq!(o.status.code(), Some(0), "{name}: {}{}", stdout(&o), stderr(&o));
    }
}

#[test]
fn roundtrip_weights() {
    for l in ["1", "2", "-3", "1/2"] {
        let o = run(&["roundtrip", "--catalog", "double-zp2", "--lambda", l], None);
        assert_eq!(o.status.code(), Some(0), "{l}: {}", stdout(&o));
    }
}

#[test]
fn perturbed_roundtrip_reports_difference() {
    let text = stdout(&run(&["catalog", "example-double-z2"], None));
    let line = text.lines().find(|l| l.trim_start().starts_with("\"b\"")).unwrap();
    let bad = line.replacen("\"0\"", "\"5\"", 1);
    let o = run(&["roundtrip", "-"], Some(&text.replace(line, &bad)));
    assert_eq!(o.status.code(), Some(2), "{}{}", stdout(&o), stderr(&o));
}

#[test]
fn noncanonical_input_is_normalized() {
    let messy = r#"{ "circ": [[["0"]]], "dim": 1, "kind": "algebra", "star": [[["4/-2"]]] }"#;
    let o = run(&["construct", "-", "--target", "canonical"], Some(messy));
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let canonical = "{\n  \"kind\": \"algebra\",\n  \"dim\": 1,\n  \"star\": [[[\"-2\"]]],\n  \"circ\": [[[\"0\"]]]\n}\n";
    assert_eq!(stdout(&o), canonical);
    let again = run(&["construct", "-", "--target", "canonical"], Some(canonical));
    assert_eq!(stdout(&again), canonical);
}

#[test]
fn constructions_from_the_catalog() {
    for (name, target) in [
        ("z2", "sub-adjacent"),
        ("z2", "phase-space"),
        ("trivial-zp2", "double"),
        ("triangular-z2", "coboundary"),
        ("regular-z2", "semidirect"),
        ("rb0-h3-sub", "rb0-pre-poisson"),
        ("double-pl2", "quadratic-rb"),
        ("example-double-pl2", "factorizable-r"),
        ("example-double-pl2", "rb-symplectic"),
    ] {
        let o = run(&["construct", "--catalog", name, "--target", target], None);
        assert_eq!(o.status.code(), Some(0), "{name} {target}: {}", stderr(&o));
        let back = run(&["check", "-"], Some(&stdout(&o)));
        assert_eq!(back.status.code(), Some(0), "{name} {target}: {}", stdout(&back));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scalars_are_reduced(p in -50i64..50, q in 1i64..50) {
        let doc = format!(r#"{{"kind":"algebra","dim":1,"star":[[["0"]]],"circ":[[["{p}/{q}"]]]}}"#);
        let o = run(&["construct", "-", "--target", "canonical"], Some(&doc));
        prop_assert_eq!(o.status.code(), Some(0));
        let g = num_gcd(p.abs(), q);
        let expect = if q / g == 1 { format!("{}", p / g) } else { format!("{}/{}", p / g, q / g) };
        prop_assert!(stdout(&o).contains(&format!("\"circ\": [[[\"{expect}\"]]]")), "{}", stdout(&o));
    }
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.max(1) } else { num_gcd(b, a % b) }
}
