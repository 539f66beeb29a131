use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use greenstone::format::{parse_document, Document};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_greenstone"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

const T2: &str = r#"{"kind":"transformations","degree":2,"generators":[[1,0],[0,0]]}"#;
const TRIVIAL: &str = r#"{"kind":"table","order":1,"table":[[0]]}"#;
const TRIVIAL_BIACT: &str = r#"{"kind":"biact","left":{"kind":"table","order":1,"table":[[0]]},"right":{"kind":"table","order":1,"table":[[0]]},"size":1,"left_action":[[0]],"right_action":[[0]]}"#;

#[test]
fn analyze_t2() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "t2.json", T2);
    let o = run(&["analyze", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("L:3 R:2 J:2 H:3 D:2; stable: true"));
}

#[test]
fn analyze_trivial_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "one.json", TRIVIAL);
    let o = run(&["analyze", f.to_str().unwrap()]);
    assert!(stdout(&o).contains("L:1 R:1 J:1 H:1 D:1"));
    let o = run(&["analyze", "--json", f.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["counts"]["J"], 1);
    assert_eq!(v["predicates"]["stable"]["value"], true);
}

#[test]
fn malformed_input_names_byte_offset() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "bad.json",
        r#"{"kind":"table","order":2,"table":[[0,1],[1,?]]}"#,
    );
    let o = run(&["analyze", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error at byte 44"));
    let f = write(
        dir.path(),
        "nonassoc.json",
        r#"{"kind":"table","order":2,"table":[[1,0],[0,0]]}"#,
    );
    assert_eq!(
        run(&["analyze", f.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(4));
    assert_eq!(run(&["verify", "--bogus"]).status.code(), Some(4));
    assert_eq!(run(&["verify", "--suite", "P9.9"]).status.code(), Some(4));
    assert_eq!(run(&["catalog", "show", "nope"]).status.code(), Some(4));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn index_of_units_in_t2() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "t2.json", T2);
    let o = run(&[
        "index",
        "--semigroup",
        f.to_str().unwrap(),
        "--sub",
        "01,10",
    ]);
    assert_eq!(stdout(&o).trim(), "3");
}

#[test]
fn bicyclic_chain_dump() {
    let o = run(&[
        "catalog", "show", "bicyclic", "--chain", "l", "--depth", "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        v["elements"],
        serde_json::json!(["(0,0)", "(0,1)", "(0,2)", "(0,3)", "(0,4)"])
    );
    assert_eq!(v["strictly_descending"], true);
}

#[test]
fn catalog_sheets_audit_clean() {
    for name in greenstone::symbolic::CATALOG_NAMES {
        let o = run(&["catalog", "show", name]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
    }
}

#[test]
fn construct_outputs_revalidate() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let (one, a, t2) = (
        write(d, "one.json", TRIVIAL),
        write(d, "a.json", TRIVIAL_BIACT),
        write(d, "t2.json", T2),
    );
    let p = |x: &PathBuf| x.to_str().unwrap().to_string();
    let out = d.join("u.json");
    let cases: Vec<(Vec<String>, usize)> = vec![
        (
            vec![
                "usta".into(),
                "--s".into(),
                p(&one),
                "--t".into(),
                p(&one),
                "--a".into(),
                p(&a),
            ],
            4,
        ),
        (
            vec!["usa".into(), "--s".into(), p(&one), "--a".into(), p(&a)],
            3,
        ),
        (
            vec![
                "rees".into(),
                "--semigroup".into(),
                p(&t2),
                "--ideal".into(),
                "00,11".into(),
            ],
            3,
        ),
        (
            vec!["zdu".into(), "--s".into(), p(&one), "--t".into(), p(&one)],
            3,
        ),
        (
            vec![
                "product".into(),
                "--s".into(),
                p(&t2),
                "--t".into(),
                p(&one),
            ],
            4,
        ),
    ];
    for (args, size) in cases {
        let mut full = vec!["construct".to_string()];
        full.extend(args.clone());
        full.extend(["--out".into(), p(&out)]);
        let o = bin().args(&full).output().unwrap();
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let text = fs::read_to_string(&out).unwrap();
        let doc = parse_document(&text).unwrap();
        let got = match &doc {
            Document::Semigroup(s) => s.order(),
            Document::Biact(b) => greenstone::Actions::size(b),
        };
        assert_eq!(got, size, "{args:?}");
        assert_eq!(doc.to_json(), text, "{args:?} does not round-trip");
    }
}

#[test]
fn enum_writes_one_file_per_semigroup() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "enum",
        "--order",
        "2",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 5);
    for f in files {
        let text = fs::read_to_string(f.unwrap().path()).unwrap();
        assert!(matches!(parse_document(&text).unwrap(), Document::Semigroup(s) if s.order() == 2));
    }
    assert_ne!(
        run(&["enum", "--order", "5", "--out", "x"]).status.code(),
        Some(0)
    );
}

#[test]
fn dot_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "t2.json", T2);
    for extra in [vec!["--dot"], vec!["--dot", "--poset", "j"]] {
        let mut args = vec!["eggbox", f.to_str().unwrap()];
        args.extend(extra);
        let (a, b) = (run(&args), run(&args));
        assert_eq!(a.stdout, b.stdout);
        assert!(stdout(&a).starts_with("digraph"));
    }
}

#[test]
fn verify_subset_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let o = run(&[
        "verify",
        "--suite",
        "R3.14(2),C4.19",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["passed"], 2);
    assert_eq!(v["claims"][0]["status"], "witness-verified");
}

#[test]
fn probe_reports_search_space() {
    let o = run(&["probe", "--depth", "4"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["box_points"], 15);
    assert_eq!(v["factored_points"], 15);
    assert_eq!(v["complements_covered"], "32767");
    assert_eq!(v["finite_vacuous"], true);
}
