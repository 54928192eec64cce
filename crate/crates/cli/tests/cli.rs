use std::process::{Command, Output};

use serde_json::Value;

fn hermsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hermsym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = hermsym(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = format!("{}/../../schema/{name}", env!("CARGO_MANIFEST_DIR"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&v).expect("schema compiles")
}

fn assert_valid(schema_name: &str, text: &str) {
    let v: Value = serde_json::from_str(text).unwrap();
    let s = schema(schema_name);
    if let Err(errors) = s.validate(&v) {
        let msgs: Vec<String> = errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect();
        panic!("{schema_name}: {msgs:?}");
    };
}

#[test]
fn classify_json_matches_schema() {
    for fam in ["e6-3", "su(2,3)", "sp(4)", "so*(10)", "so(2,6)"] {
        let out = ok(&["classify", fam, "--format", "json"]);
        assert_valid("classify.schema.json", &out);
    }
    let out = ok(&[
        "classify",
        "sp(3)",
        "--format",
        "json",
        "--unbalanced",
        "--max-hodge",
        "3",
    ]);
    assert_valid("classify.schema.json", &out);
}

#[test]
fn codim_and_levi_json_match_schema() {
    assert_valid(
        "codim.schema.json",
        &ok(&["codim", "e7-7", "--all-sigma", "--format", "json"]),
    );
    assert_valid(
        "codim.schema.json",
        &ok(&[
            "codim",
            "su(3,4)",
            "--sigma",
            "psi_5,theta",
            "--format",
            "json",
        ]),
    );
    assert_valid(
        "levi.schema.json",
        &ok(&["levi", "e7-7", "--lambda", "w2-w7", "--format", "json"]),
    );
}

#[test]
fn schema_rejects_a_broken_record() {
    let out = ok(&["classify", "sp(3)", "--format", "json"]);
    let mut v: Value = serde_json::from_str(&out).unwrap();
    v["classes"][0]["r_plus"] = Value::String("two".into());
    assert!(!schema("classify.schema.json").is_valid(&v));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let a = ok(&["classify", "su(3,4)", "--format", "json"]);
    let b = ok(&["classify", "su(3,4)", "--format", "json"]);
    let c = Command::new(env!("CARGO_BIN_EXE_hermsym"))
        .args(["classify", "su(3,4)", "--format", "json"])
        .env("HERMSYM_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a, b);
    assert_eq!(a, stdout(&c));
}

#[test]
fn e7_markdown_has_six_rows() {
    let out = ok(&["classify", "e7-7", "--max-hodge", "11", "--format", "md"]);
    let rows: Vec<&str> = out
        .lines()
        .filter(|l| l.starts_with("| ϖ") || l.starts_with("| −"))
        .collect();
    assert_eq!(rows.len(), 6, "{out}");
    assert!(out.contains("| ϖ2−ϖ7 |"));
    assert!(out.contains("SO(12)/U(6) | 32 |"));
}

#[test]
fn su22_has_one_class_at_r1() {
    let out = ok(&[
        "classify",
        "su(2,2)",
        "--max-hodge",
        "2",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let r: Vec<u64> = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["r_plus"].as_u64().unwrap())
        .collect();
    assert_eq!(r, vec![1, 2, 2]);
}

#[test]
fn sp2_default_bound() {
    let out = ok(&["classify", "sp(2)", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["max_hodge"], 1);
    assert!(v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["r_plus"].as_u64().unwrap() <= 1));
}

#[test]
fn codim_commands() {
    assert!(ok(&["codim", "e6-1", "--sigma", "psi_3"]).contains("| psi_3 | 10 |"));
    let all = ok(&["codim", "e6-1", "--all-sigma"]);
    assert!(all.contains("least codimension in (0, 16): 6"), "{all}");
    assert!(ok(&["codim", "su(2,5)", "--sigma", "theta"]).contains("| theta | 10 |"));
    assert!(ok(&["codim", "so(2,8)", "--all-sigma"]).contains("c(X) = 1 via tau"));
}

#[test]
fn hasse_node_counts() {
    let count = |fam: &str| {
        let dot = ok(&["hasse", fam, "--dot"]);
        assert!(dot.starts_with("digraph"));
        let nodes = dot
            .lines()
            .filter(|l| l.contains("[label=") && !l.contains("->"))
            .count();
        let edges = dot.lines().filter(|l| l.contains("->")).count();
        (nodes, edges)
    };
    assert_eq!(count("e6-3").0, 16);
    assert_eq!(count("e7-7").0, 27);
    assert_eq!(count("su(1,2)"), (2, 1));
}

#[test]
fn dynkin_dot_is_emitted() {
    let dot = ok(&["dynkin", "e7-7", "--dot"]);
    assert!(dot.starts_with("graph") || dot.starts_with("digraph"));
}

#[test]
fn tables_verify_passes_on_shipped_fixtures() {
    let out = ok(&["tables", "--verify"]);
    assert_eq!(out.lines().count(), 6, "{out}");
}

#[test]
fn tables_emit_round_trips_through_a_directory() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    ok(&["tables", "--emit", "--fixtures", d]);
    ok(&["tables", "--verify", "--fixtures", d]);
    let t1 = dir.path().join("T1.txt");
    let text = std::fs::read_to_string(&t1)
        .unwrap()
        .replace("| e7-7 | 11 | 6 | 6", "| e7-7 | 11 | 6 | 7");
    std::fs::write(&t1, text).unwrap();
    let o = hermsym(&["tables", "--verify", "--fixtures", d, "--table", "T1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("sum N"));
}

#[test]
fn missing_or_malformed_fixture_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = hermsym(&["tables", "--verify", "--fixtures", d]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing fixture"));
    std::fs::write(
        dir.path().join("T2.txt"),
        "# T2: x\ntype | family | sigma | codim | c(X)\nAIII | su(3,7) | psi_10 | 3 | 3\n",
    )
    .unwrap();
    let o = hermsym(&["tables", "--verify", "--fixtures", d, "--table", "T2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_one() {
    for args in [
        vec!["classify", "su(0,3)"],
        vec!["classify"],
        vec!["codim", "e6-3", "--sigma", "psi_1"],
        vec!["codim", "e6-3"],
        vec!["levi", "sp(4)", "--lambda", "e2-e1"],
        vec!["frobnicate"],
    ] {
        assert_eq!(hermsym(&args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(hermsym(&["--help"]).status.code(), Some(0));
}
