use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_endograph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn single_error_line(o: &Output) {
    let err = String::from_utf8(o.stderr.clone()).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with("error: "), "{err}");
}

#[test]
fn auto_graph_of_z6_as_dot() {
    let o = run(&["build", "--group", "cyclic:6", "--kind", "auto", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    let edges: Vec<&str> = dot.lines().filter(|l| l.contains("--")).map(str::trim).collect();
    assert_eq!(edges, ["1 -- 5;", "2 -- 4;"]);
}

#[test]
fn trivial_group_graph() {
    let o = run(&["build", "--group", "cyclic:1", "--kind", "endo"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "graph {\n  0;\n}\n");
}

#[test]
fn endo_of_z6_as_json() {
    let o = run(&["build", "--group", "cyclic:6", "--kind", "endo", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["arcs"].as_array().unwrap().len(), 13);
    assert_eq!(v["directed"], false);
}

#[test]
fn identity_deleted_graph_keeps_element_names() {
    let o = run(&["build", "-g", "cyclic:3", "-k", "endo", "--delete-identity", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["labels"], serde_json::json!([1, 2]));
    assert_eq!(v["arcs"], serde_json::json!([[0, 1]]));
}

#[test]
fn coordinate_labels() {
    let o = run(&["build", "--group", "abelian:2^3x2", "--kind", "endo-directed", "--labels"]);
    let dot = stdout(&o);
    assert!(dot.contains("  9 [label=\"(4,1)\"];"), "{dot}");
}

#[test]
fn analyze_examples() {
    let o = run(&["analyze", "--group", "cyclic:5", "--kind", "endo"]);
    let t = stdout(&o);
    for line in ["complete: true", "planar: false", "girth: 3"] {
        assert!(t.contains(line), "{t}");
    }
    let o = run(&["analyze", "--group", "cyclic:2", "--kind", "endo", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["bipartite"].as_bool(), v["tree"].as_bool()), (Some(true), Some(true)));
    assert_eq!(v["girth"], "infinite");
    let o = run(&["analyze", "--group", "quaternion", "--kind", "endo-directed"]);
    assert!(stdout(&o).contains("single_point_basis: true"));
}

#[test]
fn verify_single_check_and_report_file() {
    let dir = std::env::temp_dir().join(format!("endograph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let o = run(&["verify", "--only", "edge-formula", "--max-n", "20", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    for key in ["id", "status", "witnesses", "fleet", "elapsed_ms"] {
        assert!(checks[0].get(key).is_some(), "missing {key}");
    }
    assert_eq!(checks[0]["witnesses"].as_array().unwrap().len(), 19);
    assert_eq!(v["verdict"], "pass");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn hunt_bounds() {
    let o = run(&["hunt", "--max-order", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("1 equal-order pairs compared"));
    let o = run(&["hunt", "--max-order", "16"]);
    assert_eq!(o.status.code(), Some(2));
    single_error_line(&o);
}

#[test]
fn exit_codes_and_diagnostics() {
    for args in [
        vec!["build", "--group", "cyclic:0"],
        vec!["build", "--group", "nonsense"],
        vec!["build", "--group", "catalog:8"],
        vec!["build", "--group", "cyclic:6", "--kind", "bogus"],
        vec!["analyze", "--group", "cyclic:6", "--format", "dot"],
        vec!["verify", "--only", "no-such-check"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        single_error_line(&o);
    }
    let o = run(&["build", "--group", "abelian:2x2x2x2x2", "--kind", "auto"]);
    assert_eq!(o.status.code(), Some(3));
    single_error_line(&o);
}

#[test]
fn output_is_deterministic() {
    let args = ["build", "--group", "catalog:12.5", "--kind", "endo-directed", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["verify", "--only", "auto-structure,identity-deleted-tree", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("endograph-list-{}.txt", std::process::id()));
    let o = run(&["list-groups", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 28);
    assert!(text.contains("catalog:8.5") && text.contains("Q8"));
    std::fs::remove_file(&path).unwrap();
}
