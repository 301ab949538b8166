use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectra-forge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn unitary_z4_spectrum() {
    let o = run(&["spectrum", "--group", "cyclic:4", "--set", "1,3", "--kind", "diff"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("{[2]^1, [0]^2, [-2]^1}\n"));
}

#[test]
fn mirror_rows_for_z4() {
    let cases = [
        ("e", "{[3]^1, [1]^3, [-1]^3, [-3]^1}"),
        ("s", "{[4]^1, [0]^6, [-4]^1}"),
        ("se", "{[5]^1, [1]^2, [-1]^4, [-3]^1}"),
    ];
    for (t, want) in cases {
        for kind in ["diff", "sum"] {
            let o = run(&["spectrum", "--ring", "zpk:2^2", "--set", "units", "--mirror", t, "--kind", kind]);
            assert_eq!(o.status.code(), Some(0));
            assert!(stdout(&o).starts_with(want), "{t} {kind}: {}", stdout(&o));
        }
    }
}

#[test]
fn built_graph_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let p = path.to_str().unwrap();
    let o = run(&["build", "--group", "cyclic:16", "--set", "1,2,4,5,9,10,12,13", "--kind", "sum", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    let from_file = run(&["spectrum", "--graph", p]);
    let direct = run(&["spectrum", "--group", "cyclic:16", "--set", "1,2,4,5,9,10,12,13", "--kind", "sum"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(stdout(&from_file), stdout(&direct));
}

#[test]
fn compare_separates_the_two_kinds() {
    let o = run(&["compare", "--group", "cyclic:3", "--set", "1,2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["isospectral"], false);
}

#[test]
fn exit_statuses() {
    assert_eq!(run(&["spectrum", "--group", "cyclic:0", "--set", "1"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "--group", "cyclic:4", "--set", "9"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["pair", "--ring", "gf:3"]).status.code(), Some(3));
    assert_eq!(run(&["pair", "--ring", "zpk:2^2*gf:3"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn pair_reports_all_three_mirror_sets() {
    let o = run(&["pair", "--ring", "zpk:2^2*gf:3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let iso: Vec<bool> = v["pairs"].as_array().unwrap().iter().map(|p| p["isospectral"].as_bool().unwrap()).collect();
    assert_eq!(iso, [true, true, false]);
    assert_eq!(v["certification"]["outcome"], "fail");
}

#[test]
fn verify_is_deterministic_and_reports_summarize() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.jsonl");
    let p = path.to_str().unwrap();
    let first = run(&["verify", "--suite", "examples", "--seed", "3", "--out", p]);
    let second = run(&["verify", "--suite", "examples", "--seed", "3"]);
    assert_eq!(std::fs::read(&path).unwrap(), second.stdout);
    // the sum-kind mirror rows do not all hold
    assert_eq!(first.status.code(), Some(1));
    let o = run(&["report", "--input", p]);
    let text = stdout(&o);
    assert!(text.starts_with("claim"));
    assert!(text.contains("cor:spec-GRR*"));
    assert_eq!(o.status.code(), Some(1));
}
