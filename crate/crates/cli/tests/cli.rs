use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn ftsc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ftsc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

// FIX-A plus a dangling tail 6 -> 7 outside the SCC, ids shifted by 100
fn write_graph(dir: &Path) -> String {
    let p = dir.join("fixa.txt");
    fs::write(
        &p,
        "# test graph\n100 101\n101 102\n102 103\n103 104\n104 105\n105 103\n102 100\n105 100\n105 106\n106 107\n",
    )
    .unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn stats_on_largest_scc() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path());
    let out = stdout(&ftsc(&["stats", &g, "--exact-diameter", "--nsp"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n"], 6);
    assert_eq!(v["m"], 8);
    assert_eq!(v["n_a"], 6);
    assert!(v["d"].is_number());
}

#[test]
fn extract_then_reload() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path());
    let out = dir.path().join("scc.txt");
    let msg = stdout(&ftsc(&["extract-scc", &g, out.to_str().unwrap()]));
    assert!(msg.contains("n=6 m=8"));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.contains("100\t101"));
    let again = stdout(&ftsc(&["stats", out.to_str().unwrap()]));
    assert!(again.contains("\"n\": 6"));
}

#[test]
fn trees_and_delta() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path());
    let rec = dir.path().join("tree.json");
    let out = stdout(&ftsc(&["build-tree", &g, "--splitter", "lnt", "--out", rec.to_str().unwrap()]));
    assert_eq!(out.trim(), "height=2");
    let rows: serde_json::Value = serde_json::from_str(&fs::read_to_string(&rec).unwrap()).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 6);
    let out = stdout(&ftsc(&["partial-tree", &g, "--delta", "8"]));
    assert!(out.starts_with("height=0 nodes=1 leaves=1"));
    let out = stdout(&ftsc(&["find-delta", &g]));
    assert!(out.starts_with("delta="));
}

#[test]
fn query_reports() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path());
    let report = dir.path().join("r.json");
    let csv = dir.path().join("r.csv");
    let out = stdout(&ftsc(&[
        "query", &g, "--method", "tree:mcn", "--method", "bi-bfs", "--workload", "random:500", "--rng-seed", "3",
        "--cross-check", "--report", report.to_str().unwrap(), "--csv", csv.to_str().unwrap(),
    ]));
    assert_eq!(out.lines().count(), 2);
    let docs: Vec<serde_json::Value> = serde_json::Deserializer::from_str(&fs::read_to_string(&report).unwrap())
        .into_iter()
        .collect::<Result<_, _>>()
        .unwrap();
    assert_eq!(docs.len(), 2);
    assert_eq!(docs[0]["report"]["query_count"], 500);
    let table = fs::read_to_string(&csv).unwrap();
    assert_eq!(table.lines().count(), 3);
    let bad = stdout(&ftsc(&[
        "query", &g, "--method", "chtree:2", "--workload", "bad:100", "--seed-count", "2", "--simulate", "--cross-check",
    ]));
    assert!(bad.contains("chtree:2"));
}

#[test]
fn errors_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path());
    let o = ftsc(&["query", &g, "--method", "astar", "--workload", "random:5"]);
    assert!(!o.status.success());
    let o = ftsc(&["stats", "/nonexistent/graph.txt"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("opening"));
    let o = ftsc(&["stats", &g, "--rank", "9"]);
    assert!(!o.status.success());
}
