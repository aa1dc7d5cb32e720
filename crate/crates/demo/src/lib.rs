//! Browser bindings: every export takes an edge list as text and returns a
//! JSON string, either `{"ok": ...}` or `{"error": "..."}`.

use ftsc_core::bench::{generate, run_workload, Method, RunOptions, WorkloadSpec};
use ftsc_core::graph::{parse_graph, GraphFormat};
use ftsc_core::oracles::{ground_truth_2ftsc, TreeOracle};
use ftsc_core::scc_tree::build_scc_tree;
use ftsc_core::structure::{SplitSelector, SplitterKind};
use ftsc_core::{Digraph, FtQuery};
use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn load(edges: &str) -> Result<Digraph, String> {
    let g = parse_graph(edges.as_bytes(), GraphFormat::Snap).map_err(|e| e.to_string())?;
    g.extract_scc_by_rank(1).map_err(|e| e.to_string())
}

/// Maps an id from the text back to its dense index.
fn index_of(g: &Digraph, id: u64) -> Result<usize, String> {
    (0..g.vertex_count())
        .find(|&v| g.label(v) == id)
        .ok_or_else(|| format!("vertex {id} is not in the largest SCC"))
}

fn wrap(r: Result<Value, String>) -> String {
    match r {
        Ok(v) => json!({ "ok": v }).to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

#[derive(Serialize)]
struct Node {
    split: u64,
    depth: usize,
    children: Vec<Node>,
}

pub fn decompose_value(edges: &str, splitter: &str) -> Result<Value, String> {
    let g = load(edges)?;
    let kind: SplitterKind = splitter.parse().map_err(|e: ftsc_core::Error| e.to_string())?;
    let tree = build_scc_tree(&g, &SplitSelector::new(kind)).map_err(|e| e.to_string())?;
    fn node(g: &Digraph, t: &ftsc_core::scc_tree::SccTree, id: usize) -> Node {
        Node {
            split: g.label(t.split_vertex(id)),
            depth: t.depth(id),
            children: t.children(id).map(|c| node(g, t, c)).collect(),
        }
    }
    Ok(json!({
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "height": tree.height(),
        "root": node(&g, &tree, tree.root()),
    }))
}

pub fn query_value(edges: &str, splitter: &str, x: u64, y: u64, f1: u64, f2: u64) -> Result<Value, String> {
    let g = load(edges)?;
    let kind: SplitterKind = splitter.parse().map_err(|e: ftsc_core::Error| e.to_string())?;
    let q = FtQuery::new(index_of(&g, x)?, index_of(&g, y)?, index_of(&g, f1)?, index_of(&g, f2)?);
    let tree = build_scc_tree(&g, &SplitSelector::new(kind)).map_err(|e| e.to_string())?;
    let out = TreeOracle::new(&g, tree).query(&q);
    Ok(json!({
        "answer": out.answer,
        "ground_truth": ground_truth_2ftsc(&g, &q),
        "depth": out.depth_reached,
        "ssr_calls": out.ssr_calls,
        "onefault_calls": out.onefault_calls,
    }))
}

pub fn workload_value(edges: &str, methods: &str, count: usize, rng_seed: u64) -> Result<Value, String> {
    let g = load(edges)?;
    let w = generate(&g, &WorkloadSpec::random(count, rng_seed)).map_err(|e| e.to_string())?;
    let opts = RunOptions {
        graph_name: "demo".into(),
        rng_seed,
        cross_check: true,
        ..Default::default()
    };
    let mut rows = Vec::new();
    for name in methods.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let m: Method = name.parse().map_err(|e: ftsc_core::Error| e.to_string())?;
        let r = run_workload(&g, m, &w, &opts).map_err(|e| e.to_string())?;
        rows.push(json!({
            "method": r.method,
            "true": r.answered_true,
            "false": r.answered_false,
            "seed_pct": r.pct_answered_by_seed(),
            "edges_per_query": r.mean_edges_per_query(),
            "mean_depth": r.mean_depth(),
        }));
    }
    Ok(Value::Array(rows))
}

/// SCC-tree of the largest SCC as nested nodes.
#[wasm_bindgen]
pub fn decompose(edges: &str, splitter: &str) -> String {
    wrap(decompose_value(edges, splitter))
}

/// One dual-fault query answered by the tree oracle, with ground truth.
#[wasm_bindgen]
pub fn query(edges: &str, splitter: &str, x: u64, y: u64, f1: u64, f2: u64) -> String {
    wrap(query_value(edges, splitter, x, y, f1, f2))
}

/// Random workload through comma-separated engines.
#[wasm_bindgen]
pub fn workload(edges: &str, methods: &str, count: usize, rng_seed: u64) -> String {
    wrap(workload_value(edges, methods, count, rng_seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIX_A: &str = "0 1\n1 2\n2 3\n3 4\n4 5\n5 3\n2 0\n5 0\n";

    fn parsed(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn decompose_fix_a() {
        let v = parsed(decompose(FIX_A, "lnt"));
        assert_eq!(v["ok"]["height"], 2);
        assert_eq!(v["ok"]["root"]["split"], 0);
        assert_eq!(v["ok"]["root"]["children"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn query_matches_truth() {
        let v = parsed(query(FIX_A, "mcn", 3, 5, 1, 2));
        assert_eq!(v["ok"]["answer"], true);
        assert_eq!(v["ok"]["ground_truth"], true);
        let v = parsed(query(FIX_A, "mcn", 4, 5, 3, 0));
        assert_eq!(v["ok"]["answer"], false);
    }

    #[test]
    fn workload_rows() {
        let v = parsed(workload(FIX_A, "bi-bfs, tree:mcn", 200, 1));
        let rows = v["ok"].as_array().unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0]["true"], rows[1]["true"]);
    }

    #[test]
    fn errors_are_json() {
        assert!(parsed(decompose("0 x\n", "mcn"))["error"].is_string());
        assert!(parsed(decompose(FIX_A, "nope"))["error"].is_string());
        assert!(parsed(query(FIX_A, "mcn", 9, 1, 2, 3))["error"].as_str().unwrap().contains("9"));
        assert!(parsed(workload(FIX_A, "astar", 5, 1))["error"].is_string());
    }
}
