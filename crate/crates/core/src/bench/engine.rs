use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::report::Report;
use super::workload::Workload;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Vertex};
use crate::heuristics::{
    ancestry_seed_build, bi_bfs_query, chbfs_query, sbfs_query, simple_bfs_query, AncestrySeed, EdgeAccessCounter,
};
use crate::oracles::{
    chtree_build, ground_truth_2ftsc, search_2ftssr, ChTree, FtQuery, PartialTreeOracle, QueryOutcome, SearchSsr,
    SsrMode, TreeOracle,
};
use crate::scc_tree::{build_partial_scc_tree, build_scc_tree};
use crate::structure::{SplitSelector, SplitterKind};

/// Engine descriptor, e.g. `sbfs:10`, `tree:mcn`, `partial-tree:40`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    SimpleBfs,
    BiBfs,
    Sbfs(usize),
    Chbfs(usize),
    Tree(SplitterKind),
    PartialTree(usize),
    ChTree(usize),
    GroundTruth,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownMethod(s.to_string());
        let (name, arg) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let count = || arg.and_then(|a| a.parse::<usize>().ok()).ok_or_else(unknown);
        Ok(match name {
            "simple-bfs" if arg.is_none() => Method::SimpleBfs,
            "bi-bfs" if arg.is_none() => Method::BiBfs,
            "ground-truth" if arg.is_none() => Method::GroundTruth,
            "sbfs" => Method::Sbfs(count()?),
            "chbfs" => Method::Chbfs(count()?),
            "chtree" => Method::ChTree(count()?),
            "partial-tree" => Method::PartialTree(count()?),
            "tree" => Method::Tree(arg.ok_or_else(unknown)?.parse()?),
            _ => return Err(unknown()),
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::SimpleBfs => write!(f, "simple-bfs"),
            Method::BiBfs => write!(f, "bi-bfs"),
            Method::Sbfs(k) => write!(f, "sbfs:{k}"),
            Method::Chbfs(k) => write!(f, "chbfs:{k}"),
            Method::Tree(s) => write!(f, "tree:{}", s.name()),
            Method::PartialTree(d) => write!(f, "partial-tree:{d}"),
            Method::ChTree(k) => write!(f, "chtree:{k}"),
            Method::GroundTruth => write!(f, "ground-truth"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub graph_name: String,
    /// Seeds random splitters and seed choice.
    pub rng_seed: u64,
    /// Re-answer every query with ground truth and stop on a mismatch.
    pub cross_check: bool,
    pub ssr_mode: SsrMode,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            graph_name: "graph".into(),
            rng_seed: 1,
            cross_check: false,
            ssr_mode: SsrMode::Exact,
        }
    }
}

/// A built engine, ready to answer queries.
pub enum Engine<'g> {
    SimpleBfs(&'g Digraph),
    BiBfs(&'g Digraph),
    Sbfs(&'g Digraph, Vec<AncestrySeed>),
    Chbfs(&'g Digraph, Vec<SearchSsr<&'g Digraph>>),
    Tree(TreeOracle<'g>),
    PartialTree(PartialTreeOracle<'g>),
    ChTree(ChTree<'g>),
    GroundTruth(&'g Digraph),
}

/// `k` distinct vertices: the workload's own seeds first, then random ones.
fn pick_seeds(g: &Digraph, k: usize, preferred: &[Vertex], rng_seed: u64) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut out: Vec<Vertex> = preferred.iter().copied().take(k).collect();
    if out.len() < k {
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        for v in rand::seq::index::sample(&mut rng, n, n.min(k + out.len())).into_iter() {
            if out.len() == k {
                break;
            }
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

impl<'g> Engine<'g> {
    pub fn build(g: &'g Digraph, method: Method, seeds: &[Vertex], opts: &RunOptions) -> Result<Self> {
        let pick = |k| pick_seeds(g, k, seeds, opts.rng_seed);
        Ok(match method {
            Method::SimpleBfs => Engine::SimpleBfs(g),
            Method::BiBfs => Engine::BiBfs(g),
            Method::GroundTruth => Engine::GroundTruth(g),
            Method::Sbfs(k) => Engine::Sbfs(g, pick(k).into_iter().map(|r| ancestry_seed_build(g, r)).collect()),
            Method::Chbfs(k) => Engine::Chbfs(g, pick(k).into_iter().map(|r| search_2ftssr(g, r)).collect()),
            Method::Tree(kind) => {
                let sel = SplitSelector::new(kind).with_seed(opts.rng_seed);
                Engine::Tree(TreeOracle::new(g, build_scc_tree(g, &sel)?))
            }
            Method::PartialTree(d) => Engine::PartialTree(PartialTreeOracle::new(g, build_partial_scc_tree(g, d)?)),
            Method::ChTree(k) => Engine::ChTree(chtree_build(g, &pick(k), opts.ssr_mode)?),
        })
    }

    pub fn query(&self, q: &FtQuery) -> QueryOutcome {
        let counted = |f: &dyn Fn(&mut EdgeAccessCounter) -> bool| {
            let mut c = EdgeAccessCounter::new();
            let answer = f(&mut c);
            QueryOutcome {
                answer,
                edges_accessed: c.count(),
                ..Default::default()
            }
        };
        match self {
            Engine::SimpleBfs(g) => counted(&|c| simple_bfs_query(*g, q, c)),
            Engine::BiBfs(g) => counted(&|c| bi_bfs_query(*g, q, c)),
            Engine::GroundTruth(g) => QueryOutcome::answer(ground_truth_2ftsc(g, q)),
            Engine::Sbfs(g, seeds) => sbfs_query(*g, seeds, q),
            Engine::Chbfs(g, seeds) => chbfs_query(*g, seeds, q),
            Engine::Tree(o) => o.query(q),
            Engine::PartialTree(o) => o.query(q),
            Engine::ChTree(t) => t.query(q),
        }
    }
}

/// Runs every query through `method`, aggregating outcomes.
pub fn run_workload(g: &Digraph, method: Method, workload: &Workload, opts: &RunOptions) -> Result<Report> {
    let engine = Engine::build(g, method, &workload.seeds, opts)?;
    let mut report = Report::new(opts.graph_name.clone(), method.to_string());
    let start = Instant::now();
    for (index, q) in workload.queries.iter().enumerate() {
        let out = engine.query(q);
        if opts.cross_check {
            let truth = ground_truth_2ftsc(g, q);
            if truth != out.answer {
                return Err(Error::CrossCheck {
                    index,
                    engine: out.answer,
                    truth,
                });
            }
        }
        report.record(&out);
    }
    report.wall_time_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::workload::{generate, WorkloadSpec};
    use crate::graph::fixtures::*;

    fn all_queries(n: usize) -> Workload {
        let mut queries = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for f1 in 0..n {
                    for f2 in 0..n {
                        queries.push(FtQuery::new(x, y, f1, f2));
                    }
                }
            }
        }
        Workload {
            queries,
            seeds: Vec::new(),
            sap: None,
        }
    }

    #[test]
    fn method_names_round_trip() {
        for s in [
            "simple-bfs", "bi-bfs", "sbfs:10", "chbfs:2", "tree:mcn", "tree:qsep-mcn", "partial-tree:40", "chtree:10",
            "ground-truth",
        ] {
            assert_eq!(s.parse::<Method>().unwrap().to_string(), s);
        }
        for bad in ["sbfs", "tree:nope", "bi-bfs:3", "astar"] {
            assert!(bad.parse::<Method>().is_err(), "{bad}");
        }
    }

    #[test]
    fn fix_a_exhaustive_reports() {
        let g = fix_a();
        let w = all_queries(6);
        let opts = RunOptions {
            cross_check: true,
            ..Default::default()
        };
        let truth = run_workload(&g, Method::GroundTruth, &w, &opts).unwrap();
        assert_eq!(truth.answered_true + truth.answered_false, 1296);
        for m in ["simple-bfs", "bi-bfs", "sbfs:2", "chbfs:2", "tree:mcn", "tree:lnt", "partial-tree:3", "chtree:2"] {
            let r = run_workload(&g, m.parse().unwrap(), &w, &opts).unwrap();
            assert_eq!(r.answered_true, truth.answered_true, "{m}");
        }
        let r = run_workload(&g, Method::Tree(SplitterKind::Mcn), &w, &opts).unwrap();
        assert_eq!(r.depth_histogram.values().sum::<u64>(), r.query_count);
    }

    #[test]
    fn reruns_are_identical() {
        let g = fix_2t();
        let w = generate(&g, &WorkloadSpec::random(500, 9)).unwrap();
        let opts = RunOptions::default();
        for m in ["sbfs:3", "tree:random", "chtree:3"] {
            let e1 = Engine::build(&g, m.parse().unwrap(), &w.seeds, &opts).unwrap();
            let e2 = Engine::build(&g, m.parse().unwrap(), &w.seeds, &opts).unwrap();
            for q in &w.queries {
                assert_eq!(e1.query(q), e2.query(q));
            }
        }
    }

    #[test]
    fn not_strongly_connected_is_an_error() {
        let g = Digraph::from_edges(3, &[(0, 1), (1, 2)]);
        let w = all_queries(3);
        assert!(matches!(
            run_workload(&g, Method::Tree(SplitterKind::Mcn), &w, &RunOptions::default()),
            Err(Error::NotStronglyConnected)
        ));
    }

    #[test]
    fn seed_picking() {
        let g = fix_a();
        assert_eq!(pick_seeds(&g, 2, &[4, 1, 3], 0), vec![4, 1]);
        let s = pick_seeds(&g, 4, &[5], 0);
        assert_eq!(s.len(), 4);
        assert_eq!(s[0], 5);
        assert_eq!(pick_seeds(&g, 10, &[], 0).len(), 6);
    }
}
