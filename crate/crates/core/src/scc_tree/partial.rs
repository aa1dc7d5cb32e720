use serde::{Deserialize, Serialize};

use super::delta_good::{find_good_separation_pair, is_delta_good, is_three_connected, DeltaStrategy, DEFAULT_PAIR_BUDGET};
use super::hierarchy::{Hierarchy, HierarchyBuilder};
use crate::error::{Error, Result};
use crate::graph::{sccs_without, Digraph, Subgraph, Vertex, NONE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LeafKind {
    Small,
    ThreeConnected,
    DeltaGood,
}

/// Why an internal node was split. Good and Case-5 pairs split twice: the
/// first vertex at the node, the second in the child that contains it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitCase {
    GoodPairFirst,
    GoodPairSecond,
    Case5First,
    Case5Second,
}

#[derive(Clone, Debug)]
pub struct PartialLeaf {
    pub kind: LeafKind,
    pub sub: Subgraph,
}

/// Decomposition tree whose expansion stops at small, 3-connected or Δ-good
/// subgraphs.
#[derive(Clone, Debug)]
pub struct PartialSccTree {
    pub(crate) h: Hierarchy,
    pub(crate) leaves: Vec<Option<PartialLeaf>>,
    pub(crate) cases: Vec<Option<SplitCase>>,
    pub(crate) delta: usize,
    pub(crate) edge_count: usize,
    /// Position of each vertex inside its leaf's subgraph.
    pub(crate) leaf_index: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PartialNodeRecord {
    pub id: usize,
    pub split: Option<u64>,
    pub parent: Option<usize>,
    pub depth: usize,
    pub subtree_size: usize,
    pub case: Option<SplitCase>,
    pub leaf_kind: Option<LeafKind>,
    pub leaf_vertices: Option<usize>,
    pub leaf_edges: Option<usize>,
}

impl PartialSccTree {
    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn node_count(&self) -> usize {
        self.h.node_count()
    }

    pub fn height(&self) -> usize {
        self.h.height()
    }

    pub fn split_vertex(&self, node: usize) -> Option<Vertex> {
        self.h.split_of(node)
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        self.h.parent_of(node)
    }

    pub fn children(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.h.children[node].iter().map(|&c| c as usize)
    }

    pub fn depth(&self, node: usize) -> usize {
        self.h.depth[node] as usize
    }

    pub fn leaf(&self, node: usize) -> Option<&PartialLeaf> {
        self.leaves[node].as_ref()
    }

    pub fn case(&self, node: usize) -> Option<SplitCase> {
        self.cases[node]
    }

    pub fn leaf_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.node_count()).filter(|&i| self.leaves[i].is_some())
    }

    /// Largest number of Case-5 first splits on a root-to-leaf path.
    pub fn max_case5_on_path(&self) -> usize {
        self.leaf_nodes()
            .map(|leaf| {
                self.h
                    .path_to(leaf)
                    .iter()
                    .filter(|&&i| self.cases[i] == Some(SplitCase::Case5First))
                    .count()
            })
            .max()
            .unwrap_or(0)
    }

    /// At most `⌈m/Δ⌉` Case-5 expansions along every root-to-leaf path.
    pub fn case5_bound_holds(&self) -> bool {
        self.max_case5_on_path() <= self.edge_count.div_ceil(self.delta)
    }

    pub fn records(&self, g: &Digraph) -> Vec<PartialNodeRecord> {
        (0..self.node_count())
            .map(|i| PartialNodeRecord {
                id: i,
                split: self.split_vertex(i).map(|v| g.label(v)),
                parent: self.parent(i),
                depth: self.depth(i),
                subtree_size: self.h.size[i] as usize,
                case: self.cases[i],
                leaf_kind: self.leaves[i].as_ref().map(|l| l.kind),
                leaf_vertices: self.leaves[i].as_ref().map(|l| l.sub.graph.vertex_count()),
                leaf_edges: self.leaves[i].as_ref().map(|l| l.sub.graph.edge_count()),
            })
            .collect()
    }
}

/// Work item: vertex set (ascending), parent node, and a vertex that must be
/// split next together with the case that forces it.
struct Item {
    members: Vec<Vertex>,
    parent: Option<usize>,
    forced: Option<(Vertex, SplitCase)>,
}

/// Edge counts of the SCCs of `g - {a, b}` are each at most Δ or below
/// `m - Δ`.
fn case5_pair(g: &Digraph, delta: usize) -> Option<(Vertex, Vertex)> {
    let n = g.vertex_count();
    let m = g.edge_count();
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).find(|&(a, b)| {
        let labels = sccs_without(g, &[a, b]);
        labels.component_count() > 1
            && labels
                .component_edge_counts()
                .iter()
                .all(|&e| e <= delta || e + delta < m)
    })
}

pub fn build_partial_scc_tree(g: &Digraph, delta: usize) -> Result<PartialSccTree> {
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    if delta == 0 || delta > g.edge_count() {
        return Err(Error::DeltaOutOfRange {
            delta,
            edges: g.edge_count(),
        });
    }
    let n = g.vertex_count();
    let mut b = HierarchyBuilder::default();
    let mut home = vec![NONE; n];
    let mut leaves: Vec<Option<PartialLeaf>> = Vec::new();
    let mut cases: Vec<Option<SplitCase>> = Vec::new();
    let mut leaf_index = vec![NONE; n];
    let mut stack = vec![Item {
        members: (0..n).collect(),
        parent: None,
        forced: None,
    }];

    while let Some(item) = stack.pop() {
        let sub = g.induced(&item.members);
        let h = &sub.graph;
        // (split vertex, case, vertex forced in the child that holds it)
        let (t, case, second) = match item.forced {
            Some((v, case)) => (v, case, None),
            None => {
                let leaf_kind = if h.edge_count() <= delta {
                    Some(LeafKind::Small)
                } else if is_three_connected(h, DEFAULT_PAIR_BUDGET) {
                    Some(LeafKind::ThreeConnected)
                } else {
                    None
                };
                let pair = match leaf_kind {
                    Some(_) => None,
                    None => find_good_separation_pair(h, delta).map(|p| (p, SplitCase::GoodPairFirst)),
                };
                let leaf_kind = match (leaf_kind, pair) {
                    (None, None) if is_delta_good(h, delta, DeltaStrategy::Pruned)?.verdict => Some(LeafKind::DeltaGood),
                    (k, _) => k,
                };
                if let Some(kind) = leaf_kind {
                    let node = b.add(None, item.parent);
                    for (i, &v) in item.members.iter().enumerate() {
                        home[v] = node as u32;
                        leaf_index[v] = i as u32;
                    }
                    leaves.push(Some(PartialLeaf { kind, sub }));
                    cases.push(None);
                    continue;
                }
                let ((a, c), case) = pair.unwrap_or_else(|| {
                    let p = case5_pair(h, delta).expect("a graph that is not Δ-good has a Case-5 pair");
                    (p, SplitCase::Case5First)
                });
                let follow = if case == SplitCase::GoodPairFirst {
                    SplitCase::GoodPairSecond
                } else {
                    SplitCase::Case5Second
                };
                (item.members[a], case, Some((item.members[c], follow)))
            }
        };

        let node = b.add(Some(t), item.parent);
        home[t] = node as u32;
        leaves.push(None);
        cases.push(Some(case));
        let t_local = item.members.binary_search(&t).expect("split inside its set");
        let mut comps = sccs_without(h, &[t_local]).members();
        comps.reverse();
        for c in comps {
            let members: Vec<Vertex> = c.iter().map(|&v| item.members[v]).collect();
            let forced = second.filter(|(v, _)| members.binary_search(v).is_ok());
            stack.push(Item {
                members,
                parent: Some(node),
                forced,
            });
        }
    }
    Ok(PartialSccTree {
        h: b.finish(home),
        leaves,
        cases,
        delta,
        edge_count: g.edge_count(),
        leaf_index,
    })
}

/// `P(Δ)`: Δ-good, or the partial tree at Δ has height at most Δ.
pub fn delta_predicate(g: &Digraph, delta: usize) -> Result<bool> {
    Ok(is_delta_good(g, delta, DeltaStrategy::Pruned)?.verdict || build_partial_scc_tree(g, delta)?.height() <= delta)
}

/// Smallest Δ found by binary search over `[1, m]` on [`delta_predicate`],
/// treating the predicate as monotone. The result always satisfies it.
pub fn find_min_delta(g: &Digraph) -> Result<usize> {
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let m = g.edge_count().max(1);
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let (mut lo, mut hi) = (1, m);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if delta_predicate(g, mid)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    debug_assert!(delta_predicate(g, lo)?);
    Ok(lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use proptest::prelude::*;

    #[test]
    fn fixture_trees() {
        let t = build_partial_scc_tree(&fix_a(), 8).unwrap();
        assert_eq!(t.node_count(), 1);
        assert_eq!(t.leaf(0).unwrap().kind, LeafKind::Small);

        let t = build_partial_scc_tree(&fix_k4b(), 1).unwrap();
        assert_eq!(t.node_count(), 1);
        assert_eq!(t.leaf(0).unwrap().kind, LeafKind::ThreeConnected);

        let t = build_partial_scc_tree(&fix_p4b(), 1).unwrap();
        assert_eq!(t.split_vertex(0), Some(0));
        assert_eq!(t.case(0), Some(SplitCase::GoodPairFirst));
        let second: Vec<usize> = (0..t.node_count()).filter(|&i| t.case(i) == Some(SplitCase::GoodPairSecond)).collect();
        assert_eq!(second.len(), 1);
        assert_eq!(t.split_vertex(second[0]), Some(2));
        assert_eq!(t.depth(second[0]), 1);
        let leaves: Vec<_> = t.leaf_nodes().collect();
        assert_eq!(leaves.len(), 2);
        assert!(leaves.iter().all(|&l| t.leaf(l).unwrap().kind == LeafKind::Small));
        assert_eq!(t.height(), 2);
        assert!(t.case5_bound_holds());
    }

    #[test]
    fn min_delta() {
        assert_eq!(find_min_delta(&fix_k4b()).unwrap(), 1);
        let d = find_min_delta(&fix_p4b()).unwrap();
        assert!(d <= 4 && delta_predicate(&fix_p4b(), d).unwrap());
        // P(Δ) at each Δ for the bidirected path, fixed by hand
        let p: Vec<bool> = (1..=6).map(|d| delta_predicate(&fix_p4b(), d).unwrap()).collect();
        assert_eq!(p, vec![false, true, true, true, true, true]);
        assert_eq!(d, 2);
    }

    fn sc_graph(n: usize, raw: &[(usize, usize)]) -> Digraph {
        let mut e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        e.extend(raw.iter().map(|&(a, b)| (a % n, b % n)));
        Digraph::from_edges(n, &e)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn structure_invariants(n in 1usize..=14, raw in proptest::collection::vec((0usize..14, 0usize..14), 0..35), dsel in 0usize..3) {
            let g = sc_graph(n, &raw);
            let m = g.edge_count();
            let delta = [1, ((m as f64).sqrt() as usize).max(1), m][dsel];
            let t = build_partial_scc_tree(&g, delta).unwrap();
            prop_assert!(t.case5_bound_holds());
            // every vertex is a split vertex or in exactly one leaf
            let mut seen = vec![0; n];
            for i in 0..t.node_count() {
                if let Some(s) = t.split_vertex(i) { seen[s] += 1; }
                if let Some(l) = t.leaf(i) {
                    for &v in &l.sub.to_parent { seen[v] += 1; }
                    match l.kind {
                        LeafKind::Small => prop_assert!(l.sub.graph.edge_count() <= delta),
                        LeafKind::DeltaGood => prop_assert!(is_delta_good(&l.sub.graph, delta, DeltaStrategy::Naive).unwrap().verdict),
                        LeafKind::ThreeConnected => prop_assert!(find_good_separation_pair(&l.sub.graph, l.sub.graph.edge_count()).is_none()),
                    }
                }
                // Case-5 children shrink below m_parent - Δ or are small
                if t.case(i) == Some(SplitCase::Case5First) {
                    let parent_edges = g.induced(&t.h.members(i)).graph.edge_count();
                    let mut below: Vec<usize> = t.children(i).collect();
                    let mut grand = Vec::new();
                    for &c in &below {
                        if t.case(c) == Some(SplitCase::Case5Second) {
                            grand.extend(t.children(c));
                        }
                    }
                    below.retain(|&c| t.case(c) != Some(SplitCase::Case5Second));
                    below.extend(grand);
                    for c in below {
                        let e = g.induced(&t.h.members(c)).graph.edge_count();
                        prop_assert!(e <= delta || e + delta < parent_edges);
                    }
                }
            }
            prop_assert!(seen.iter().all(|&c| c == 1));
        }
    }
}
