use serde::{Deserialize, Serialize};

use super::aux::SsrTrees;
use super::tree_query::{descend, prelude, Stop};
use super::{FtQuery, QueryOutcome};
use crate::error::{Error, Result};
use crate::graph::{sccs_without, Digraph, Subgraph, Vertex, NONE};
use crate::heuristics::{ancestry_seed_build, bi_bfs_reach, seeded_query, AncestrySeed, EdgeAccessCounter};
use crate::scc_tree::hierarchy::{Hierarchy, HierarchyBuilder};

/// How internal nodes answer single-source reachability.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SsrMode {
    /// Exact oracles built per node.
    #[default]
    Exact,
    /// Bidirectional search inside the node, not counted as edge accesses.
    Simulated,
}

struct ChLeaf {
    sub: Subgraph,
    seed: AncestrySeed,
}

/// Decomposition tree split at a fixed seed list, with a seeded search
/// structure at each leaf.
pub struct ChTree<'g> {
    g: &'g Digraph,
    h: Hierarchy,
    ssr: Vec<Option<SsrTrees>>,
    leaves: Vec<Option<ChLeaf>>,
    leaf_index: Vec<u32>,
    mode: SsrMode,
}

/// Splits every node at the first seed (in list order) it contains; nodes
/// without one become leaves.
pub fn chtree_build<'g>(g: &'g Digraph, seeds: &[Vertex], mode: SsrMode) -> Result<ChTree<'g>> {
    let n = g.vertex_count();
    let mut rank = vec![usize::MAX; n];
    for (i, &s) in seeds.iter().enumerate() {
        g.check_vertex(s)?;
        if rank[s] != usize::MAX {
            return Err(Error::InvalidSeeds(format!("seed {s} listed twice")));
        }
        rank[s] = i;
    }
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let mut b = HierarchyBuilder::default();
    let mut home = vec![NONE; n];
    let mut leaf_index = vec![NONE; n];
    let mut leaves = Vec::new();
    let mut stack: Vec<(Vec<Vertex>, Option<usize>)> = vec![((0..n).collect(), None)];
    while let Some((members, parent)) = stack.pop() {
        let Some(t) = members.iter().copied().filter(|&v| rank[v] != usize::MAX).min_by_key(|&v| rank[v]) else {
            let node = b.add(None, parent);
            for (i, &v) in members.iter().enumerate() {
                home[v] = node as u32;
                leaf_index[v] = i as u32;
            }
            let sub = g.induced(&members);
            let seed = ancestry_seed_build(&sub.graph, 0);
            leaves.push(Some(ChLeaf { sub, seed }));
            continue;
        };
        let node = b.add(Some(t), parent);
        home[t] = node as u32;
        leaves.push(None);
        let sub = g.induced(&members);
        let local = members.binary_search(&t).expect("split inside its set");
        let mut comps = sccs_without(&sub.graph, &[local]).members();
        comps.reverse();
        for c in comps {
            stack.push((c.iter().map(|&v| members[v]).collect(), Some(node)));
        }
    }
    let h = b.finish(home);
    let ssr = (0..h.node_count())
        .map(|node| match (mode, h.split_of(node)) {
            (SsrMode::Exact, Some(t)) => Some(SsrTrees::build(&h.view(g, node), t)),
            _ => None,
        })
        .collect();
    Ok(ChTree {
        g,
        h,
        ssr,
        leaves,
        leaf_index,
        mode,
    })
}

impl ChTree<'_> {
    pub fn height(&self) -> usize {
        self.h.height()
    }

    pub fn node_count(&self) -> usize {
        self.h.node_count()
    }

    pub fn mode(&self) -> SsrMode {
        self.mode
    }

    /// Vertex sets of the leaves, in node order.
    pub fn leaf_sets(&self) -> Vec<Vec<Vertex>> {
        self.leaves
            .iter()
            .flatten()
            .map(|l| l.sub.to_parent.clone())
            .collect()
    }

    /// `answered_by_seed` is set when no leaf search ran.
    pub fn query(&self, q: &FtQuery) -> QueryOutcome {
        if let Some(out) = prelude(q, self.g.vertex_count()) {
            return QueryOutcome {
                answered_by_seed: true,
                ..out
            };
        }
        let fails = [q.f1, q.f2];
        let mut out = QueryOutcome::default();
        let (stop, node) = descend(&self.h, self.g, q, &mut out, |node, v, fwd| {
            let view = self.h.view(self.g, node);
            match &self.ssr[node] {
                Some(t) if fwd => t.from_source(&view, v, fails),
                Some(t) => t.to_source(&view, v, fails),
                None => {
                    let t = self.h.split_of(node).expect("split node");
                    let mut uncounted = EdgeAccessCounter::new();
                    if fwd {
                        bi_bfs_reach(&view, t, v, fails, &mut uncounted)
                    } else {
                        bi_bfs_reach(&view, v, t, fails, &mut uncounted)
                    }
                }
            }
        });
        match stop {
            Stop::Answer(a) => {
                out.answer = a;
                out.answered_by_seed = true;
            }
            Stop::Leaf => {
                let leaf = self.leaves[node].as_ref().expect("split-free nodes are leaves");
                let local = |v: Vertex| {
                    if self.h.home(v) == node {
                        self.leaf_index[v] as usize
                    } else {
                        usize::MAX
                    }
                };
                let lq = FtQuery::new(local(q.x), local(q.y), local(q.f1), local(q.f2));
                let mut counter = EdgeAccessCounter::new();
                let r = seeded_query(&leaf.sub.graph, std::slice::from_ref(&leaf.seed), &lq, &mut counter);
                out.answer = r.answer;
                out.edges_accessed = r.edges_accessed;
                out.answered_by_seed = r.answered_by_seed;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::oracles::ground_truth::exhaustive;
    use proptest::prelude::*;

    #[test]
    fn fix_a_shapes() {
        let g = fix_a();
        let t = chtree_build(&g, &[0], SsrMode::Exact).unwrap();
        let mut sets = t.leaf_sets();
        sets.sort();
        assert_eq!(sets, vec![vec![1], vec![2], vec![3, 4, 5]]);
        assert_eq!(t.height(), 1);
        let t = chtree_build(&g, &[0, 3], SsrMode::Exact).unwrap();
        let mut sets = t.leaf_sets();
        sets.sort();
        assert_eq!(sets, vec![vec![1], vec![2], vec![4], vec![5]]);
        let t = chtree_build(&g, &[], SsrMode::Exact).unwrap();
        assert_eq!(t.leaf_sets(), vec![(0..6).collect::<Vec<_>>()]);
    }

    #[test]
    fn fix_a_query_resolved_by_leaf_seed() {
        let g = fix_a();
        let t = chtree_build(&g, &[0], SsrMode::Exact).unwrap();
        let out = t.query(&FtQuery::new(3, 5, 1, 2));
        assert!(out.answer && out.answered_by_seed);
        assert_eq!(out.edges_accessed, 0);
        assert_eq!(out.depth_reached, Some(1));
    }

    #[test]
    fn bad_seed_lists() {
        let g = fix_a();
        assert!(matches!(chtree_build(&g, &[0, 0], SsrMode::Exact), Err(Error::InvalidSeeds(_))));
        assert!(matches!(chtree_build(&g, &[9], SsrMode::Exact), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn fixtures_match_ground_truth() {
        for g in [fix_a(), fix_c4(), fix_p4b(), fix_k4b(), fix_2t()] {
            for k in 0..=3 {
                for mode in [SsrMode::Exact, SsrMode::Simulated] {
                    let seeds: Vec<_> = (0..k.min(g.vertex_count())).collect();
                    let t = chtree_build(&g, &seeds, mode).unwrap();
                    exhaustive(&g, |q| t.query(q));
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]
        #[test]
        fn equivalence(n in 4usize..=8, raw in proptest::collection::vec((0usize..8, 0usize..8), 0..16), k in 0usize..4, rot in 0usize..8) {
            let g = sc_graph(n, &raw);
            let seeds: Vec<_> = (0..k).map(|i| (i + rot) % n).collect();
            let t = chtree_build(&g, &seeds, SsrMode::Exact).unwrap();
            prop_assert!(t.height() <= k);
            exhaustive(&g, |q| t.query(q));
        }
    }
}
