use std::sync::OnceLock;

use super::aux::{ftsc_in, SsrTrees};
use super::{FtQuery, QueryOutcome};
use crate::graph::{Digraph, Vertex};
use crate::scc_tree::hierarchy::Hierarchy;
use crate::scc_tree::SccTree;

pub(crate) enum Stop {
    Answer(bool),
    /// `nca(x, y)` is a leaf without a split vertex.
    Leaf,
}

/// Handles out-of-range vertices and the degenerate contract.
pub(crate) fn prelude(q: &FtQuery, n: usize) -> Option<QueryOutcome> {
    if [q.x, q.y, q.f1, q.f2].iter().any(|&v| v >= n) {
        return Some(QueryOutcome::answer(false));
    }
    q.degenerate_answer().map(|a| QueryOutcome {
        depth_reached: Some(0),
        ..QueryOutcome::answer(a)
    })
}

/// Walks `P_nca(x, y)` from the root. `reach(node, v, forward)` answers
/// "source of `node` reaches `v`" (forward) or "`v` reaches the source" in
/// `G_node - {f1, f2}`. Returns the stopping node alongside the result and
/// records its depth.
pub(crate) fn descend(
    h: &Hierarchy,
    g: &Digraph,
    q: &FtQuery,
    out: &mut QueryOutcome,
    mut reach: impl FnMut(usize, Vertex, bool) -> bool,
) -> (Stop, usize) {
    let nca = h.nca(h.home(q.x), h.home(q.y)).expect("single-rooted hierarchy");
    let path = h.path_to(nca);
    for (i, &node) in path.iter().enumerate() {
        out.depth_reached = Some(h.depth[node]);
        let Some(t) = h.split_of(node) else {
            return (Stop::Leaf, node);
        };
        if q.is_failed(t) {
            if node == nca {
                return (Stop::Answer(false), node);
            }
            let other = if t == q.f1 { q.f2 } else { q.f1 };
            out.onefault_calls += 1;
            let w = path[i + 1];
            return (Stop::Answer(ftsc_in(&h.view(g, w), q.x, q.y, other)), node);
        }
        let fx = reach(node, q.x, true);
        let fy = reach(node, q.y, true);
        out.ssr_calls += 2;
        if fx != fy {
            return (Stop::Answer(false), node);
        }
        let rx = reach(node, q.x, false);
        let ry = reach(node, q.y, false);
        out.ssr_calls += 2;
        if rx != ry {
            return (Stop::Answer(false), node);
        }
        if fx && rx {
            return (Stop::Answer(true), node);
        }
    }
    (Stop::Answer(false), nca)
}

/// Lazily built source trees, one per internal node.
pub(crate) struct NodeOracles {
    cells: Vec<OnceLock<SsrTrees>>,
}

impl NodeOracles {
    pub(crate) fn new(nodes: usize) -> Self {
        NodeOracles {
            cells: (0..nodes).map(|_| OnceLock::new()).collect(),
        }
    }

    pub(crate) fn get(&self, h: &Hierarchy, g: &Digraph, node: usize) -> &SsrTrees {
        self.cells[node].get_or_init(|| {
            let t = h.split_of(node).expect("oracles live at split nodes");
            SsrTrees::build(&h.view(g, node), t)
        })
    }

    pub(crate) fn reach(&self, h: &Hierarchy, g: &Digraph, node: usize, v: Vertex, forward: bool, fails: [Vertex; 2]) -> bool {
        let trees = self.get(h, g, node);
        let view = h.view(g, node);
        if forward {
            trees.from_source(&view, v, fails)
        } else {
            trees.to_source(&view, v, fails)
        }
    }

    pub(crate) fn build_all(&self, h: &Hierarchy, g: &Digraph) {
        for node in 0..self.cells.len() {
            if h.split_of(node).is_some() {
                self.get(h, g, node);
            }
        }
    }
}

/// Query engine over an [`SccTree`], with per-node single-source oracles
/// materialised on first use.
pub struct TreeOracle<'g> {
    g: &'g Digraph,
    tree: SccTree,
    oracles: NodeOracles,
}

impl<'g> TreeOracle<'g> {
    pub fn new(g: &'g Digraph, tree: SccTree) -> Self {
        let oracles = NodeOracles::new(tree.node_count());
        TreeOracle { g, tree, oracles }
    }

    /// Builds every node oracle up front.
    pub fn eager(self) -> Self {
        self.oracles.build_all(&self.tree.h, self.g);
        self
    }

    pub fn tree(&self) -> &SccTree {
        &self.tree
    }

    pub fn query(&self, q: &FtQuery) -> QueryOutcome {
        if let Some(out) = prelude(q, self.g.vertex_count()) {
            return out;
        }
        let h = &self.tree.h;
        let fails = [q.f1, q.f2];
        let mut out = QueryOutcome::default();
        let (stop, _) = descend(h, self.g, q, &mut out, |node, v, fwd| {
            self.oracles.reach(h, self.g, node, v, fwd, fails)
        });
        match stop {
            Stop::Answer(a) => out.answer = a,
            Stop::Leaf => unreachable!("every SCC-tree node has a split vertex"),
        }
        out
    }
}
