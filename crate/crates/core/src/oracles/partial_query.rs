use super::aux::ftsc_in;
use super::delta_query::decide;
use super::tree_query::{descend, prelude, NodeOracles, Stop};
use super::{FtQuery, QueryOutcome};
use crate::graph::{Digraph, Vertex};
use crate::heuristics::EdgeAccessCounter;
use crate::scc_tree::{LeafKind, PartialSccTree};

/// Query engine over a [`PartialSccTree`]. Internal nodes behave as in the
/// full tree; leaves answer locally.
pub struct PartialTreeOracle<'g> {
    g: &'g Digraph,
    tree: PartialSccTree,
    oracles: NodeOracles,
}

impl<'g> PartialTreeOracle<'g> {
    pub fn new(g: &'g Digraph, tree: PartialSccTree) -> Self {
        let oracles = NodeOracles::new(tree.node_count());
        PartialTreeOracle { g, tree, oracles }
    }

    pub fn eager(self) -> Self {
        self.oracles.build_all(&self.tree.h, self.g);
        self
    }

    pub fn tree(&self) -> &PartialSccTree {
        &self.tree
    }

    pub fn query(&self, q: &FtQuery) -> QueryOutcome {
        if let Some(out) = prelude(q, self.g.vertex_count()) {
            return out;
        }
        let h = &self.tree.h;
        let fails = [q.f1, q.f2];
        let mut out = QueryOutcome::default();
        let (stop, node) = descend(h, self.g, q, &mut out, |node, v, fwd| {
            self.oracles.reach(h, self.g, node, v, fwd, fails)
        });
        out.answer = match stop {
            Stop::Answer(a) => a,
            Stop::Leaf => self.leaf_query(node, q, &mut out),
        };
        out
    }

    fn leaf_query(&self, node: usize, q: &FtQuery, out: &mut QueryOutcome) -> bool {
        let leaf = self.tree.leaf(node).expect("split-free nodes are leaves");
        if leaf.kind == LeafKind::ThreeConnected {
            return true;
        }
        let local = |v: Vertex| {
            if self.tree.h.home(v) == node {
                self.tree.leaf_index[v] as usize
            } else {
                usize::MAX
            }
        };
        let (x, y, f1, f2) = (local(q.x), local(q.y), local(q.f1), local(q.f2));
        let sub = &leaf.sub.graph;
        match (f1 != usize::MAX, f2 != usize::MAX) {
            // a leaf is strongly connected
            (false, false) => true,
            (true, true) if f1 != f2 => {
                let mut counter = EdgeAccessCounter::new();
                let a = decide(sub, &FtQuery::new(x, y, f1, f2), self.tree.delta as u64 + 1, &mut counter);
                out.edges_accessed = counter.count();
                a
            }
            (a, _) => {
                out.onefault_calls += 1;
                ftsc_in(sub, x, y, if a { f1 } else { f2 })
            }
        }
    }
}
