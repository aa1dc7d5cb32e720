use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::hierarchy::{Hierarchy, HierarchyBuilder};
use crate::error::{Error, Result};
use crate::graph::{sccs_without, Digraph, Vertex, NONE};
use crate::structure::{
    label_propagation_select, loop_nesting_tree, mcn_select, pagerank_select, q_separator,
    LoopNestingTree, SplitSelector, SplitterKind,
};

/// SCC-tree: one node per vertex. The children of the node split by `t` are
/// the SCCs of `G[S_t] - t`.
#[derive(Clone, Debug)]
pub struct SccTree {
    pub(crate) h: Hierarchy,
}

/// One row of a serialised tree.
#[derive(Clone, Debug, Serialize)]
pub struct TreeNodeRecord {
    pub id: usize,
    pub split: Option<u64>,
    pub parent: Option<usize>,
    pub depth: usize,
    pub subtree_size: usize,
}

impl SccTree {
    pub fn vertex_count(&self) -> usize {
        self.h.home.len()
    }

    pub fn node_count(&self) -> usize {
        self.h.node_count()
    }

    pub fn root(&self) -> usize {
        (0..self.node_count()).find(|&i| self.h.parent[i] == NONE).unwrap_or(0)
    }

    /// Node `N(v)`.
    pub fn node_of(&self, v: Vertex) -> usize {
        self.h.home(v)
    }

    pub fn split_vertex(&self, node: usize) -> Vertex {
        self.h.split[node] as usize
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

    pub fn tree_preorder(&self, node: usize) -> usize {
        self.h.pre[node] as usize
    }

    pub fn subtree_size(&self, node: usize) -> usize {
        self.h.size[node] as usize
    }

    pub fn height(&self) -> usize {
        self.h.height()
    }

    /// `v ∈ S_t` for the node `t` splits.
    pub fn in_set(&self, node: usize, v: Vertex) -> bool {
        self.h.contains(node, v)
    }

    /// Vertex set `S_t` of a node, ascending.
    pub fn vertex_set(&self, node: usize) -> Vec<Vertex> {
        self.h.members(node)
    }

    /// Tree with node ids equal to vertex ids; `parent[v]` is the split
    /// vertex of the parent of `N(v)`.
    pub fn from_parents(parent: &[Option<Vertex>]) -> Result<SccTree> {
        let n = parent.len();
        let mut b = HierarchyBuilder::default();
        for v in 0..n {
            b.add(Some(v), None);
        }
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n {
                    return Err(Error::VertexOutOfRange { vertex: p, n });
                }
                b.set_parent(v, p);
            }
        }
        let roots = parent.iter().filter(|p| p.is_none()).count();
        let h = b.finish((0..n as u32).collect());
        // a cycle leaves nodes unnumbered by the preorder walk
        let numbered = h.size.iter().enumerate().filter(|&(i, _)| h.parent[i] == NONE).map(|(_, &s)| s as usize).sum::<usize>();
        if roots != 1 || numbered != n {
            return Err(Error::Format("parent array is not a rooted tree".into()));
        }
        Ok(SccTree { h })
    }

    pub fn from_loop_nesting(t: &LoopNestingTree) -> SccTree {
        let parent: Vec<Option<Vertex>> = (0..t.vertex_count()).map(|v| t.header(v)).collect();
        SccTree::from_parents(&parent).expect("loop nesting tree is a rooted tree")
    }

    pub fn records(&self, g: &Digraph) -> Vec<TreeNodeRecord> {
        (0..self.node_count())
            .map(|i| TreeNodeRecord {
                id: i,
                split: Some(g.label(self.split_vertex(i))),
                parent: self.parent(i),
                depth: self.depth(i),
                subtree_size: self.subtree_size(i),
            })
            .collect()
    }
}

/// Per-node split choice with state for separator consumption.
pub(crate) struct Splitter {
    selector: SplitSelector,
    rng: ChaCha8Rng,
}

impl Splitter {
    pub(crate) fn new(selector: SplitSelector) -> Self {
        Splitter {
            selector,
            rng: ChaCha8Rng::seed_from_u64(selector.rng_seed),
        }
    }

    /// Chooses a split vertex of `sub` (local indices). `pending` holds
    /// separator vertices still to be removed, also local.
    fn choose(&mut self, sub: &Digraph, pending: &mut Vec<Vertex>) -> Vertex {
        let n = sub.vertex_count();
        if n == 1 {
            return 0;
        }
        match self.selector.kind {
            SplitterKind::Random => self.rng.gen_range(0..n),
            SplitterKind::Mcn | SplitterKind::Lnt => mcn_select(sub),
            SplitterKind::LabelPropagation => label_propagation_select(sub, &self.selector),
            SplitterKind::PageRank => pagerank_select(sub, &self.selector),
            SplitterKind::QsepMcn => {
                if !pending.is_empty() {
                    return pending.remove(0);
                }
                match q_separator(sub).expect("tree nodes are strongly connected") {
                    Some(mut s) => {
                        let first = s.remove(0);
                        *pending = s;
                        first
                    }
                    None => mcn_select(sub),
                }
            }
        }
    }
}

pub fn build_scc_tree(g: &Digraph, selector: &SplitSelector) -> Result<SccTree> {
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    if selector.kind == SplitterKind::Lnt {
        return Ok(SccTree::from_loop_nesting(&loop_nesting_tree(g, 0)?));
    }
    let n = g.vertex_count();
    let mut splitter = Splitter::new(*selector);
    let mut b = HierarchyBuilder::default();
    let mut home = vec![NONE; n];
    // (members ascending, parent node, pending separator vertices)
    let mut stack: Vec<(Vec<Vertex>, Option<usize>, Vec<Vertex>)> = vec![((0..n).collect(), None, Vec::new())];
    while let Some((members, parent, pending)) = stack.pop() {
        let sub = g.induced(&members);
        let mut local_pending: Vec<Vertex> = pending
            .iter()
            .filter_map(|v| members.binary_search(v).ok())
            .collect();
        let t_local = splitter.choose(&sub.graph, &mut local_pending);
        let t = members[t_local];
        let node = b.add(Some(t), parent);
        home[t] = node as u32;
        let rest: Vec<Vertex> = local_pending.iter().map(|&v| members[v]).collect();
        let mut comps = sccs_without(&sub.graph, &[t_local]).members();
        // popped in SCC-id order
        comps.reverse();
        for c in comps {
            let globals: Vec<Vertex> = c.iter().map(|&v| members[v]).collect();
            stack.push((globals, Some(node), rest.clone()));
        }
    }
    Ok(SccTree { h: b.finish(home) })
}

/// Checks that `node_of` is a bijection and that every node's children are
/// exactly the SCCs of its set minus its split vertex.
pub fn validate_scc_tree(g: &Digraph, tree: &SccTree) -> bool {
    let n = g.vertex_count();
    if tree.vertex_count() != n || tree.node_count() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for v in 0..n {
        let node = tree.node_of(v);
        if node >= n || tree.h.split[node] as usize != v || seen[node] {
            return false;
        }
        seen[node] = true;
    }
    let root = tree.root();
    if tree.subtree_size(root) != n || !g.is_strongly_connected() {
        return false;
    }
    for node in 0..n {
        let members = tree.vertex_set(node);
        let sub = g.induced(&members);
        let t_local = members.binary_search(&tree.split_vertex(node)).expect("split in own set");
        let labels = sccs_without(&sub.graph, &[t_local]);
        let kids: Vec<usize> = tree.children(node).collect();
        if labels.component_count() != kids.len() {
            return false;
        }
        // every SCC lies inside one child and distinct SCCs use distinct children
        let mut child_of_comp = vec![usize::MAX; kids.len()];
        for (i, &v) in members.iter().enumerate() {
            let Some(c) = labels.component_of(i) else { continue };
            let Some(k) = kids.iter().position(|&k| tree.in_set(k, v)) else {
                return false;
            };
            if child_of_comp[c] == usize::MAX {
                child_of_comp[c] = k;
            } else if child_of_comp[c] != k {
                return false;
            }
        }
        let mut used = child_of_comp.clone();
        used.sort_unstable();
        used.dedup();
        if used.len() != kids.len() || used.contains(&usize::MAX) {
            return false;
        }
    }
    true
}

/// Common root path of `x` and `y` and their nearest common ancestor node.
pub fn tree_path_and_nca(tree: &SccTree, x: Vertex, y: Vertex) -> (Vec<usize>, usize) {
    let a = tree
        .h
        .nca(tree.node_of(x), tree.node_of(y))
        .expect("single-rooted tree");
    (tree.h.path_to(a), a)
}
