use crate::graph::{Digraph, GraphView, Vertex, NONE};

/// Rooted tree over vertex sets. Every graph vertex has a home node (the node
/// it splits, or the leaf holding it); the vertex set of a node is the set of
/// vertices whose home lies in its subtree, so membership is an interval test
/// on preorder numbers.
#[derive(Clone, Debug)]
pub(crate) struct Hierarchy {
    pub(crate) split: Vec<u32>,
    pub(crate) parent: Vec<u32>,
    pub(crate) children: Vec<Vec<u32>>,
    pub(crate) depth: Vec<u32>,
    pub(crate) pre: Vec<u32>,
    pub(crate) size: Vec<u32>,
    pub(crate) home: Vec<u32>,
}

/// Incremental construction; finish computes depths and preorder.
#[derive(Default)]
pub(crate) struct HierarchyBuilder {
    split: Vec<u32>,
    parent: Vec<u32>,
    children: Vec<Vec<u32>>,
}

impl HierarchyBuilder {
    pub(crate) fn add(&mut self, split: Option<Vertex>, parent: Option<usize>) -> usize {
        let id = self.split.len();
        self.split.push(split.map_or(NONE, |v| v as u32));
        self.parent.push(parent.map_or(NONE, |p| p as u32));
        self.children.push(Vec::new());
        if let Some(p) = parent {
            self.children[p].push(id as u32);
        }
        id
    }

    pub(crate) fn set_parent(&mut self, node: usize, parent: usize) {
        self.parent[node] = parent as u32;
        self.children[parent].push(node as u32);
    }

    /// `home[v]` must name a node for every vertex.
    pub(crate) fn finish(self, home: Vec<u32>) -> Hierarchy {
        let k = self.split.len();
        let mut depth = vec![0u32; k];
        let mut pre = vec![0u32; k];
        let mut size = vec![1u32; k];
        let mut next = 0u32;
        let roots: Vec<usize> = (0..k).filter(|&i| self.parent[i] == NONE).collect();
        for r in roots {
            let mut stack: Vec<(usize, usize)> = vec![(r, 0)];
            pre[r] = next;
            next += 1;
            while let Some(&mut (v, ref mut pos)) = stack.last_mut() {
                if *pos < self.children[v].len() {
                    let c = self.children[v][*pos] as usize;
                    *pos += 1;
                    depth[c] = depth[v] + 1;
                    pre[c] = next;
                    next += 1;
                    stack.push((c, 0));
                } else {
                    size[v] = next - pre[v];
                    stack.pop();
                }
            }
        }
        Hierarchy {
            split: self.split,
            parent: self.parent,
            children: self.children,
            depth,
            pre,
            size,
            home,
        }
    }
}

impl Hierarchy {
    pub(crate) fn node_count(&self) -> usize {
        self.split.len()
    }

    pub(crate) fn split_of(&self, node: usize) -> Option<Vertex> {
        let s = self.split[node];
        (s != NONE).then_some(s as usize)
    }

    pub(crate) fn parent_of(&self, node: usize) -> Option<usize> {
        let p = self.parent[node];
        (p != NONE).then_some(p as usize)
    }

    pub(crate) fn height(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0) as usize
    }

    #[inline]
    pub(crate) fn in_subtree(&self, node: usize, other: usize) -> bool {
        let (a, b) = (self.pre[node], self.pre[other]);
        a <= b && b < a + self.size[node]
    }

    #[inline]
    pub(crate) fn contains(&self, node: usize, v: Vertex) -> bool {
        v < self.home.len() && self.home[v] != NONE && self.in_subtree(node, self.home[v] as usize)
    }

    pub(crate) fn home(&self, v: Vertex) -> usize {
        self.home[v] as usize
    }

    pub(crate) fn nca(&self, mut a: usize, mut b: usize) -> Option<usize> {
        while self.depth[a] > self.depth[b] {
            a = self.parent[a] as usize;
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b] as usize;
        }
        while a != b {
            let (pa, pb) = (self.parent[a], self.parent[b]);
            if pa == NONE || pb == NONE {
                return None;
            }
            a = pa as usize;
            b = pb as usize;
        }
        Some(a)
    }

    /// Nodes from the root down to `node`.
    pub(crate) fn path_to(&self, node: usize) -> Vec<usize> {
        let mut path = vec![node];
        let mut cur = node;
        while let Some(p) = self.parent_of(cur) {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    /// Vertices of the node's set, ascending.
    pub(crate) fn members(&self, node: usize) -> Vec<Vertex> {
        (0..self.home.len()).filter(|&v| self.contains(node, v)).collect()
    }

    pub(crate) fn view<'a>(&'a self, g: &'a Digraph, node: usize) -> NodeView<'a> {
        NodeView { g, h: self, node }
    }
}

/// `G[S_node]` as a view over the full graph.
#[derive(Clone, Copy)]
pub(crate) struct NodeView<'a> {
    g: &'a Digraph,
    h: &'a Hierarchy,
    node: usize,
}

impl GraphView for NodeView<'_> {
    #[inline]
    fn vertex_bound(&self) -> usize {
        self.g.vertex_count()
    }
    #[inline]
    fn contains(&self, v: Vertex) -> bool {
        self.h.contains(self.node, v)
    }
    #[inline]
    fn successors(&self, v: Vertex) -> &[u32] {
        self.g.out_neighbors(v)
    }
    #[inline]
    fn predecessors(&self, v: Vertex) -> &[u32] {
        self.g.in_neighbors(v)
    }
}
