use std::collections::VecDeque;

use super::{compute_sccs, Digraph, GraphView, Reversed, Vertex, NONE};
use crate::error::{Error, Result};

/// BFS tree with preorder numbering and descendant counts, so that ancestry
/// is an O(1) interval test.
#[derive(Clone, Debug)]
pub struct BfsTree {
    root: Vertex,
    parent: Vec<u32>,
    level: Vec<u32>,
    preorder: Vec<u32>,
    descendants: Vec<u32>,
    reached: usize,
}

impl BfsTree {
    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        let p = self.parent[v];
        (p != NONE).then_some(p as usize)
    }

    pub fn level(&self, v: Vertex) -> Option<usize> {
        let l = self.level[v];
        (l != NONE).then_some(l as usize)
    }

    pub fn preorder(&self, v: Vertex) -> Option<usize> {
        let p = self.preorder[v];
        (p != NONE).then_some(p as usize)
    }

    pub fn descendant_count(&self, v: Vertex) -> Option<usize> {
        let d = self.descendants[v];
        (d != NONE).then_some(d as usize)
    }

    #[inline]
    pub fn reaches(&self, v: Vertex) -> bool {
        self.level.get(v).is_some_and(|&l| l != NONE)
    }

    pub fn reached_count(&self) -> usize {
        self.reached
    }

    pub fn max_level(&self) -> usize {
        self.level.iter().filter(|&&l| l != NONE).max().copied().unwrap_or(0) as usize
    }

    /// `u` is an ancestor of `v` (reflexive). False if either is unreached
    /// or out of range.
    #[inline]
    pub fn is_ancestor(&self, u: Vertex, v: Vertex) -> bool {
        let (Some(&pu), Some(&pv)) = (self.preorder.get(u), self.preorder.get(v)) else {
            return false;
        };
        pu != NONE && pv != NONE && pu <= pv && pv < pu + self.descendants[u]
    }

    /// Tree path from the root to `v`, or empty if `v` is unreached.
    pub fn path_to(&self, v: Vertex) -> Vec<Vertex> {
        if !self.reaches(v) {
            return Vec::new();
        }
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent(cur) {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }
}

/// BFS from `root` over `g` avoiding `blocked`. Preorder and descendant
/// counts come from a depth-first walk of the finished tree, children in
/// discovery order.
pub fn bfs_tree<V: GraphView>(g: &V, root: Vertex, blocked: &[Vertex]) -> BfsTree {
    let n = g.vertex_bound();
    assert!(!blocked.contains(&root), "BFS root is blocked");
    let mut parent = vec![NONE; n];
    let mut level = vec![NONE; n];
    for &b in blocked {
        // sentinel so blocked vertices are never discovered
        level[b] = NONE - 1;
    }
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    level[root] = 0;
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in g.successors(u) {
            let w = w as usize;
            if level[w] == NONE && g.contains(w) {
                level[w] = level[u] + 1;
                parent[w] = u as u32;
                queue.push_back(w);
            }
        }
    }
    for &b in blocked {
        level[b] = NONE;
    }

    // children lists in discovery order
    let mut child_start = vec![0u32; n + 1];
    for &v in &order[1..] {
        child_start[parent[v] as usize + 1] += 1;
    }
    for i in 0..n {
        child_start[i + 1] += child_start[i];
    }
    let mut fill = child_start.clone();
    let mut children = vec![0u32; order.len().saturating_sub(1)];
    for &v in &order[1..] {
        let p = parent[v] as usize;
        children[fill[p] as usize] = v as u32;
        fill[p] += 1;
    }

    let mut preorder = vec![NONE; n];
    let mut descendants = vec![NONE; n];
    let mut next = 0u32;
    let mut stack: Vec<(u32, u32)> = vec![(root as u32, child_start[root])];
    preorder[root] = next;
    next += 1;
    while let Some(&mut (v, ref mut pos)) = stack.last_mut() {
        let v = v as usize;
        if *pos < child_start[v + 1] {
            let c = children[*pos as usize];
            *pos += 1;
            preorder[c as usize] = next;
            next += 1;
            stack.push((c, child_start[c as usize]));
        } else {
            descendants[v] = next - preorder[v];
            stack.pop();
        }
    }

    BfsTree {
        root,
        parent,
        level,
        preorder,
        descendants,
        reached: order.len(),
    }
}

/// Longest shortest-path distance from `start` in either `g` or `g^R`.
/// Unreached vertices are ignored. Within a factor two of the diameter on
/// strongly connected graphs.
pub fn longest_bfs_path_lb(g: &Digraph, start: Vertex) -> usize {
    farthest_bfs_path(g, start).len().saturating_sub(1)
}

/// The BFS shortest path realising [`longest_bfs_path_lb`], in walking order.
/// Ties between directions favour the forward graph; within a direction the
/// vertex with the largest preorder at the maximum level is used.
pub(crate) fn farthest_bfs_path(g: &Digraph, start: Vertex) -> Vec<Vertex> {
    let fwd = bfs_tree(g, start, &[]);
    let bwd = bfs_tree(&Reversed(g), start, &[]);
    let far = |t: &BfsTree| {
        (0..g.vertex_count())
            .filter(|&v| t.reaches(v))
            .max_by_key(|&v| (t.level[v], t.preorder[v]))
            .unwrap_or(start)
    };
    let (f, b) = (far(&fwd), far(&bwd));
    if fwd.level[f] >= bwd.level[b] {
        fwd.path_to(f)
    } else {
        let mut p = bwd.path_to(b);
        p.reverse();
        p
    }
}

/// Maximum shortest-path length over all ordered pairs, by `n` BFS runs.
pub fn exact_diameter(g: &Digraph) -> Result<usize> {
    if compute_sccs(g).component_count() != 1 {
        return Err(Error::NotStronglyConnected);
    }
    let n = g.vertex_count();
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    let mut best = 0;
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            best = best.max(dist[u] as usize);
            for &w in g.out_neighbors(u) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[u] + 1;
                    queue.push_back(w as usize);
                }
            }
        }
    }
    Ok(best)
}
