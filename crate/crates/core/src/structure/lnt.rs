use crate::error::{Error, Result};
use crate::graph::{Digraph, Vertex, NONE};

/// Loop nesting tree from one depth-first traversal: `header(v)` is the
/// innermost loop header whose loop contains `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopNestingTree {
    root: Vertex,
    header: Vec<u32>,
}

impl LoopNestingTree {
    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn header(&self, v: Vertex) -> Option<Vertex> {
        let h = self.header[v];
        (h != NONE).then_some(h as usize)
    }

    pub fn vertex_count(&self) -> usize {
        self.header.len()
    }

    pub fn height(&self) -> usize {
        let n = self.header.len();
        let mut depth = vec![NONE; n];
        depth[self.root] = 0;
        let mut best = 0;
        let mut path = Vec::new();
        for v in 0..n {
            let mut u = v;
            while depth[u] == NONE {
                path.push(u);
                u = self.header[u] as usize;
            }
            let mut d = depth[u];
            while let Some(w) = path.pop() {
                d += 1;
                depth[w] = d;
            }
            best = best.max(depth[v]);
        }
        best as usize
    }
}

fn find(uf: &mut [u32], v: usize) -> usize {
    let mut r = v;
    while uf[r] as usize != r {
        r = uf[r] as usize;
    }
    let mut cur = v;
    while uf[cur] as usize != r {
        let next = uf[cur] as usize;
        uf[cur] = r as u32;
        cur = next;
    }
    r
}

pub fn loop_nesting_tree(g: &Digraph, root: Vertex) -> Result<LoopNestingTree> {
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    g.check_vertex(root)?;
    let n = g.vertex_count();

    let mut pre = vec![NONE; n];
    let mut size = vec![0u32; n];
    let mut order = Vec::with_capacity(n);
    let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
    pre[root] = 0;
    order.push(root);
    while let Some(&mut (v, ref mut pos)) = stack.last_mut() {
        let adj = g.out_neighbors(v);
        if *pos < adj.len() {
            let w = adj[*pos] as usize;
            *pos += 1;
            if pre[w] == NONE {
                pre[w] = order.len() as u32;
                order.push(w);
                stack.push((w, 0));
            }
        } else {
            size[v] = order.len() as u32 - pre[v];
            stack.pop();
        }
    }
    let descendant = |u: usize, v: usize| pre[u] <= pre[v] && pre[v] < pre[u] + size[u];

    let mut header = vec![NONE; n];
    let mut uf: Vec<u32> = (0..n as u32).collect();
    // predecessors of each collapsed loop that lie outside it
    let mut outside: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut mark = vec![NONE; n];
    let mut work = Vec::new();

    for &u in order.iter().rev() {
        let mut ext = Vec::new();
        let mut visit = |y: usize, uf: &mut Vec<u32>, work: &mut Vec<usize>, ext: &mut Vec<u32>| {
            if y == u {
                return;
            }
            if !descendant(u, y) {
                ext.push(y as u32);
                return;
            }
            let r = find(uf, y);
            if r != u && mark[r] != u as u32 {
                mark[r] = u as u32;
                work.push(r);
            }
        };
        for &y in g.in_neighbors(u) {
            visit(y as usize, &mut uf, &mut work, &mut ext);
        }
        while let Some(x) = work.pop() {
            header[x] = u as u32;
            uf[x] = u as u32;
            for y in std::mem::take(&mut outside[x]) {
                visit(y as usize, &mut uf, &mut work, &mut ext);
            }
        }
        outside[u] = ext;
    }
    Ok(LoopNestingTree { root, header })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn fixtures() {
        let t = loop_nesting_tree(&fix_c4(), 0).unwrap();
        assert_eq!((1..4).map(|v| t.header(v)).collect::<Vec<_>>(), vec![Some(0); 3]);
        assert_eq!(t.height(), 1);
        let t = loop_nesting_tree(&fix_a(), 0).unwrap();
        let h: Vec<_> = (0..6).map(|v| t.header(v)).collect();
        assert_eq!(h, vec![None, Some(0), Some(0), Some(0), Some(3), Some(3)]);
        assert_eq!(t.height(), 2);
        assert!(loop_nesting_tree(&Digraph::from_edges(2, &[(0, 1)]), 0).is_err());
    }
}
