use crate::graph::{GraphView, Vertex, NONE};

/// Immediate dominators of every vertex reachable from `root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatorTree {
    root: Vertex,
    idom: Vec<u32>,
}

impl DominatorTree {
    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn idom(&self, v: Vertex) -> Option<Vertex> {
        let d = self.idom[v];
        (d != NONE).then_some(d as usize)
    }

    /// Vertices that immediately dominate some other vertex, root excluded.
    pub fn nontrivial_dominators(&self) -> Vec<Vertex> {
        let mut hit = vec![false; self.idom.len()];
        for &d in &self.idom {
            if d != NONE && d as usize != self.root {
                hit[d as usize] = true;
            }
        }
        (0..hit.len()).filter(|&v| hit[v]).collect()
    }
}

/// Semi-NCA dominator computation over a view.
pub fn dominator_tree<V: GraphView>(g: &V, root: Vertex) -> DominatorTree {
    let n = g.vertex_bound();
    // iterative DFS: preorder numbers, DFS parents (as preorder numbers)
    let mut pre = vec![NONE; n];
    let mut vertex: Vec<u32> = Vec::new();
    let mut parent: Vec<u32> = Vec::new();
    let mut stack: Vec<(u32, usize)> = vec![(root as u32, 0)];
    pre[root] = 0;
    vertex.push(root as u32);
    parent.push(NONE);
    while let Some(&mut (v, ref mut pos)) = stack.last_mut() {
        let adj = g.successors(v as usize);
        if *pos < adj.len() {
            let w = adj[*pos] as usize;
            *pos += 1;
            if pre[w] == NONE && g.contains(w) {
                pre[w] = vertex.len() as u32;
                vertex.push(w as u32);
                parent.push(pre[v as usize]);
                stack.push((w as u32, 0));
            }
        } else {
            stack.pop();
        }
    }

    let count = vertex.len();
    let mut semi: Vec<u32> = (0..count as u32).collect();
    let mut label: Vec<u32> = (0..count as u32).collect();
    let mut anc: Vec<u32> = vec![NONE; count];
    let mut path: Vec<u32> = Vec::new();

    for i in (1..count).rev() {
        for &v in g.predecessors(vertex[i] as usize) {
            let v = v as usize;
            if !g.contains(v) || pre[v] == NONE {
                continue;
            }
            let u = eval(pre[v], &mut anc, &mut label, &semi, &mut path);
            semi[i] = semi[i].min(semi[u as usize]);
        }
        anc[i] = parent[i];
    }

    let mut idom_pre: Vec<u32> = parent.clone();
    for i in 1..count {
        let mut d = idom_pre[i];
        while d > semi[i] {
            d = idom_pre[d as usize];
        }
        idom_pre[i] = d;
    }

    let mut idom = vec![NONE; n];
    for i in 1..count {
        idom[vertex[i] as usize] = vertex[idom_pre[i] as usize];
    }
    DominatorTree { root, idom }
}

/// Vertex of minimum semidominator on the compressed forest path above `v`.
fn eval(v: u32, anc: &mut [u32], label: &mut [u32], semi: &[u32], path: &mut Vec<u32>) -> u32 {
    if anc[v as usize] == NONE {
        return v;
    }
    path.clear();
    let mut u = v;
    while anc[anc[u as usize] as usize] != NONE {
        path.push(u);
        u = anc[u as usize];
    }
    while let Some(x) = path.pop() {
        let a = anc[x as usize] as usize;
        if semi[label[a] as usize] < semi[label[x as usize] as usize] {
            label[x as usize] = label[a];
        }
        anc[x as usize] = anc[a];
    }
    label[v as usize]
}
