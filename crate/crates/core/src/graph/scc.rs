use super::{Digraph, Vertex, NONE};

/// SCC partition of a graph (or of a graph minus some removed vertices).
///
/// Component ids are assigned in reverse topological order of the
/// condensation: an edge from component `a` to component `b != a` implies
/// `a > b`. Removed vertices have no component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccLabeling {
    component_of: Vec<u32>,
    sizes: Vec<usize>,
    edge_counts: Vec<usize>,
}

impl SccLabeling {
    #[inline]
    pub fn component_of(&self, v: Vertex) -> Option<usize> {
        let c = self.component_of[v];
        (c != NONE).then_some(c as usize)
    }

    pub fn component_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn component_sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Internal edge count per component (the "size" of an SCC in the
    /// Δ-good sense).
    pub fn component_edge_counts(&self) -> &[usize] {
        &self.edge_counts
    }

    /// Vertex lists per component, each ascending.
    pub fn members(&self) -> Vec<Vec<Vertex>> {
        let mut out: Vec<Vec<Vertex>> = self.sizes.iter().map(|&s| Vec::with_capacity(s)).collect();
        for (v, &c) in self.component_of.iter().enumerate() {
            if c != NONE {
                out[c as usize].push(v);
            }
        }
        out
    }

    /// Number of strongly connected unordered pairs, `Σ |C|(|C|-1)/2`.
    pub fn connected_pairs(&self) -> u64 {
        self.sizes
            .iter()
            .map(|&s| (s as u64) * (s as u64).saturating_sub(1) / 2)
            .sum()
    }
}

pub fn compute_sccs(g: &Digraph) -> SccLabeling {
    tarjan(g, &[])
}

/// SCCs of `g - removed`.
pub fn sccs_without(g: &Digraph, removed: &[Vertex]) -> SccLabeling {
    tarjan(g, removed)
}

fn tarjan(g: &Digraph, removed: &[Vertex]) -> SccLabeling {
    let n = g.vertex_count();
    let mut component_of = vec![NONE; n];
    let mut blocked = vec![false; n];
    for &r in removed {
        blocked[r] = true;
    }
    let mut index = vec![NONE; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    // (vertex, next out-edge position)
    let mut call: Vec<(u32, u32)> = Vec::new();
    let mut next_index = 0u32;
    let mut sizes = Vec::new();

    for root in 0..n {
        if blocked[root] || index[root] != NONE {
            continue;
        }
        call.push((root as u32, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root as u32);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let v = v as usize;
            let adj = g.out_neighbors(v);
            if (*pos as usize) < adj.len() {
                let w = adj[*pos as usize] as usize;
                *pos += 1;
                if blocked[w] {
                    continue;
                }
                if index[w] == NONE {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w as u32);
                    on_stack[w] = true;
                    call.push((w as u32, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    let p = parent as usize;
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    let id = sizes.len() as u32;
                    let mut size = 0;
                    loop {
                        let w = stack.pop().expect("tarjan stack") as usize;
                        on_stack[w] = false;
                        component_of[w] = id;
                        size += 1;
                        if w == v {
                            break;
                        }
                    }
                    sizes.push(size);
                }
            }
        }
    }

    let mut edge_counts = vec![0usize; sizes.len()];
    for (u, &cu) in component_of.iter().enumerate() {
        if cu == NONE {
            continue;
        }
        for &w in g.out_neighbors(u) {
            if component_of[w as usize] == cu {
                edge_counts[cu as usize] += 1;
            }
        }
    }

    SccLabeling {
        component_of,
        sizes,
        edge_counts,
    }
}
