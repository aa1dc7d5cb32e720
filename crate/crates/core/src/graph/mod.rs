//! Directed-graph substrate: representation, ingestion, SCCs, BFS trees and
//! diameter estimates.

mod bfs;
pub mod fixtures;
mod io;
mod scc;

pub use bfs::{bfs_tree, exact_diameter, longest_bfs_path_lb, BfsTree};
pub(crate) use bfs::farthest_bfs_path;
pub use io::{parse_graph, write_snap, GraphFormat};
pub use scc::{compute_sccs, sccs_without, SccLabeling};

use crate::error::{Error, Result};

/// Dense vertex index in `0..n`.
pub type Vertex = usize;

pub(crate) const NONE: u32 = u32::MAX;

/// Immutable directed graph with forward and backward adjacency in CSR form.
///
/// Adjacency order is the order edges were supplied in, and both directions
/// preserve it: the in-list of `v` lists tails in the order their edges were
/// given. Edge-access counts depend on this order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out_offsets: Vec<usize>,
    out_targets: Vec<u32>,
    in_offsets: Vec<usize>,
    in_sources: Vec<u32>,
    original_ids: Option<Vec<u64>>,
}

impl Digraph {
    /// Builds a graph on `n` vertices. Panics if an endpoint is `>= n`.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        Self::build(n, edges.iter().copied())
    }

    pub(crate) fn build(n: usize, edges: impl Iterator<Item = (Vertex, Vertex)> + Clone) -> Self {
        assert!(n < NONE as usize, "graph too large");
        let mut out_deg = vec![0usize; n + 1];
        let mut in_deg = vec![0usize; n + 1];
        let mut m = 0;
        for (u, v) in edges.clone() {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            out_deg[u + 1] += 1;
            in_deg[v + 1] += 1;
            m += 1;
        }
        for i in 0..n {
            out_deg[i + 1] += out_deg[i];
            in_deg[i + 1] += in_deg[i];
        }
        let mut out_targets = vec![0u32; m];
        let mut in_sources = vec![0u32; m];
        let mut out_fill = out_deg.clone();
        let mut in_fill = in_deg.clone();
        for (u, v) in edges {
            out_targets[out_fill[u]] = v as u32;
            out_fill[u] += 1;
            in_sources[in_fill[v]] = u as u32;
            in_fill[v] += 1;
        }
        Digraph {
            out_offsets: out_deg,
            out_targets,
            in_offsets: in_deg,
            in_sources,
            original_ids: None,
        }
    }

    pub fn with_original_ids(mut self, ids: Vec<u64>) -> Self {
        assert_eq!(ids.len(), self.vertex_count());
        self.original_ids = Some(ids);
        self
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.out_offsets.len() - 1
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.out_targets.len()
    }

    #[inline]
    pub fn out_neighbors(&self, v: Vertex) -> &[u32] {
        &self.out_targets[self.out_offsets[v]..self.out_offsets[v + 1]]
    }

    #[inline]
    pub fn in_neighbors(&self, v: Vertex) -> &[u32] {
        &self.in_sources[self.in_offsets[v]..self.in_offsets[v + 1]]
    }

    pub fn original_ids(&self) -> Option<&[u64]> {
        self.original_ids.as_deref()
    }

    /// Source-file label of `v`, or `v` itself when the graph was built
    /// synthetically.
    pub fn label(&self, v: Vertex) -> u64 {
        self.original_ids.as_ref().map_or(v as u64, |ids| ids[v])
    }

    /// Edges in source order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + Clone + '_ {
        (0..self.vertex_count())
            .flat_map(move |u| self.out_neighbors(u).iter().map(move |&v| (u, v as usize)))
    }

    /// `G^R`: out- and in-adjacency swapped, order preserved.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            out_offsets: self.in_offsets.clone(),
            out_targets: self.in_sources.clone(),
            in_offsets: self.out_offsets.clone(),
            in_sources: self.out_targets.clone(),
            original_ids: self.original_ids.clone(),
        }
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.vertex_count(),
            })
        }
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.vertex_count() > 0 && compute_sccs(self).component_count() == 1
    }

    /// Induced subgraph on `vertices`, relabelled in ascending order of the
    /// parent indices. Adjacency order is the parent's order, filtered.
    pub fn induced(&self, vertices: &[Vertex]) -> Subgraph {
        let mut to_parent: Vec<Vertex> = vertices.to_vec();
        to_parent.sort_unstable();
        to_parent.dedup();
        let mut local = vec![NONE; self.vertex_count()];
        for (i, &v) in to_parent.iter().enumerate() {
            local[v] = i as u32;
        }
        let edges: Vec<(Vertex, Vertex)> = to_parent
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| {
                let local = &local;
                self.out_neighbors(u).iter().filter_map(move |&w| {
                    let lw = local[w as usize];
                    (lw != NONE).then_some((i, lw as usize))
                })
            })
            .collect();
        // Keep in-list order consistent with the parent's in-list order.
        let mut graph = Digraph::from_edges(to_parent.len(), &edges);
        let mut in_sources = Vec::with_capacity(graph.edge_count());
        for &v in &to_parent {
            in_sources.extend(self.in_neighbors(v).iter().filter_map(|&u| {
                let lu = local[u as usize];
                (lu != NONE).then_some(lu)
            }));
        }
        graph.in_sources = in_sources;
        if let Some(ids) = &self.original_ids {
            graph.original_ids = Some(to_parent.iter().map(|&v| ids[v]).collect());
        }
        Subgraph { graph, to_parent }
    }

    /// Subdivides every edge `(x, y)` into `(x, e), (e, y)` with a fresh
    /// midpoint vertex `e = n + edge index`, so that an edge failure becomes
    /// a vertex failure. Original vertices keep their indices.
    pub fn split_edges(&self) -> Digraph {
        let n = self.vertex_count();
        let edges: Vec<(Vertex, Vertex)> = self
            .edges()
            .enumerate()
            .flat_map(|(i, (u, v))| [(u, n + i), (n + i, v)])
            .collect();
        Digraph::from_edges(n + self.edge_count(), &edges)
    }

    /// Induced subgraph of the `rank`-th largest SCC (by vertex count, ties
    /// broken by smallest component id), re-densified.
    pub fn extract_scc_by_rank(&self, rank: usize) -> Result<Digraph> {
        let labels = compute_sccs(self);
        let count = labels.component_count();
        if rank == 0 || rank > count {
            return Err(Error::RankOutOfRange { rank, count });
        }
        let mut order: Vec<usize> = (0..count).collect();
        order.sort_by(|&a, &b| {
            labels.component_sizes()[b]
                .cmp(&labels.component_sizes()[a])
                .then(a.cmp(&b))
        });
        let target = order[rank - 1];
        let members: Vec<Vertex> = (0..self.vertex_count())
            .filter(|&v| labels.component_of(v) == Some(target))
            .collect();
        Ok(self.induced(&members).graph)
    }
}

/// An induced subgraph together with its map back to parent indices.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Digraph,
    pub to_parent: Vec<Vertex>,
}

/// Read-only adjacency access used by every search engine. Entries whose
/// endpoint is outside the view are skipped and never counted as accessed.
pub trait GraphView {
    /// Upper bound (exclusive) on vertex indices.
    fn vertex_bound(&self) -> usize;
    fn contains(&self, v: Vertex) -> bool;
    fn successors(&self, v: Vertex) -> &[u32];
    fn predecessors(&self, v: Vertex) -> &[u32];
}

impl GraphView for Digraph {
    #[inline]
    fn vertex_bound(&self) -> usize {
        self.vertex_count()
    }
    #[inline]
    fn contains(&self, _v: Vertex) -> bool {
        true
    }
    #[inline]
    fn successors(&self, v: Vertex) -> &[u32] {
        self.out_neighbors(v)
    }
    #[inline]
    fn predecessors(&self, v: Vertex) -> &[u32] {
        self.in_neighbors(v)
    }
}

impl<V: GraphView + ?Sized> GraphView for &V {
    #[inline]
    fn vertex_bound(&self) -> usize {
        (**self).vertex_bound()
    }
    #[inline]
    fn contains(&self, v: Vertex) -> bool {
        (**self).contains(v)
    }
    #[inline]
    fn successors(&self, v: Vertex) -> &[u32] {
        (**self).successors(v)
    }
    #[inline]
    fn predecessors(&self, v: Vertex) -> &[u32] {
        (**self).predecessors(v)
    }
}

/// `G[S]` without materialising it: membership is decided by a predicate.
#[derive(Clone, Copy)]
pub struct Restricted<'g, F> {
    graph: &'g Digraph,
    member: F,
}

impl<'g, F: Fn(Vertex) -> bool> Restricted<'g, F> {
    pub fn new(graph: &'g Digraph, member: F) -> Self {
        Restricted { graph, member }
    }
}

impl<F: Fn(Vertex) -> bool> GraphView for Restricted<'_, F> {
    #[inline]
    fn vertex_bound(&self) -> usize {
        self.graph.vertex_count()
    }
    #[inline]
    fn contains(&self, v: Vertex) -> bool {
        (self.member)(v)
    }
    #[inline]
    fn successors(&self, v: Vertex) -> &[u32] {
        self.graph.out_neighbors(v)
    }
    #[inline]
    fn predecessors(&self, v: Vertex) -> &[u32] {
        self.graph.in_neighbors(v)
    }
}

/// `G^R` of another view.
#[derive(Clone, Copy)]
pub struct Reversed<V>(pub V);

impl<V: GraphView> GraphView for Reversed<V> {
    #[inline]
    fn vertex_bound(&self) -> usize {
        self.0.vertex_bound()
    }
    #[inline]
    fn contains(&self, v: Vertex) -> bool {
        self.0.contains(v)
    }
    #[inline]
    fn successors(&self, v: Vertex) -> &[u32] {
        self.0.predecessors(v)
    }
    #[inline]
    fn predecessors(&self, v: Vertex) -> &[u32] {
        self.0.successors(v)
    }
}
