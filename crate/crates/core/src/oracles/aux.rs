use crate::graph::{bfs_tree, BfsTree, GraphView, Reversed, Vertex};
use crate::heuristics::{simple_reach, EdgeAccessCounter};

/// Single-source reachability under two vertex failures.
pub trait TwoFtSsr {
    fn source(&self) -> Vertex;
    /// `v` is reachable from the source in `G - {f1, f2}`.
    fn reach_from_source(&self, v: Vertex, f1: Vertex, f2: Vertex) -> bool;
    /// The source is reachable from `v` in `G - {f1, f2}`.
    fn reach_to_source(&self, v: Vertex, f1: Vertex, f2: Vertex) -> bool;
}

/// Strong connectivity under one vertex failure.
pub trait OneFtSc {
    fn ftsc(&self, x: Vertex, y: Vertex, f: Vertex) -> bool;
}

/// Search-based trees for one source: BFS trees in both directions, used as
/// a fast path before falling back to a search that avoids the failures.
#[derive(Clone, Debug)]
pub(crate) struct SsrTrees {
    pub(crate) source: Vertex,
    forward: BfsTree,
    backward: BfsTree,
}

impl SsrTrees {
    pub(crate) fn build<V: GraphView>(g: &V, source: Vertex) -> Self {
        SsrTrees {
            source,
            forward: bfs_tree(g, source, &[]),
            backward: bfs_tree(&Reversed(g), source, &[]),
        }
    }

    pub(crate) fn from_source<V: GraphView>(&self, g: &V, v: Vertex, fails: [Vertex; 2]) -> bool {
        if fails.contains(&self.source) {
            return v == self.source && !fails.contains(&v);
        }
        if !self.forward.reaches(v) || fails.contains(&v) {
            return false;
        }
        if fails.iter().all(|&f| !self.forward.is_ancestor(f, v)) {
            return true;
        }
        simple_reach(g, self.source, v, fails, &mut EdgeAccessCounter::new())
    }

    pub(crate) fn to_source<V: GraphView>(&self, g: &V, v: Vertex, fails: [Vertex; 2]) -> bool {
        if fails.contains(&self.source) {
            return v == self.source && !fails.contains(&v);
        }
        if !self.backward.reaches(v) || fails.contains(&v) {
            return false;
        }
        if fails.iter().all(|&f| !self.backward.is_ancestor(f, v)) {
            return true;
        }
        simple_reach(&Reversed(g), self.source, v, fails, &mut EdgeAccessCounter::new())
    }
}

/// Exact 2-FT-SSR oracle bound to a graph view.
#[derive(Clone, Debug)]
pub struct SearchSsr<V> {
    view: V,
    trees: SsrTrees,
}

pub fn search_2ftssr<V: GraphView>(view: V, source: Vertex) -> SearchSsr<V> {
    let trees = SsrTrees::build(&view, source);
    SearchSsr { view, trees }
}

impl<V: GraphView> TwoFtSsr for SearchSsr<V> {
    fn source(&self) -> Vertex {
        self.trees.source
    }

    fn reach_from_source(&self, v: Vertex, f1: Vertex, f2: Vertex) -> bool {
        self.trees.from_source(&self.view, v, [f1, f2])
    }

    fn reach_to_source(&self, v: Vertex, f1: Vertex, f2: Vertex) -> bool {
        self.trees.to_source(&self.view, v, [f1, f2])
    }
}

/// Exact 1-FT-SC oracle: two searches in `G - f`.
#[derive(Clone, Debug)]
pub struct SearchFtsc<V> {
    view: V,
}

pub fn search_1ftsc<V: GraphView>(view: V) -> SearchFtsc<V> {
    SearchFtsc { view }
}

pub(crate) fn ftsc_in<V: GraphView>(g: &V, x: Vertex, y: Vertex, f: Vertex) -> bool {
    if x == f || y == f {
        return false;
    }
    let mut c = EdgeAccessCounter::new();
    simple_reach(g, x, y, [f, f], &mut c) && simple_reach(g, y, x, [f, f], &mut c)
}

impl<V: GraphView> OneFtSc for SearchFtsc<V> {
    fn ftsc(&self, x: Vertex, y: Vertex, f: Vertex) -> bool {
        ftsc_in(&self.view, x, y, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::Digraph;
    use proptest::prelude::*;

    #[test]
    fn ssr_examples() {
        let g = fix_a();
        let o = search_2ftssr(&g, 0);
        assert!(!o.reach_from_source(3, 1, 4));
        assert!(o.reach_from_source(1, 3, 4));
        for v in 1..6 {
            assert!(!o.reach_from_source(v, 0, 2));
            assert!(!o.reach_to_source(v, 2, 0));
        }
        assert!(o.reach_to_source(3, 1, 2));
    }

    #[test]
    fn ftsc_examples() {
        let g = fix_a();
        let o = search_1ftsc(&g);
        assert!(o.ftsc(3, 5, 0));
        assert!(!o.ftsc(0, 3, 2));
        assert!(o.ftsc(4, 4, 1));
    }

    fn reach_naive(g: &Digraph, s: usize, t: usize, fails: [usize; 2]) -> bool {
        // Floyd-Warshall style closure on the surviving vertices
        let n = g.vertex_count();
        if fails.contains(&s) || fails.contains(&t) {
            return false;
        }
        let mut r = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            if !fails.contains(&u) && !fails.contains(&v) {
                r[u][v] = true;
            }
        }
        for (i, row) in r.iter_mut().enumerate() {
            row[i] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if r[i][k] {
                    for j in 0..n {
                        if r[k][j] {
                            r[i][j] = true;
                        }
                    }
                }
            }
        }
        r[s][t]
    }

    proptest! {
        #[test]
        fn ssr_matches_closure(n in 1usize..12, raw in proptest::collection::vec((0usize..12, 0usize..12), 0..40), s in 0usize..12, f1 in 0usize..12, f2 in 0usize..12) {
            let g = Digraph::from_edges(n, &raw.iter().map(|&(a, b)| (a % n, b % n)).collect::<Vec<_>>());
            let (s, f1, f2) = (s % n, f1 % n, f2 % n);
            let o = search_2ftssr(&g, s);
            for v in 0..n {
                let expect_from = if v == s { ![f1, f2].contains(&s) } else { reach_naive(&g, s, v, [f1, f2]) };
                let expect_to = if v == s { ![f1, f2].contains(&s) } else { reach_naive(&g, v, s, [f1, f2]) };
                prop_assert_eq!(o.reach_from_source(v, f1, f2), expect_from);
                prop_assert_eq!(o.reach_to_source(v, f1, f2), expect_to);
            }
        }
    }
}
