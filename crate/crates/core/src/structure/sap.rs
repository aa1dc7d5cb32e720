use super::dominator_tree;
use crate::error::{Error, Result};
use crate::graph::{compute_sccs, sccs_without, Digraph, Reversed, Vertex};

/// Strong articulation points of a strongly connected graph: the vertices
/// whose removal leaves more than one SCC.
pub fn strong_articulation_points(g: &Digraph) -> Result<Vec<Vertex>> {
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    Ok(saps_strongly_connected(g))
}

/// Non-trivial dominators of `G` and `G^R` from vertex 0, plus 0 itself when
/// its removal disconnects.
fn saps_strongly_connected(g: &Digraph) -> Vec<Vertex> {
    let n = g.vertex_count();
    if n < 3 {
        return Vec::new();
    }
    let mut is_sap = vec![false; n];
    for v in dominator_tree(g, 0).nontrivial_dominators() {
        is_sap[v] = true;
    }
    for v in dominator_tree(&Reversed(g), 0).nontrivial_dominators() {
        is_sap[v] = true;
    }
    is_sap[0] = sccs_without(g, &[0]).component_count() > 1;
    (0..n).filter(|&v| is_sap[v]).collect()
}

/// Vertices whose removal splits their own SCC. On a strongly connected
/// graph this is exactly the SAP set.
pub fn component_saps(g: &Digraph) -> Vec<Vertex> {
    let labels = compute_sccs(g);
    if labels.component_count() == 1 {
        return saps_strongly_connected(g);
    }
    let mut out = Vec::new();
    for members in labels.members() {
        if members.len() < 3 {
            continue;
        }
        let sub = g.induced(&members);
        out.extend(saps_strongly_connected(&sub.graph).into_iter().map(|v| sub.to_parent[v]));
    }
    out.sort_unstable();
    out
}

/// Removal-based SAP set; the reference for the dominator method.
pub fn strong_articulation_points_naive(g: &Digraph) -> Result<Vec<Vertex>> {
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    Ok((0..g.vertex_count())
        .filter(|&v| sccs_without(g, &[v]).component_count() > 1)
        .collect())
}

/// Vertices that are SAPs or belong to a proper separation pair `{f1, f2}`
/// (each a SAP of the graph minus the other).
pub fn proper_separation_pair_vertices(g: &Digraph) -> Result<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut hit = vec![false; n];
    for v in strong_articulation_points(g)? {
        hit[v] = true;
    }
    let all: Vec<Vertex> = (0..n).collect();
    let sap_minus: Vec<Vec<Vertex>> = (0..n)
        .map(|f| {
            let rest: Vec<Vertex> = all.iter().copied().filter(|&v| v != f).collect();
            let sub = g.induced(&rest);
            component_saps(&sub.graph).into_iter().map(|v| sub.to_parent[v]).collect()
        })
        .collect();
    for f1 in 0..n {
        for &f2 in &sap_minus[f1] {
            if f1 < f2 && sap_minus[f2].binary_search(&f1).is_ok() {
                hit[f1] = true;
                hit[f2] = true;
            }
        }
    }
    Ok((0..n).filter(|&v| hit[v]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use proptest::prelude::*;

    #[test]
    fn fixtures() {
        assert!(strong_articulation_points(&fix_k4b()).unwrap().is_empty());
        assert_eq!(strong_articulation_points(&fix_a()).unwrap(), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(strong_articulation_points(&fix_p4b()).unwrap(), vec![1, 2]);
        assert!(strong_articulation_points(&Digraph::from_edges(2, &[(0, 1)])).is_err());
    }

    #[test]
    fn proper_pairs() {
        assert!(proper_separation_pair_vertices(&fix_k4b()).unwrap().is_empty());
        // in the bidirected path only 1 and 2 qualify: removing an end
        // vertex leaves a path whose SAPs are its interior
        assert_eq!(proper_separation_pair_vertices(&fix_p4b()).unwrap(), vec![1, 2]);
        assert_eq!(proper_separation_pair_vertices(&fix_c4()).unwrap(), vec![0, 1, 2, 3]);
    }

    fn sc_graph(n: usize, raw: &[(usize, usize)]) -> Digraph {
        let mut e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        e.extend(raw.iter().map(|&(a, b)| (a % n, b % n)));
        Digraph::from_edges(n, &e)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn dominator_saps_match_naive(n in 1usize..=10, raw in proptest::collection::vec((0usize..10, 0usize..10), 0..30)) {
            let g = sc_graph(n, &raw);
            prop_assert_eq!(strong_articulation_points(&g).unwrap(), strong_articulation_points_naive(&g).unwrap());
        }

        #[test]
        fn component_saps_match_removal(n in 1usize..=9, raw in proptest::collection::vec((0usize..9, 0usize..9), 0..25)) {
            let g = Digraph::from_edges(n, &raw.iter().map(|&(a, b)| (a % n, b % n)).collect::<Vec<_>>());
            let base = compute_sccs(&g);
            let expect: Vec<Vertex> = (0..n).filter(|&v| {
                let size = base.component_sizes()[base.component_of(v).unwrap()];
                // splitting v's component means the count grows by at least one
                sccs_without(&g, &[v]).component_count() > base.component_count() - usize::from(size == 1)
            }).collect();
            prop_assert_eq!(component_saps(&g), expect);
        }
    }
}
