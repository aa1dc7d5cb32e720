//! Small named graphs shared by tests, docs and the demo.

use super::Digraph;

/// Directed 4-cycle `0→1→2→3→0`.
pub fn fix_c4() -> Digraph {
    Digraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
}

/// Six vertices, eight edges; strongly connected and every vertex is a
/// strong articulation point.
pub fn fix_a() -> Digraph {
    Digraph::from_edges(
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 0),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 3),
            (5, 0),
        ],
    )
}

/// Bidirected path `0–1–2–3`.
pub fn fix_p4b() -> Digraph {
    bidirected_path(4)
}

/// Bidirected complete graph on four vertices.
pub fn fix_k4b() -> Digraph {
    let mut e = Vec::new();
    for u in 0..4 {
        for v in 0..4 {
            if u != v {
                e.push((u, v));
            }
        }
    }
    Digraph::from_edges(4, &e)
}

/// Two bidirected triangles `{0,1,2}` and `{3,4,5}` joined by `2–3`.
pub fn fix_2t() -> Digraph {
    let mut e = Vec::new();
    for &(u, v) in &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)] {
        e.push((u, v));
        e.push((v, u));
    }
    Digraph::from_edges(6, &e)
}

pub fn bidirected_path(n: usize) -> Digraph {
    let mut e = Vec::new();
    for i in 0..n.saturating_sub(1) {
        e.push((i, i + 1));
        e.push((i + 1, i));
    }
    Digraph::from_edges(n, &e)
}

/// Strongly connected test graph: the cycle `0→1→…→n-1→0` plus `raw`
/// folded into range.
#[cfg(test)]
pub(crate) fn sc_graph(n: usize, raw: &[(usize, usize)]) -> Digraph {
    let mut e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    e.extend(raw.iter().map(|&(a, b)| (a % n, b % n)));
    Digraph::from_edges(n, &e)
}
