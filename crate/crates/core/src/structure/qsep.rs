use crate::error::{Error, Result};
use crate::graph::{farthest_bfs_path, sccs_without, Digraph, Vertex};

/// Separator quality `max(1, ⌊√n / (2 log₂ n)⌋)`.
pub fn separator_quality(n: usize) -> usize {
    if n < 3 {
        return 1;
    }
    let nf = n as f64;
    ((nf.sqrt() / (2.0 * nf.log2())).floor() as usize).max(1)
}

/// Every SCC of `g - s` has at most `n - q·|s|` vertices.
pub fn verify_q_separator(g: &Digraph, s: &[Vertex], q: usize) -> bool {
    let n = g.vertex_count();
    let Some(cap) = n.checked_sub(q * s.len()) else {
        return false;
    };
    sccs_without(g, s).component_sizes().iter().all(|&c| c <= cap)
}

/// Separator candidate along a long BFS path, or `None` when the graph is
/// too shallow (longest BFS path from vertex 0 shorter than `√n`) or no
/// candidate verifies.
///
/// Candidates take every `s`-th vertex of the path, with `s` starting at half
/// the path length and halving down to 1. Vertices are listed in path order.
pub fn q_separator(g: &Digraph) -> Result<Option<Vec<Vertex>>> {
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let n = g.vertex_count();
    let path = farthest_bfs_path(g, 0);
    if ((path.len() - 1) as f64) < (n as f64).sqrt() {
        return Ok(None);
    }
    let q = separator_quality(n);
    let mut step = path.len().div_ceil(2);
    loop {
        let s: Vec<Vertex> = path.iter().copied().skip(step).step_by(step).collect();
        if !s.is_empty() && verify_q_separator(g, &s, q) {
            return Ok(Some(s));
        }
        if step == 1 {
            return Ok(None);
        }
        step /= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn examples() {
        assert_eq!(separator_quality(100), 1);
        assert_eq!(q_separator(&bidirected_path(100)).unwrap(), Some(vec![50]));
        assert!(verify_q_separator(&bidirected_path(100), &[50], 1));
        assert_eq!(q_separator(&fix_k4b()).unwrap(), None);
        assert!(q_separator(&Digraph::from_edges(2, &[(0, 1)])).is_err());
    }

    #[test]
    fn quality_grows_slowly() {
        assert_eq!(separator_quality(1 << 20), 25);
        assert_eq!(separator_quality(10_000), 3);
    }
}
