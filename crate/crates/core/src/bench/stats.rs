use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{exact_diameter, longest_bfs_path_lb, Digraph};
use crate::structure::{proper_separation_pair_vertices, strong_articulation_points};

#[derive(Clone, Copy, Debug, Default)]
pub struct StatsFlags {
    pub exact_diameter: bool,
    pub nsp: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetStats {
    pub n: usize,
    pub m: usize,
    /// Strong articulation points.
    pub n_a: usize,
    /// Vertices in some proper separation pair.
    pub n_sp: Option<usize>,
    pub d: Option<usize>,
    /// Eccentricity of vertex 0 over both directions.
    pub d_lower_bound: usize,
}

/// Statistics of a strongly connected graph.
pub fn dataset_stats(g: &Digraph, flags: StatsFlags) -> Result<DatasetStats> {
    let n_a = strong_articulation_points(g)?.len();
    let n_sp = if flags.nsp {
        Some(proper_separation_pair_vertices(g)?.len())
    } else {
        None
    };
    let d = if flags.exact_diameter {
        Some(exact_diameter(g)?)
    } else {
        None
    };
    Ok(DatasetStats {
        n: g.vertex_count(),
        m: g.edge_count(),
        n_a,
        n_sp,
        d,
        d_lower_bound: if g.vertex_count() == 0 { 0 } else { longest_bfs_path_lb(g, 0) },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn fix_a_stats() {
        let s = dataset_stats(&fix_a(), StatsFlags { exact_diameter: true, nsp: false }).unwrap();
        assert_eq!((s.n, s.m, s.n_a), (6, 8, 6));
        assert!(s.d_lower_bound <= s.d.unwrap());
        assert_eq!(s.n_sp, None);
    }

    #[test]
    fn c4_stats() {
        let s = dataset_stats(&fix_c4(), StatsFlags { exact_diameter: true, nsp: true }).unwrap();
        assert_eq!(s.d, Some(3));
        assert_eq!(s.n_sp, Some(4));
    }
}
