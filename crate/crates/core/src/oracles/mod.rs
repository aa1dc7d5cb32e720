//! Query engines over decomposition trees, the Δ-bounded local query, the
//! auxiliary single-source and single-fault oracles, and ground truth.

mod aux;
mod chtree;
mod delta_query;
mod ground_truth;
mod partial_query;
mod tree_query;

pub use aux::{search_1ftsc, search_2ftssr, OneFtSc, SearchFtsc, SearchSsr, TwoFtSsr};
pub use chtree::{chtree_build, ChTree, SsrMode};
pub use delta_query::delta_bounded_query;
pub use ground_truth::ground_truth_2ftsc;
pub use partial_query::PartialTreeOracle;
pub use tree_query::TreeOracle;

use serde::{Deserialize, Serialize};

use crate::graph::Vertex;

/// "Are `x` and `y` strongly connected in `G - {f1, f2}`?"
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FtQuery {
    pub x: Vertex,
    pub y: Vertex,
    pub f1: Vertex,
    pub f2: Vertex,
}

impl FtQuery {
    pub fn new(x: Vertex, y: Vertex, f1: Vertex, f2: Vertex) -> Self {
        FtQuery { x, y, f1, f2 }
    }

    #[inline]
    pub fn is_failed(&self, v: Vertex) -> bool {
        v == self.f1 || v == self.f2
    }

    /// Answer fixed by the degenerate-query contract, if any: a failed query
    /// vertex gives `false`, otherwise `x == y` gives `true`.
    #[inline]
    pub fn degenerate_answer(&self) -> Option<bool> {
        if self.is_failed(self.x) || self.is_failed(self.y) {
            Some(false)
        } else if self.x == self.y {
            Some(true)
        } else {
            None
        }
    }
}

/// Answer plus instrumentation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryOutcome {
    pub answer: bool,
    pub edges_accessed: u64,
    /// Depth of the tree node at which the answer was produced.
    pub depth_reached: Option<u32>,
    pub ssr_calls: u64,
    pub onefault_calls: u64,
    pub answered_by_seed: bool,
}

impl QueryOutcome {
    pub(crate) fn answer(answer: bool) -> Self {
        QueryOutcome {
            answer,
            ..Default::default()
        }
    }
}
