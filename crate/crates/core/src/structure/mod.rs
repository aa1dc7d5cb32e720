//! Dominators, strong articulation points, loop nesting trees and the
//! split-vertex selection strategies.

mod dominators;
mod lnt;
mod qsep;
mod sap;
mod select;

pub use dominators::{dominator_tree, DominatorTree};
pub use lnt::{loop_nesting_tree, LoopNestingTree};
pub use qsep::{q_separator, separator_quality, verify_q_separator};
pub use sap::{
    component_saps, proper_separation_pair_vertices, strong_articulation_points,
    strong_articulation_points_naive,
};
pub use select::{label_propagation_select, mcn_select, pagerank_select, SplitSelector, SplitterKind};
