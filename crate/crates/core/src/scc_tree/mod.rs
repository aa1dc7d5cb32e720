//! SCC-trees, Δ-good testing and partial SCC-trees.

mod delta_good;
pub(crate) mod hierarchy;
mod partial;
mod tree;

pub use delta_good::{
    find_good_separation_pair, is_delta_good, is_three_connected, DeltaGoodReport, DeltaStrategy, WitnessKind,
    DEFAULT_PAIR_BUDGET,
};
pub use partial::{
    build_partial_scc_tree, delta_predicate, find_min_delta, LeafKind, PartialLeaf, PartialNodeRecord, PartialSccTree,
    SplitCase,
};
pub use tree::{build_scc_tree, tree_path_and_nca, validate_scc_tree, SccTree, TreeNodeRecord};
