//! Dual-fault strong-connectivity oracles for directed graphs.
//!
//! A query `(x, y, f1, f2)` asks whether `x` and `y` are strongly connected
//! after the vertices `f1` and `f2` fail. The crate provides:
//!
//! * [`graph`]: the immutable [`Digraph`](graph::Digraph), SNAP/DIMACS
//!   ingestion, SCCs, BFS trees and diameter estimates.
//! * [`structure`]: dominator trees, strong articulation points, loop
//!   nesting trees and the split-vertex selectors.
//! * [`scc_tree`]: full SCC decomposition trees, Δ-good testing and partial
//!   SCC-trees.
//! * [`oracles`]: the tree-based query engines, the Δ-bounded local query,
//!   the seed-organised `ChTree`, and brute-force ground truth.
//! * [`heuristics`]: instrumented `simpleBFS`, `biBFS`, `sBFS(k)` and
//!   `ChBFS(k)` engines.
//! * [`bench`]: query workloads, engine descriptors, reports and dataset
//!   statistics.

pub mod bench;
pub mod error;
pub mod graph;
pub mod heuristics;
mod marks;
pub mod oracles;
pub mod scc_tree;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{Digraph, Vertex};
pub use oracles::{FtQuery, QueryOutcome};
