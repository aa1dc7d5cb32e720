//! Instrumented search engines with exact edge-access accounting.
//!
//! Counting convention: one increment per adjacency entry consumed during a
//! traversal step, in either direction and in either phase of a query.
//! Entries leading to a failed vertex are consumed (and counted) but never
//! expanded. Seed checks and oracle calls cost nothing.

mod bibfs;
mod chbfs;
mod seeds;
mod simple;

pub use bibfs::{bi_bfs_query, bi_bfs_reach};
pub(crate) use bibfs::bi_bfs_reach_hooked;
pub(crate) use seeds::seeded_query;
pub use chbfs::chbfs_query;
pub use seeds::{ancestry_seed_build, sbfs_query, seed_reach_check, AncestrySeed, SeedVerdict};
pub use simple::{simple_bfs_query, simple_reach};

/// Number of adjacency entries consumed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeAccessCounter(u64);

impl EdgeAccessCounter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub(crate) fn bump(&mut self) {
        self.0 += 1;
    }

    pub fn count(&self) -> u64 {
        self.0
    }
}
