use super::{bi_bfs_reach_hooked, EdgeAccessCounter};
use crate::graph::{bfs_tree, BfsTree, GraphView, Reversed, Vertex};
use crate::oracles::{FtQuery, QueryOutcome};

/// Forward and backward BFS trees of one seed vertex.
#[derive(Clone, Debug)]
pub struct AncestrySeed {
    seed: Vertex,
    forward: BfsTree,
    backward: BfsTree,
}

pub fn ancestry_seed_build<V: GraphView>(g: &V, seed: Vertex) -> AncestrySeed {
    AncestrySeed {
        seed,
        forward: bfs_tree(g, seed, &[]),
        backward: bfs_tree(&Reversed(g), seed, &[]),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeedVerdict {
    ProvenReachable,
    Unknown,
}

impl AncestrySeed {
    pub fn seed(&self) -> Vertex {
        self.seed
    }

    pub fn forward(&self) -> &BfsTree {
        &self.forward
    }

    pub fn backward(&self) -> &BfsTree {
        &self.backward
    }

    /// `seed → dst` survives the failures: the forward tree path is intact.
    pub fn proves_from_seed(&self, dst: Vertex, fails: [Vertex; 2]) -> bool {
        !fails.contains(&self.seed)
            && !fails.contains(&dst)
            && self.forward.reaches(dst)
            && fails.iter().all(|&f| !self.forward.is_ancestor(f, dst))
    }

    /// `src → seed` survives the failures: the backward tree path is intact.
    pub fn proves_to_seed(&self, src: Vertex, fails: [Vertex; 2]) -> bool {
        !fails.contains(&self.seed)
            && !fails.contains(&src)
            && self.backward.reaches(src)
            && fails.iter().all(|&f| !self.backward.is_ancestor(f, src))
    }
}

/// Sound, incomplete certificate for `src → dst` in `G - {f1, f2}` through
/// the seed. Never reports a reachability that does not hold.
pub fn seed_reach_check(seed: &AncestrySeed, src: Vertex, dst: Vertex, f1: Vertex, f2: Vertex) -> SeedVerdict {
    let fails = [f1, f2];
    if seed.proves_to_seed(src, fails) && seed.proves_from_seed(dst, fails) {
        SeedVerdict::ProvenReachable
    } else {
        SeedVerdict::Unknown
    }
}

fn proven(seeds: &[AncestrySeed], src: Vertex, dst: Vertex, fails: [Vertex; 2]) -> bool {
    seeds
        .iter()
        .any(|s| seed_reach_check(s, src, dst, fails[0], fails[1]) == SeedVerdict::ProvenReachable)
}

/// `src → dst` by bidirectional search whose settlements consult the seeds.
pub(crate) fn seeded_reach<V: GraphView>(
    g: &V,
    seeds: &[AncestrySeed],
    src: Vertex,
    dst: Vertex,
    fails: [Vertex; 2],
    counter: &mut EdgeAccessCounter,
) -> bool {
    // a forward settlement of a seed needs only seed -> dst, a backward one
    // only src -> seed
    let by_seed: std::collections::HashMap<Vertex, &AncestrySeed> =
        seeds.iter().map(|s| (s.seed, s)).collect();
    bi_bfs_reach_hooked(
        g,
        src,
        dst,
        fails,
        counter,
        |v| by_seed.get(&v).is_some_and(|s| s.proves_from_seed(dst, fails)),
        |v| by_seed.get(&v).is_some_and(|s| s.proves_to_seed(src, fails)),
    )
}

/// Seed pass first, per direction; any direction it cannot prove is settled
/// by a seeded bidirectional search.
pub(crate) fn seeded_query<V: GraphView>(
    g: &V,
    seeds: &[AncestrySeed],
    q: &FtQuery,
    counter: &mut EdgeAccessCounter,
) -> QueryOutcome {
    let fails = [q.f1, q.f2];
    let xy = proven(seeds, q.x, q.y, fails);
    let yx = proven(seeds, q.y, q.x, fails);
    if xy && yx {
        return QueryOutcome {
            answer: true,
            answered_by_seed: true,
            ..Default::default()
        };
    }
    let answer = (xy || seeded_reach(g, seeds, q.x, q.y, fails, counter))
        && (yx || seeded_reach(g, seeds, q.y, q.x, fails, counter));
    QueryOutcome {
        answer,
        edges_accessed: counter.count(),
        ..Default::default()
    }
}

/// `sBFS` with precomputed seeds.
pub fn sbfs_query<V: GraphView>(g: &V, seeds: &[AncestrySeed], q: &FtQuery) -> QueryOutcome {
    if let Some(a) = q.degenerate_answer() {
        return QueryOutcome::answer(a);
    }
    let mut counter = EdgeAccessCounter::new();
    seeded_query(g, seeds, q, &mut counter)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::Digraph;
    use crate::heuristics::simple_reach;
    use proptest::prelude::*;

    #[test]
    fn fix_a_seed_zero() {
        let s = ancestry_seed_build(&fix_a(), 0);
        // forward tree is the chain 0-1-2-3-4-5; 3 lies on the path to 5
        assert_eq!(seed_reach_check(&s, 1, 5, 3, 3), SeedVerdict::Unknown);
        assert_eq!(seed_reach_check(&s, 2, 2, 4, 4), SeedVerdict::ProvenReachable);
        assert_eq!(seed_reach_check(&s, 1, 2, 0, 3), SeedVerdict::Unknown);
    }

    #[test]
    fn sbfs_on_c4_with_all_seeds() {
        let g = fix_c4();
        let seeds: Vec<_> = (0..4).map(|r| ancestry_seed_build(&g, r)).collect();
        let out = sbfs_query(&g, &seeds, &FtQuery::new(0, 1, 2, 2));
        assert!(!out.answer);
        let out = sbfs_query(&g, &seeds, &FtQuery::new(0, 0, 2, 3));
        assert!(out.answer);
        assert_eq!(out.edges_accessed, 0);
    }

    fn arb_graph() -> impl Strategy<Value = Digraph> {
        (2usize..20, proptest::collection::vec((0usize..20, 0usize..20), 0..60)).prop_map(|(n, raw)| {
            let mut e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            e.extend(raw.iter().map(|&(a, b)| (a % n, b % n)));
            Digraph::from_edges(n, &e)
        })
    }

    proptest! {
        #[test]
        fn seed_check_is_sound(g in arb_graph(), r in 0usize..20, s in 0usize..20, t in 0usize..20, f1 in 0usize..20, f2 in 0usize..20) {
            let n = g.vertex_count();
            let seed = ancestry_seed_build(&g, r % n);
            let (s, t, f1, f2) = (s % n, t % n, f1 % n, f2 % n);
            if seed_reach_check(&seed, s, t, f1, f2) == SeedVerdict::ProvenReachable {
                prop_assert!(simple_reach(&g, s, t, [f1, f2], &mut EdgeAccessCounter::new()));
            }
        }

        #[test]
        fn sbfs_is_exact(g in arb_graph(), k in 0usize..5, x in 0usize..20, y in 0usize..20, f1 in 0usize..20, f2 in 0usize..20) {
            let n = g.vertex_count();
            let seeds: Vec<_> = (0..k.min(n)).map(|r| ancestry_seed_build(&g, r)).collect();
            let q = FtQuery::new(x % n, y % n, f1 % n, f2 % n);
            let out = sbfs_query(&g, &seeds, &q);
            let mut c = EdgeAccessCounter::new();
            prop_assert_eq!(out.answer, crate::heuristics::simple_bfs_query(&g, &q, &mut c));
            if out.answered_by_seed {
                prop_assert_eq!(out.edges_accessed, 0);
            }
        }
    }
}
