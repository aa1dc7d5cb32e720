use std::collections::VecDeque;

use super::EdgeAccessCounter;
use crate::graph::{GraphView, Vertex};
use crate::marks::{with_marks, Marks};
use crate::oracles::FtQuery;

const DISCOVERED: u32 = 0;
const SETTLED: u32 = 1;

struct Side {
    queue: VecDeque<Vertex>,
    cur: Option<(Vertex, usize)>,
}

enum Step {
    Continue,
    Done(bool),
}

/// Bidirectional BFS for `src → dst` in `g - fails`, without hooks.
pub fn bi_bfs_reach<V: GraphView>(
    g: &V,
    src: Vertex,
    dst: Vertex,
    fails: [Vertex; 2],
    counter: &mut EdgeAccessCounter,
) -> bool {
    bi_bfs_reach_hooked(g, src, dst, fails, counter, |_| false, |_| false)
}

/// `biBFS` over both directions of the query, `x → y` first.
pub fn bi_bfs_query<V: GraphView>(g: &V, q: &FtQuery, counter: &mut EdgeAccessCounter) -> bool {
    if let Some(a) = q.degenerate_answer() {
        return a;
    }
    let fails = [q.f1, q.f2];
    bi_bfs_reach(g, q.x, q.y, fails, counter) && bi_bfs_reach(g, q.y, q.x, fails, counter)
}

/// Bidirectional search alternating one adjacency entry per turn, forward
/// first. The roots start settled. The search reports `true` as soon as a
/// side consumes an entry whose other endpoint the opposite side has settled,
/// and `false` as soon as the side to move has nothing left to scan.
///
/// `on_forward` / `on_backward` run when a vertex is settled by that side
/// (roots included); returning `true` ends the search positively.
pub(crate) fn bi_bfs_reach_hooked<V: GraphView>(
    g: &V,
    src: Vertex,
    dst: Vertex,
    fails: [Vertex; 2],
    counter: &mut EdgeAccessCounter,
    mut on_forward: impl FnMut(Vertex) -> bool,
    mut on_backward: impl FnMut(Vertex) -> bool,
) -> bool {
    if fails.contains(&src) || fails.contains(&dst) {
        return false;
    }
    if src == dst {
        return true;
    }
    let n = g.vertex_bound();
    with_marks(n, |fwd| {
        with_marks(n, |bwd| {
            fwd.set(src, SETTLED);
            bwd.set(dst, SETTLED);
            if on_forward(src) || on_backward(dst) {
                return true;
            }
            let mut f = Side {
                queue: VecDeque::new(),
                cur: Some((src, 0)),
            };
            let mut b = Side {
                queue: VecDeque::new(),
                cur: Some((dst, 0)),
            };
            loop {
                if let Step::Done(r) = step(g, true, &mut f, fwd, bwd, fails, counter, &mut on_forward) {
                    return r;
                }
                if let Step::Done(r) = step(g, false, &mut b, bwd, fwd, fails, counter, &mut on_backward) {
                    return r;
                }
            }
        })
    })
}

#[allow(clippy::too_many_arguments)]
fn step<V: GraphView>(
    g: &V,
    forward: bool,
    side: &mut Side,
    mine: &mut Marks,
    other: &Marks,
    fails: [Vertex; 2],
    counter: &mut EdgeAccessCounter,
    hook: &mut impl FnMut(Vertex) -> bool,
) -> Step {
    loop {
        let (v, pos) = match side.cur {
            Some(c) => c,
            None => {
                let Some(v) = side.queue.pop_front() else {
                    return Step::Done(false);
                };
                mine.set(v, SETTLED);
                if hook(v) {
                    return Step::Done(true);
                }
                side.cur = Some((v, 0));
                continue;
            }
        };
        let adj = if forward { g.successors(v) } else { g.predecessors(v) };
        let mut pos = pos;
        while pos < adj.len() && !g.contains(adj[pos] as usize) {
            pos += 1;
        }
        if pos == adj.len() {
            side.cur = None;
            continue;
        }
        let w = adj[pos] as usize;
        side.cur = Some((v, pos + 1));
        counter.bump();
        if fails.contains(&w) {
            return Step::Continue;
        }
        if other.get(w) == Some(SETTLED) {
            return Step::Done(true);
        }
        if !mine.is_set(w) {
            mine.set(w, DISCOVERED);
            side.queue.push_back(w);
        }
        return Step::Continue;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::Digraph;
    use crate::heuristics::simple_reach;
    use proptest::prelude::*;

    #[test]
    fn path_of_four() {
        let g = Digraph::from_edges(6, &[(0, 1), (1, 2), (2, 3)]);
        let mut c = EdgeAccessCounter::new();
        assert!(bi_bfs_reach(&g, 0, 3, [4, 5], &mut c));
        assert_eq!(c.count(), 4);
    }

    #[test]
    fn failed_cut_on_fix_a() {
        let mut c = EdgeAccessCounter::new();
        assert!(!bi_bfs_query(&fix_a(), &FtQuery::new(0, 4, 3, 5), &mut c));
        let mut c = EdgeAccessCounter::new();
        assert!(bi_bfs_query(&fix_a(), &FtQuery::new(0, 1, 3, 4), &mut c));
    }

    proptest! {
        #[test]
        fn agrees_with_plain_bfs(n in 2usize..25, raw in proptest::collection::vec((0usize..25, 0usize..25), 0..70), s in 0usize..25, t in 0usize..25, f1 in 0usize..25, f2 in 0usize..25) {
            let g = Digraph::from_edges(n, &raw.iter().map(|&(a, b)| (a % n, b % n)).collect::<Vec<_>>());
            let fails = [f1 % n, f2 % n];
            let mut c1 = EdgeAccessCounter::new();
            let mut c2 = EdgeAccessCounter::new();
            prop_assert_eq!(
                bi_bfs_reach(&g, s % n, t % n, fails, &mut c1),
                simple_reach(&g, s % n, t % n, fails, &mut c2)
            );
            prop_assert!(c1.count() <= 2 * g.edge_count() as u64);
        }
    }
}
