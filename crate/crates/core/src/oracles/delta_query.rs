use std::collections::VecDeque;

use super::FtQuery;
use crate::graph::{Digraph, GraphView, Reversed, Vertex};
use crate::heuristics::EdgeAccessCounter;
use crate::marks::with_marks;

enum Bounded {
    Finished(Vec<Vertex>),
    Overflow,
}

/// Search from `root` in `g - fails` that gives up when it is about to
/// consume its `(limit + 1)`-th adjacency entry.
fn bounded_search<V: GraphView>(
    g: &V,
    root: Vertex,
    fails: [Vertex; 2],
    limit: u64,
    counter: &mut EdgeAccessCounter,
) -> Bounded {
    with_marks(g.vertex_bound(), |seen| {
        let mut used = 0u64;
        let mut order = vec![root];
        let mut queue = VecDeque::from([root]);
        seen.set(root, 0);
        while let Some(u) = queue.pop_front() {
            for &w in g.successors(u) {
                let w = w as usize;
                if !g.contains(w) {
                    continue;
                }
                if used == limit {
                    return Bounded::Overflow;
                }
                used += 1;
                counter.bump();
                if fails.contains(&w) || seen.is_set(w) {
                    continue;
                }
                seen.set(w, 0);
                order.push(w);
                queue.push_back(w);
            }
        }
        Bounded::Finished(order)
    })
}

fn contains(b: &Bounded, v: Vertex) -> bool {
    matches!(b, Bounded::Finished(set) if set.contains(&v))
}

/// Answers a query on a Δ-good graph with at most `4Δ + 4` edge accesses.
///
/// Each of `Succ(x)`, `Pred(x)`, `Succ(y)`, `Pred(y)` in `g - {f1, f2}` is
/// explored with budget `Δ + 1`. A finished search decides the query by
/// membership; only the case where all four exceed the budget relies on
/// Δ-goodness (both endpoints then lie in the unique large SCC).
pub fn delta_bounded_query(g: &Digraph, q: &FtQuery, delta: usize) -> (bool, u64) {
    if let Some(a) = q.degenerate_answer() {
        return (a, 0);
    }
    let mut counter = EdgeAccessCounter::new();
    let answer = decide(g, q, delta as u64 + 1, &mut counter);
    assert!(
        counter.count() <= 4 * delta as u64 + 4,
        "bounded query exceeded its edge budget"
    );
    (answer, counter.count())
}

pub(crate) fn decide<V: GraphView>(g: &V, q: &FtQuery, limit: u64, counter: &mut EdgeAccessCounter) -> bool {
    let fails = [q.f1, q.f2];
    let rev = Reversed(g);
    let succ_x = bounded_search(g, q.x, fails, limit, counter);
    if let Bounded::Finished(_) = succ_x {
        if !contains(&succ_x, q.y) {
            return false;
        }
        // y reachable from x: strongly connected iff Succ(y) = Succ(x)
        return contains(&bounded_search(g, q.y, fails, limit, counter), q.x);
    }
    let pred_x = bounded_search(&rev, q.x, fails, limit, counter);
    if let Bounded::Finished(_) = pred_x {
        if !contains(&pred_x, q.y) {
            return false;
        }
        return contains(&bounded_search(&rev, q.y, fails, limit, counter), q.x);
    }
    matches!(bounded_search(g, q.y, fails, limit, counter), Bounded::Overflow)
        && matches!(bounded_search(&rev, q.y, fails, limit, counter), Bounded::Overflow)
}
