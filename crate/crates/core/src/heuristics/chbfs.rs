use super::{bi_bfs_query, EdgeAccessCounter};
use crate::graph::GraphView;
use crate::oracles::{FtQuery, QueryOutcome, TwoFtSsr};

/// `ChBFS`: exact single-source oracles on each seed, with bidirectional
/// search as the fallback.
///
/// Per seed `r`, all four of `r → x`, `r → y`, `x → r`, `y → r` surviving
/// proves the query; a mismatch within either pair disproves it.
pub fn chbfs_query<V: GraphView, O: TwoFtSsr>(g: &V, seeds: &[O], q: &FtQuery) -> QueryOutcome {
    if let Some(a) = q.degenerate_answer() {
        return QueryOutcome::answer(a);
    }
    let mut out = QueryOutcome::default();
    for o in seeds {
        if q.is_failed(o.source()) {
            continue;
        }
        let fx = o.reach_from_source(q.x, q.f1, q.f2);
        let fy = o.reach_from_source(q.y, q.f1, q.f2);
        out.ssr_calls += 2;
        if fx != fy {
            out.answered_by_seed = true;
            return out;
        }
        let rx = o.reach_to_source(q.x, q.f1, q.f2);
        let ry = o.reach_to_source(q.y, q.f1, q.f2);
        out.ssr_calls += 2;
        if rx != ry {
            out.answered_by_seed = true;
            return out;
        }
        if fx && rx {
            out.answer = true;
            out.answered_by_seed = true;
            return out;
        }
    }
    let mut counter = EdgeAccessCounter::new();
    out.answer = bi_bfs_query(g, q, &mut counter);
    out.edges_accessed = counter.count();
    out
}
