use super::EdgeAccessCounter;
use crate::graph::{GraphView, Vertex};
use crate::marks::with_marks;
use crate::oracles::FtQuery;

/// Plain BFS from `src` looking for `dst` in `g - fails`. Stops on the
/// first entry that discovers `dst`.
pub fn simple_reach<V: GraphView>(
    g: &V,
    src: Vertex,
    dst: Vertex,
    fails: [Vertex; 2],
    counter: &mut EdgeAccessCounter,
) -> bool {
    if fails.contains(&src) || fails.contains(&dst) {
        return false;
    }
    if src == dst {
        return true;
    }
    with_marks(g.vertex_bound(), |seen| {
        let mut queue = std::collections::VecDeque::new();
        seen.set(src, 0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &w in g.successors(u) {
                let w = w as usize;
                if !g.contains(w) {
                    continue;
                }
                counter.bump();
                if fails.contains(&w) || seen.is_set(w) {
                    continue;
                }
                if w == dst {
                    return true;
                }
                seen.set(w, 0);
                queue.push_back(w);
            }
        }
        false
    })
}

/// `simpleBFS`: `x → y`, then `y → x` only if the first succeeded.
pub fn simple_bfs_query<V: GraphView>(g: &V, q: &FtQuery, counter: &mut EdgeAccessCounter) -> bool {
    if let Some(a) = q.degenerate_answer() {
        return a;
    }
    let fails = [q.f1, q.f2];
    simple_reach(g, q.x, q.y, fails, counter) && simple_reach(g, q.y, q.x, fails, counter)
}
