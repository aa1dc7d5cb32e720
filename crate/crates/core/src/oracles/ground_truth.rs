use super::FtQuery;
use crate::graph::{Digraph, Restricted};
use crate::heuristics::{simple_reach, EdgeAccessCounter};

/// Reference answer: two plain searches in `g - {f1, f2}`.
pub fn ground_truth_2ftsc(g: &Digraph, q: &FtQuery) -> bool {
    if let Some(a) = q.degenerate_answer() {
        return a;
    }
    // failures are removed from the view rather than skipped by the search
    let view = Restricted::new(g, |v| !q.is_failed(v));
    let mut c = EdgeAccessCounter::new();
    let none = [usize::MAX, usize::MAX];
    simple_reach(&view, q.x, q.y, none, &mut c) && simple_reach(&view, q.y, q.x, none, &mut c)
}

/// Runs `engine` on every query over `g` and compares with ground truth.
#[cfg(test)]
pub(crate) fn exhaustive(g: &Digraph, mut engine: impl FnMut(&FtQuery) -> super::QueryOutcome) {
    let n = g.vertex_count();
    for x in 0..n {
        for y in 0..n {
            for f1 in 0..n {
                for f2 in 0..n {
                    let q = FtQuery::new(x, y, f1, f2);
                    assert_eq!(engine(&q).answer, ground_truth_2ftsc(g, &q), "{q:?}");
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn fixture_answers() {
        let g = fix_a();
        assert!(ground_truth_2ftsc(&g, &FtQuery::new(3, 5, 1, 2)));
        assert!(!ground_truth_2ftsc(&g, &FtQuery::new(0, 3, 1, 4)));
        assert!(ground_truth_2ftsc(&g, &FtQuery::new(2, 2, 1, 4)));
        assert!(!ground_truth_2ftsc(&g, &FtQuery::new(2, 2, 2, 4)));
    }
}
