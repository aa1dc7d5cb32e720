//! Generation-stamped vertex marks, pooled per thread so that per-query
//! searches do not pay an O(n) clear.

use std::cell::RefCell;

pub(crate) struct Marks {
    vals: Vec<u32>,
    base: u32,
}

/// Number of distinct states a search may store per vertex.
const STATES: u32 = 4;

impl Marks {
    fn new() -> Self {
        Marks {
            vals: Vec::new(),
            base: STATES,
        }
    }

    fn reset(&mut self, n: usize) {
        if self.vals.len() < n {
            self.vals.resize(n, 0);
        }
        if self.base > u32::MAX - 2 * STATES {
            self.vals.iter_mut().for_each(|v| *v = 0);
            self.base = STATES;
        } else {
            self.base += STATES;
        }
    }

    /// State of `v`, or `None` if untouched in this generation.
    #[inline]
    pub(crate) fn get(&self, v: usize) -> Option<u32> {
        let raw = self.vals[v];
        (raw >= self.base).then(|| raw - self.base)
    }

    #[inline]
    pub(crate) fn is_set(&self, v: usize) -> bool {
        self.vals[v] >= self.base
    }

    #[inline]
    pub(crate) fn set(&mut self, v: usize, state: u32) {
        debug_assert!(state < STATES);
        self.vals[v] = self.base + state;
    }
}

thread_local! {
    static POOL: RefCell<Vec<Marks>> = const { RefCell::new(Vec::new()) };
}

/// Runs `f` with a cleared mark array of at least `n` entries. Nested calls
/// get distinct arrays.
pub(crate) fn with_marks<R>(n: usize, f: impl FnOnce(&mut Marks) -> R) -> R {
    let mut marks = POOL
        .with(|p| p.borrow_mut().pop())
        .unwrap_or_else(Marks::new);
    marks.reset(n);
    let out = f(&mut marks);
    POOL.with(|p| p.borrow_mut().push(marks));
    out
}
