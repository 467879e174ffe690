use thiserror::Error;

/// Default cap on partial-assignment nodes visited by a backtracking search.
pub const DEFAULT_NODE_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub node_cap: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self { node_cap: DEFAULT_NODE_CAP }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search exceeded {cap} nodes")]
pub struct SearchCapExceeded {
    pub cap: u64,
}

pub(crate) struct NodeCounter {
    visited: u64,
    cap: u64,
}

impl NodeCounter {
    pub(crate) fn new(limits: SearchLimits) -> Self {
        Self { visited: 0, cap: limits.node_cap }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), SearchCapExceeded> {
        self.visited += 1;
        if self.visited > self.cap {
            Err(SearchCapExceeded { cap: self.cap })
        } else {
            Ok(())
        }
    }
}
