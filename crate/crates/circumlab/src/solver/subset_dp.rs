//! Bitmask subset dynamic programming for exact longest-path and
//! longest-cycle orders. This engine is the ground-truth oracle; it must not
//! share search code with the branch-and-bound engine.

use crate::graph::{bits, Graph};

/// Orders above this would need more than a gigabyte of DP table.
pub const MAX_DP_ORDER: usize = 22;

/// Order of a longest simple path.
///
/// `dp[mask]` holds the set of endpoints `v` such that some simple path
/// covers exactly `mask` and ends at `v`.
pub fn longest_path_order(g: &Graph) -> usize {
    let n = g.order();
    assert!(
        n <= MAX_DP_ORDER,
        "subset DP limited to n <= {MAX_DP_ORDER}"
    );
    let mut dp = vec![0u64; 1 << n];
    for v in 0..n {
        dp[1 << v] = 1 << v;
    }
    let mut best = 1usize;
    for mask in 1u64..(1 << n) {
        let ends = dp[mask as usize];
        if ends == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize);
        for v in bits(ends) {
            for u in bits(g.neighbors(v) & !mask) {
                dp[(mask | 1 << u) as usize] |= 1 << u;
            }
        }
    }
    best
}

/// Order of a longest simple cycle, or `None` for acyclic graphs.
///
/// Each cycle is searched once, anchored at its minimum vertex: `dp[mask]`
/// holds endpoints of paths that start at the lowest bit of `mask` and visit
/// exactly `mask`; a cycle closes when an endpoint neighbors the anchor.
pub fn longest_cycle_order(g: &Graph) -> Option<usize> {
    let n = g.order();
    assert!(
        n <= MAX_DP_ORDER,
        "subset DP limited to n <= {MAX_DP_ORDER}"
    );
    let mut dp = vec![0u64; 1 << n];
    for v in 0..n {
        dp[1 << v] = 1 << v;
    }
    let mut best: Option<usize> = None;
    for mask in 1u64..(1 << n) {
        let ends = dp[mask as usize];
        if ends == 0 {
            continue;
        }
        let anchor = mask.trailing_zeros() as usize;
        let size = mask.count_ones() as usize;
        for v in bits(ends) {
            if size >= 3 && g.has_edge(v, anchor) && best.is_none_or(|b| size > b) {
                best = Some(size);
            }
            // extend only into vertices above the anchor
            for u in bits(g.neighbors(v) & !mask & !((1 << anchor) - 1)) {
                dp[(mask | 1 << u) as usize] |= 1 << u;
            }
        }
    }
    best
}
