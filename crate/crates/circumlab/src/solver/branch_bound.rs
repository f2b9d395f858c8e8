//! Depth-first branch and bound for longest paths and cycles.
//!
//! Independent of the subset-DP engine by design: the harness cross-checks
//! the two on every graph it touches, so they must not share search logic.

use crate::graph::{bits, Graph};

/// Vertices reachable from `from` without stepping on `blocked`, minus
/// `blocked` itself. `from` is included.
fn reachable(g: &Graph, from: usize, blocked: u64) -> u64 {
    let mut seen = 1u64 << from;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= g.neighbors(v) & !blocked & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen
}

pub fn longest_path_order(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 1usize;
    for start in 0..n {
        path_dfs(g, start, 1 << start, 1, &mut best);
    }
    best
}

fn path_dfs(g: &Graph, last: usize, visited: u64, len: usize, best: &mut usize) {
    if len > *best {
        *best = len;
    }
    let candidates = g.neighbors(last) & !visited;
    if candidates == 0 {
        return;
    }
    // optimistic bound: everything still reachable could be appended
    let reach = reachable(g, last, visited & !(1 << last));
    let bound = len + (reach & !visited).count_ones() as usize;
    if bound <= *best {
        return;
    }
    for u in bits(candidates) {
        path_dfs(g, u, visited | 1 << u, len + 1, best);
    }
}

pub fn longest_cycle_order(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = 0usize;
    for anchor in 0..n {
        // search only cycles whose minimum vertex is the anchor
        let allowed = !((1u64 << anchor) - 1);
        cycle_dfs(g, anchor, anchor, 1 << anchor, 1, allowed, &mut best);
    }
    (best >= 3).then_some(best)
}

fn cycle_dfs(
    g: &Graph,
    anchor: usize,
    last: usize,
    visited: u64,
    len: usize,
    allowed: u64,
    best: &mut usize,
) {
    if len >= 3 && g.has_edge(last, anchor) && len > *best {
        *best = len;
    }
    let candidates = g.neighbors(last) & allowed & !visited;
    if candidates == 0 {
        return;
    }
    let blocked = (visited | !allowed) & !(1 << last);
    let reach = reachable(g, last, blocked);
    let bound = len + (reach & !visited).count_ones() as usize;
    if bound <= *best {
        return;
    }
    // the cycle must eventually close back into the anchor's neighborhood
    if g.neighbors(anchor) & (reach | 1 << last) == 0 {
        return;
    }
    for u in bits(candidates) {
        cycle_dfs(g, anchor, u, visited | 1 << u, len + 1, allowed, best);
    }
}
