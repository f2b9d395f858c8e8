//! Independent oracles for the integration and acceptance suites. Everything
//! here deliberately avoids the library's search/enumeration code paths:
//! plain recursion instead of bitmask DP, labeled exhaustion instead of
//! canonical augmentation, subset removal instead of max-flow.

#![allow(dead_code)]

use std::collections::HashSet;

use rayon::prelude::*;

use circumlab::enumerate::canonical_form;
use circumlab::graph::Graph;
use circumlab::solver::PathSeq;
use circumlab::vine::{validate_vine, Vine, VinePath};

/// Deterministic splitmix64; good enough to synthesize reproducible random
/// graphs without pulling in an RNG crate.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// A random connected graph on `n` vertices (resamples until connected).
pub fn random_connected_graph(rng: &mut SplitMix64, n: usize) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.chance(2, 5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

// ---------------------------------------------------------------------------
// Plain recursive longest path / cycle (third opinion for small graphs)
// ---------------------------------------------------------------------------

pub fn brute_longest_path_order(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 1;
    let mut visited = vec![false; n];
    for start in 0..n {
        visited[start] = true;
        brute_path(g, start, &mut visited, 1, &mut best);
        visited[start] = false;
    }
    best
}

fn brute_path(g: &Graph, last: usize, visited: &mut [bool], len: usize, best: &mut usize) {
    if len > *best {
        *best = len;
    }
    for u in 0..g.order() {
        if !visited[u] && g.has_edge(last, u) {
            visited[u] = true;
            brute_path(g, u, visited, len + 1, best);
            visited[u] = false;
        }
    }
}

pub fn brute_longest_cycle_order(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = 0;
    let mut visited = vec![false; n];
    for start in 0..n {
        visited[start] = true;
        brute_cycle(g, start, start, &mut visited, 1, &mut best);
        visited[start] = false;
    }
    (best >= 3).then_some(best)
}

fn brute_cycle(
    g: &Graph,
    start: usize,
    last: usize,
    visited: &mut [bool],
    len: usize,
    best: &mut usize,
) {
    if len >= 3 && g.has_edge(last, start) && len > *best {
        *best = len;
    }
    for u in start + 1..g.order() {
        if !visited[u] && g.has_edge(last, u) {
            visited[u] = true;
            brute_cycle(g, start, u, visited, len + 1, best);
            visited[u] = false;
        }
    }
}

// ---------------------------------------------------------------------------
// Exhaustive vertex-cut connectivity
// ---------------------------------------------------------------------------

/// Vertex connectivity by trying every removal set, smallest first.
pub fn brute_vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    for k in 0..n - 1 {
        let mut sets = SubsetIter::new(n, k);
        while let Some(removed) = sets.next() {
            if disconnects(g, removed) {
                return k;
            }
        }
    }
    n - 1
}

fn disconnects(g: &Graph, removed: u64) -> bool {
    let remaining = g.full_mask() & !removed;
    let count = remaining.count_ones();
    if count < 2 {
        return false;
    }
    let start = remaining.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= g.neighbors(v) & remaining & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen != remaining
}

/// Iterates all `k`-subsets of `0..n` as bitmasks.
struct SubsetIter {
    n: usize,
    current: Option<u64>,
}

impl SubsetIter {
    fn new(n: usize, k: usize) -> Self {
        let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
        SubsetIter {
            n,
            current: (k <= n).then_some(first),
        }
    }

    fn next(&mut self) -> Option<u64> {
        let value = self.current?;
        if value == 0 {
            self.current = None;
            return Some(0);
        }
        // Gosper's hack
        let c = value & value.wrapping_neg();
        let r = value + c;
        let next = (((r ^ value) >> 2) / c) | r;
        self.current = (next < 1u64 << self.n).then_some(next);
        Some(value)
    }
}

// ---------------------------------------------------------------------------
// Naive labeled enumeration with canonical dedup
// ---------------------------------------------------------------------------

/// Number of isomorphism classes of 2-connected graphs on `n` vertices,
/// computed the blunt way: every labeled graph on `n` vertices, filtered,
/// deduplicated by canonical form.
pub fn naive_two_connected_class_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    let keys: HashSet<_> = (0..total)
        .into_par_iter()
        .filter_map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if edges.len() < n {
                return None; // 2-connected needs at least n edges
            }
            let g = Graph::new(n, &edges).unwrap();
            if g.min_degree() < 2 || !g.is_two_connected() {
                return None;
            }
            Some(canonical_form(&g))
        })
        .collect();
    keys.len()
}

// ---------------------------------------------------------------------------
// Generate-and-test vine enumeration
// ---------------------------------------------------------------------------

/// Is there any valid vine with exactly `m` paths on `host`? Enumerates every
/// anchor tuple and every assignment of distinct off-path interior vertices,
/// and asks the validator; shares no logic with the library's vine search.
pub fn brute_has_vine_of_size(g: &Graph, host: &PathSeq, m: usize) -> bool {
    let len = host.order();
    let off_path: Vec<usize> = (0..g.order())
        .filter(|&v| !host.vertices().contains(&v))
        .collect();
    let mut anchors: Vec<(usize, usize)> = Vec::with_capacity(m);
    brute_anchor_level(g, host, m, len, &off_path, &mut anchors)
}

fn brute_anchor_level(
    g: &Graph,
    host: &PathSeq,
    m: usize,
    len: usize,
    off_path: &[usize],
    anchors: &mut Vec<(usize, usize)>,
) -> bool {
    if anchors.len() == m {
        let mut interiors: Vec<Vec<usize>> = vec![Vec::new(); m];
        let mut used = vec![false; off_path.len()];
        return brute_interior_level(g, host, anchors, off_path, &mut interiors, &mut used, 0);
    }
    for x in 0..len {
        for y in x + 1..len {
            anchors.push((x, y));
            if brute_anchor_level(g, host, m, len, off_path, anchors) {
                anchors.pop();
                return true;
            }
            anchors.pop();
        }
    }
    false
}

fn brute_interior_level(
    g: &Graph,
    host: &PathSeq,
    anchors: &[(usize, usize)],
    off_path: &[usize],
    interiors: &mut Vec<Vec<usize>>,
    used: &mut Vec<bool>,
    path: usize,
) -> bool {
    if path == anchors.len() {
        let vine = Vine::new(
            anchors
                .iter()
                .zip(interiors.iter())
                .map(|(&(x, y), interior)| VinePath::new(x, y, interior.clone()))
                .collect(),
        );
        return validate_vine(g, host, &vine).is_ok();
    }
    // empty interior first, then every ordered selection of unused vertices
    if brute_interior_level(g, host, anchors, off_path, interiors, used, path + 1) {
        return true;
    }
    brute_extend_interior(g, host, anchors, off_path, interiors, used, path)
}

fn brute_extend_interior(
    g: &Graph,
    host: &PathSeq,
    anchors: &[(usize, usize)],
    off_path: &[usize],
    interiors: &mut Vec<Vec<usize>>,
    used: &mut Vec<bool>,
    path: usize,
) -> bool {
    for i in 0..off_path.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        interiors[path].push(off_path[i]);
        if brute_interior_level(g, host, anchors, off_path, interiors, used, path + 1)
            || brute_extend_interior(g, host, anchors, off_path, interiors, used, path)
        {
            interiors[path].pop();
            used[i] = false;
            return true;
        }
        interiors[path].pop();
        used[i] = false;
    }
    false
}

/// Independent graph6 decoder: returns `(n, edges)` or `None` on anything
/// malformed. Written against the format description, not against the
/// library's codec.
pub fn independent_graph6_decode(record: &str) -> Option<(usize, Vec<(usize, usize)>)> {
    let bytes = record.as_bytes();
    let (&size, payload) = bytes.split_first()?;
    if !(63..126).contains(&size) {
        return None;
    }
    let n = (size - 63) as usize;
    let needed_bits = n * (n - 1) / 2;
    if payload.len() != needed_bits.div_ceil(6) {
        return None;
    }
    let mut bit_list = Vec::with_capacity(payload.len() * 6);
    for &b in payload {
        if !(63..=126).contains(&b) {
            return None;
        }
        let value = b - 63;
        for shift in (0..6).rev() {
            bit_list.push(value >> shift & 1 == 1);
        }
    }
    if bit_list[needed_bits..].iter().any(|&b| b) {
        return None;
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit_list[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Some((n, edges))
}
