//! Isomorphism-reduced generation of small graphs.
//!
//! Canonical forms are lexicographically minimal adjacency bit strings,
//! found by branch-and-bound over vertex placements. Generation grows graphs
//! one vertex at a time from smaller isomorphism classes (every connected
//! graph has a non-cut vertex, and deleting any vertex of a 2-connected graph
//! leaves a connected one, so the chain is complete).

use thiserror::Error;

use crate::graph::{bits, mask_below, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("enumeration supports 3 <= n <= 8, got {0}")]
    UnsupportedOrder(usize),
}

/// Isomorphism-invariant key: the minimal upper-triangle adjacency bit string
/// over all vertex orderings, packed into bytes (pair order (0,1), (0,2),
/// (1,2), (0,3), ...; first pair in the most significant position).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    n: usize,
    bits: u128,
}

impl CanonicalKey {
    pub fn as_bytes(&self) -> [u8; 16] {
        self.bits.to_be_bytes()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Rebuilds the canonically labeled graph this key encodes.
    pub fn to_graph(&self) -> Graph {
        let n = self.n;
        let total = n * (n - 1) / 2;
        let mut edges = Vec::new();
        let mut k = 0usize;
        for v in 1..n {
            for u in 0..v {
                if self.bits >> (total - 1 - k) & 1 != 0 {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::new(n, &edges).expect("canonical key encodes a valid graph")
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalKey {
    let n = g.order();
    assert!(n <= 16, "canonical form supports n <= 16, got {n}");
    let total = n * (n - 1) / 2;
    let mut best = u128::MAX;
    let mut placed: Vec<usize> = Vec::with_capacity(n);
    place_next(g, &mut placed, 0, total, &mut best);
    CanonicalKey { n, bits: best }
}

/// Extends a partial placement by one vertex. `prefix` holds the bits of all
/// pairs among placed vertices, left-aligned against `total` bits.
///
/// The new bits of this level outrank every later bit, so only candidates
/// attaining the minimal new-bit pattern can reach the global minimum; the
/// search branches over those ties alone, and cuts subtrees whose decided
/// prefix already exceeds the incumbent.
fn place_next(g: &Graph, placed: &mut Vec<usize>, prefix: u128, total: usize, best: &mut u128) {
    let n = g.order();
    let k = placed.len();
    if k == n {
        if prefix < *best {
            *best = prefix;
        }
        return;
    }
    let mut used = 0u64;
    for &v in placed.iter() {
        used |= 1 << v;
    }
    let mut min_bits = u128::MAX;
    let mut ties: Vec<usize> = Vec::new();
    for cand in bits(g.full_mask() & !used) {
        let mut new_bits = 0u128;
        for (i, &v) in placed.iter().enumerate() {
            if g.has_edge(v, cand) {
                new_bits |= 1 << (k - 1 - i);
            }
        }
        if new_bits < min_bits {
            min_bits = new_bits;
            ties.clear();
        }
        if new_bits == min_bits {
            ties.push(cand);
        }
    }
    let decided = k * (k + 1) / 2; // pairs among the k+1 placed positions
    let shift = total - decided;
    let next_prefix = prefix | (min_bits << shift);
    if next_prefix >> shift > *best >> shift {
        return;
    }
    for cand in ties {
        placed.push(cand);
        place_next(g, placed, next_prefix, total, best);
        placed.pop();
    }
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices (1 <= n <= 8), sorted by canonical key.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n == 0 || n > 8 {
        return Err(EnumerateError::UnsupportedOrder(n));
    }
    let mut keys: Vec<CanonicalKey> = vec![canonical_form(&Graph::empty(1).unwrap())];
    for k in 2..=n {
        keys = grow(&keys, k, 1, |_| true);
    }
    Ok(keys.into_iter().map(|key| key.to_graph()).collect())
}

/// One representative per isomorphism class of 2-connected graphs on `n`
/// vertices (3 <= n <= 8), grown from the connected classes one order down.
pub fn enumerate_two_connected(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if !(3..=8).contains(&n) {
        return Err(EnumerateError::UnsupportedOrder(n));
    }
    let parents: Vec<CanonicalKey> = enumerate_connected(n - 1)?
        .iter()
        .map(canonical_form)
        .collect();
    let keys = grow(&parents, n, 2, Graph::is_two_connected);
    Ok(keys.into_iter().map(|key| key.to_graph()).collect())
}

/// All children obtained by adding a vertex joined to at least `min_attach`
/// parent vertices, filtered by `keep`, deduplicated canonically.
fn grow(
    parents: &[CanonicalKey],
    n: usize,
    min_attach: u32,
    keep: fn(&Graph) -> bool,
) -> Vec<CanonicalKey> {
    use std::collections::BTreeSet;
    let mut out: BTreeSet<CanonicalKey> = BTreeSet::new();
    for parent_key in parents {
        let parent = parent_key.to_graph();
        let mut edges = parent.edges();
        let base_len = edges.len();
        for attach in 1..=mask_below(n - 1) {
            if attach.count_ones() < min_attach {
                continue;
            }
            edges.truncate(base_len);
            edges.extend(bits(attach).map(|v| (v, n - 1)));
            let child = Graph::new(n, &edges).expect("child edges are in range");
            if keep(&child) {
                out.insert(canonical_form(&child));
            }
        }
    }
    out.into_iter().collect()
}
