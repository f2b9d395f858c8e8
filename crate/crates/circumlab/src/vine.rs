//! Vines: ordered families of internally disjoint paths anchored on a host
//! path, with interleaved anchors. Provides a validator that names the first
//! violated clause, and exhaustive searches for a minimum-size vine and a
//! first-found vine.
//!
//! Anchors are stored as host-path positions, not vertex ids: the interleaving
//! conditions are order relations along the path, so they become plain index
//! comparisons.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bits, Graph};
use crate::solver::PathSeq;

/// One path of a vine: anchored at host positions `start_pos < end_pos`,
/// running through `interior` off-path vertices (empty means a single edge).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct VinePath {
    #[serde(rename = "x_pos")]
    pub start_pos: usize,
    #[serde(rename = "y_pos")]
    pub end_pos: usize,
    pub interior: Vec<usize>,
}

impl VinePath {
    pub fn new(start_pos: usize, end_pos: usize, interior: Vec<usize>) -> Self {
        VinePath {
            start_pos,
            end_pos,
            interior,
        }
    }

    /// Number of vertices on the vine path, anchors included.
    pub fn order(&self) -> usize {
        self.interior.len() + 2
    }
}

/// An ordered list of vine paths. See [`validate_vine`] for the exact
/// conditions; `size()` is the number of paths, usually written `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Vine {
    pub paths: Vec<VinePath>,
}

impl Vine {
    pub fn new(paths: Vec<VinePath>) -> Self {
        Vine { paths }
    }

    pub fn size(&self) -> usize {
        self.paths.len()
    }
}

/// First violated clause of the vine conditions, in checking order: anchor
/// sanity per path, interleaving along the host, interior disjointness,
/// adjacency of each vine path.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VineViolation {
    #[error("vine has no paths")]
    Empty,
    #[error("path {path}: anchor position out of host range")]
    AnchorOutOfRange { path: usize },
    #[error("path {path}: start anchor not strictly before end anchor")]
    AnchorOrder { path: usize },
    #[error("first path must start at the host path's first position")]
    FirstAnchorNotPathStart,
    #[error("last path must end at the host path's last position")]
    LastAnchorNotPathEnd,
    #[error("path {path}: start must come strictly after the previous start")]
    StartNotAfterPreviousStart { path: usize },
    #[error("path {path}: start must come strictly before the previous end")]
    StartNotBeforePreviousEnd { path: usize },
    #[error("path {path}: start must not precede the end of the path two back")]
    StartBeforeEarlierEnd { path: usize },
    #[error("path {path}: end must come strictly after the previous end")]
    EndNotAfterPreviousEnd { path: usize },
    #[error("path {path}: interior vertex {vertex} lies on the host path")]
    InteriorOnHost { path: usize, vertex: usize },
    #[error("interior vertex {vertex} used by more than one path")]
    InteriorShared { vertex: usize },
    #[error("path {path}: interior vertex {vertex} out of range")]
    InteriorOutOfRange { path: usize, vertex: usize },
    #[error("path {path}: step {from}-{to} is not an edge")]
    NotAPath { path: usize, from: usize, to: usize },
}

/// Checks every vine condition against `host` (a valid path in `g`); on
/// failure reports the first violated clause in checking order.
pub fn validate_vine(g: &Graph, host: &PathSeq, vine: &Vine) -> Result<(), VineViolation> {
    let m = vine.size();
    if m == 0 {
        return Err(VineViolation::Empty);
    }
    let len = host.order();

    for (i, path) in vine.paths.iter().enumerate() {
        if path.start_pos >= len || path.end_pos >= len {
            return Err(VineViolation::AnchorOutOfRange { path: i });
        }
        if path.start_pos >= path.end_pos {
            return Err(VineViolation::AnchorOrder { path: i });
        }
    }
    if vine.paths[0].start_pos != 0 {
        return Err(VineViolation::FirstAnchorNotPathStart);
    }
    // walk the anchor chain x1 < x2 < y1 <= x3 < y2 <= x4 < ... <= xm <
    // y(m-1) < ym left to right, so the first violated relation is named
    let x = |i: usize| vine.paths[i].start_pos;
    let y = |i: usize| vine.paths[i].end_pos;
    if m >= 2 {
        if x(1) <= x(0) {
            return Err(VineViolation::StartNotAfterPreviousStart { path: 1 });
        }
        for k in 0..m - 1 {
            if x(k + 1) >= y(k) {
                return Err(VineViolation::StartNotBeforePreviousEnd { path: k + 1 });
            }
            if k + 2 < m && x(k + 2) < y(k) {
                return Err(VineViolation::StartBeforeEarlierEnd { path: k + 2 });
            }
        }
        if y(m - 1) <= y(m - 2) {
            return Err(VineViolation::EndNotAfterPreviousEnd { path: m - 1 });
        }
    }
    if y(m - 1) != len - 1 {
        return Err(VineViolation::LastAnchorNotPathEnd);
    }
    // interiors: off-host, pairwise disjoint
    let host_mask = host.vertex_mask();
    let mut used = 0u64;
    for (i, path) in vine.paths.iter().enumerate() {
        for &v in &path.interior {
            if v >= g.order() {
                return Err(VineViolation::InteriorOutOfRange { path: i, vertex: v });
            }
            if host_mask >> v & 1 != 0 {
                return Err(VineViolation::InteriorOnHost { path: i, vertex: v });
            }
            if used >> v & 1 != 0 {
                return Err(VineViolation::InteriorShared { vertex: v });
            }
            used |= 1 << v;
        }
    }
    // adjacency along each vine path
    for (i, path) in vine.paths.iter().enumerate() {
        let mut prev = host.at(path.start_pos);
        for &v in path
            .interior
            .iter()
            .chain(std::iter::once(&host.at(path.end_pos)))
        {
            if !g.has_edge(prev, v) {
                return Err(VineViolation::NotAPath {
                    path: i,
                    from: prev,
                    to: v,
                });
            }
            prev = v;
        }
    }
    Ok(())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VineError {
    /// No vine exists on this host path. On a 2-connected graph with a valid
    /// host this signals a caller error, never an expected outcome.
    #[error("no vine exists on the host path")]
    NoVineFound,
}

/// A valid vine of minimum size, found by iterative deepening on `m` over an
/// exhaustive anchor/connector search. Deterministic: the lexicographically
/// least vine among those of minimum size.
pub fn find_minimum_vine(g: &Graph, host: &PathSeq) -> Result<Vine, VineError> {
    for m in 1..=host.order() {
        if let Some(vine) = search_with_size(g, host, m) {
            debug_assert_eq!(validate_vine(g, host, &vine), Ok(()));
            return Ok(vine);
        }
    }
    Err(VineError::NoVineFound)
}

/// First vine found by greedy left-to-right extension with backtracking: each
/// step places the next path, preferring end anchors near the far end of the
/// host, and stops as soon as a path reaches it. Size is not necessarily
/// minimal.
pub fn find_any_vine(g: &Graph, host: &PathSeq) -> Result<Vine, VineError> {
    let mut chosen: Vec<VinePath> = Vec::new();
    let off_host = g.full_mask() & !host.vertex_mask();
    match greedy_level(g, host, &mut chosen, off_host) {
        Some(vine) => {
            debug_assert_eq!(validate_vine(g, host, &vine), Ok(()));
            Ok(vine)
        }
        None => Err(VineError::NoVineFound),
    }
}

/// Exhaustive lexicographic search for a vine with exactly `m` paths.
fn search_with_size(g: &Graph, host: &PathSeq, m: usize) -> Option<Vine> {
    let mut chosen: Vec<VinePath> = Vec::with_capacity(m);
    let off_host = g.full_mask() & !host.vertex_mask();
    search_level(g, host, m, &mut chosen, off_host)
}

/// The lexicographically least vine with exactly `size` paths, if any.
pub fn find_vine_of_size(g: &Graph, host: &PathSeq, size: usize) -> Option<Vine> {
    if size == 0 {
        return None;
    }
    let vine = search_with_size(g, host, size)?;
    debug_assert_eq!(validate_vine(g, host, &vine), Ok(()));
    Some(vine)
}

/// Start-anchor range for the path at index `i`, given the previously placed
/// paths: the interleaving conditions pin `x_i` between the end two paths
/// back (inclusive) and the previous end (exclusive).
fn start_anchor_range(chosen: &[VinePath]) -> Option<(usize, usize)> {
    let i = chosen.len();
    if i == 0 {
        return Some((0, 0));
    }
    let prev_end = chosen[i - 1].end_pos;
    let mut lo = chosen[i - 1].start_pos + 1;
    if i >= 2 {
        lo = lo.max(chosen[i - 2].end_pos);
    }
    if lo >= prev_end {
        return None;
    }
    Some((lo, prev_end - 1))
}

fn search_level(
    g: &Graph,
    host: &PathSeq,
    m: usize,
    chosen: &mut Vec<VinePath>,
    avail: u64,
) -> Option<Vine> {
    let len = host.order();
    let i = chosen.len();
    if i == m {
        return Some(Vine::new(chosen.clone()));
    }
    let (x_lo, x_hi) = start_anchor_range(chosen)?;
    let last = i + 1 == m;
    for x in x_lo..=x_hi {
        let y_min = if i == 0 {
            x + 1
        } else {
            (chosen[i - 1].end_pos + 1).max(x + 1)
        };
        let ys: Vec<usize> = if last {
            if len > y_min {
                vec![len - 1]
            } else {
                continue;
            }
        } else {
            (y_min..len).collect()
        };
        for y in ys {
            let mut result = None;
            enumerate_connectors(
                g,
                host.at(x),
                host.at(y),
                avail,
                &mut Vec::new(),
                &mut |int| {
                    let used: u64 = int.iter().fold(0, |mask, &v| mask | 1 << v);
                    chosen.push(VinePath::new(x, y, int.to_vec()));
                    result = search_level(g, host, m, chosen, avail & !used);
                    chosen.pop();
                    result.is_some()
                },
            );
            if result.is_some() {
                return result;
            }
        }
    }
    None
}

fn greedy_level(g: &Graph, host: &PathSeq, chosen: &mut Vec<VinePath>, avail: u64) -> Option<Vine> {
    let len = host.order();
    if let Some(path) = chosen.last() {
        if path.end_pos == len - 1 {
            return Some(Vine::new(chosen.clone()));
        }
    }
    let (x_lo, x_hi) = start_anchor_range(chosen)?;
    let i = chosen.len();
    for x in x_lo..=x_hi {
        let y_min = if i == 0 {
            x + 1
        } else {
            (chosen[i - 1].end_pos + 1).max(x + 1)
        };
        for y in (y_min..len).rev() {
            let mut result = None;
            enumerate_connectors(
                g,
                host.at(x),
                host.at(y),
                avail,
                &mut Vec::new(),
                &mut |int| {
                    let used: u64 = int.iter().fold(0, |mask, &v| mask | 1 << v);
                    chosen.push(VinePath::new(x, y, int.to_vec()));
                    result = greedy_level(g, host, chosen, avail & !used);
                    chosen.pop();
                    result.is_some()
                },
            );
            if result.is_some() {
                return result;
            }
        }
    }
    None
}

/// Enumerates interior vertex sequences of simple `from`-`to` paths through
/// `avail`, in lexicographic order (the empty connector first when the
/// direct edge exists). `visit` returns `true` to stop.
fn enumerate_connectors(
    g: &Graph,
    from: usize,
    to: usize,
    avail: u64,
    prefix: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let tail = if prefix.is_empty() {
        from
    } else {
        *prefix.last().unwrap()
    };
    if g.has_edge(tail, to) && visit(prefix) {
        return true;
    }
    for v in bits(g.neighbors(tail) & avail) {
        prefix.push(v);
        if enumerate_connectors(g, from, to, avail & !(1 << v), prefix, visit) {
            return true;
        }
        prefix.pop();
    }
    false
}
