//! Exact longest-path and longest-cycle solvers with explicit witnesses.
//!
//! Two engines compute the orders: [`subset_dp`] (the oracle) and
//! [`branch_bound`] (the scaling path). The public functions dispatch on
//! graph order and then reconstruct the lexicographically least witness, so
//! reports are reproducible run to run.

pub mod branch_bound;
pub mod subset_dp;

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bits, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("graph is acyclic: circumference is undefined")]
    Acyclic,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("witness sequence is empty")]
    Empty,
    #[error("cycle witness has {0} vertices, need at least 3")]
    TooShort(usize),
    #[error("witness vertex {0} out of range")]
    OutOfRange(usize),
    #[error("witness repeats vertex {0}")]
    Repeated(usize),
    #[error("witness step {0}-{1} is not an edge")]
    NotAdjacent(usize, usize),
}

/// An ordered sequence of distinct vertices with every consecutive pair
/// adjacent in the host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PathSeq(Vec<usize>);

impl PathSeq {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, WitnessError> {
        validate_sequence(g, &vertices, false)?;
        Ok(PathSeq(vertices))
    }

    pub(crate) fn new_unchecked(vertices: Vec<usize>) -> Self {
        PathSeq(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    /// Vertex at path position `pos`.
    pub fn at(&self, pos: usize) -> usize {
        self.0[pos]
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        *self.0.last().expect("paths are nonempty")
    }

    /// Bitmask of the vertices on the path.
    pub fn vertex_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        validate_sequence(g, &self.0, false).is_ok()
    }
}

/// An ordered sequence of at least three distinct vertices, consecutive
/// vertices adjacent, last adjacent to first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CycleSeq(Vec<usize>);

impl CycleSeq {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, WitnessError> {
        validate_sequence(g, &vertices, true)?;
        Ok(CycleSeq(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn vertex_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        validate_sequence(g, &self.0, true).is_ok()
    }
}

fn validate_sequence(g: &Graph, vertices: &[usize], closed: bool) -> Result<(), WitnessError> {
    if vertices.is_empty() {
        return Err(WitnessError::Empty);
    }
    if closed && vertices.len() < 3 {
        return Err(WitnessError::TooShort(vertices.len()));
    }
    let mut seen = 0u64;
    for &v in vertices {
        if v >= g.order() {
            return Err(WitnessError::OutOfRange(v));
        }
        if seen >> v & 1 != 0 {
            return Err(WitnessError::Repeated(v));
        }
        seen |= 1 << v;
    }
    for pair in vertices.windows(2) {
        if !g.has_edge(pair[0], pair[1]) {
            return Err(WitnessError::NotAdjacent(pair[0], pair[1]));
        }
    }
    if closed {
        let (first, last) = (vertices[0], *vertices.last().unwrap());
        if !g.has_edge(last, first) {
            return Err(WitnessError::NotAdjacent(last, first));
        }
    }
    Ok(())
}

fn path_order_of(g: &Graph) -> usize {
    if g.order() <= subset_dp::MAX_DP_ORDER {
        subset_dp::longest_path_order(g)
    } else {
        branch_bound::longest_path_order(g)
    }
}

fn cycle_order_of(g: &Graph) -> Option<usize> {
    if g.order() <= subset_dp::MAX_DP_ORDER {
        subset_dp::longest_cycle_order(g)
    } else {
        branch_bound::longest_cycle_order(g)
    }
}

/// Order of a longest path, with the lexicographically least witness among
/// all maximum-order paths.
pub fn longest_path(g: &Graph) -> (usize, PathSeq) {
    let target = path_order_of(g);
    let witness = lex_min_path(g, target);
    (target, witness)
}

/// Circumference with the lexicographically least maximum cycle, or
/// [`SolverError::Acyclic`] when the graph has no cycle.
pub fn circumference(g: &Graph) -> Result<(usize, CycleSeq), SolverError> {
    let target = cycle_order_of(g).ok_or(SolverError::Acyclic)?;
    let witness = lex_min_cycle(g, target);
    Ok((target, witness))
}

/// `true` iff the circumference equals the graph order.
pub fn is_hamiltonian(g: &Graph) -> bool {
    cycle_order_of(g) == Some(g.order())
}

/// Up to `cap` maximum-order paths, in lexicographic order of their vertex
/// sequences. Reversals count as distinct witnesses.
pub fn enumerate_longest_paths(g: &Graph, cap: usize) -> Vec<PathSeq> {
    assert!(cap >= 1, "witness cap must be at least 1");
    let target = path_order_of(g);
    let mut ext = Extender::new(g);
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(target);
    for start in 0..g.order() {
        if out.len() >= cap {
            break;
        }
        prefix.push(start);
        enumerate_dfs(g, &mut ext, &mut prefix, 1 << start, target, cap, &mut out);
        prefix.pop();
    }
    out
}

fn enumerate_dfs(
    g: &Graph,
    ext: &mut Extender,
    prefix: &mut Vec<usize>,
    mask: u64,
    target: usize,
    cap: usize,
    out: &mut Vec<PathSeq>,
) {
    if prefix.len() == target {
        out.push(PathSeq::new_unchecked(prefix.clone()));
        return;
    }
    let last = *prefix.last().unwrap();
    let needed = target - prefix.len();
    for u in bits(g.neighbors(last) & !mask) {
        if out.len() >= cap {
            return;
        }
        if ext.can_extend(u, mask | 1 << u, needed - 1) {
            prefix.push(u);
            enumerate_dfs(g, ext, prefix, mask | 1 << u, target, cap, out);
            prefix.pop();
        }
    }
}

/// Memoized feasibility test: can a simple path be extended from `v` by at
/// least `needed` further vertices? Only failures are cached (keyed with the
/// smallest demand that failed), which keeps dense graphs cheap.
struct Extender<'g> {
    g: &'g Graph,
    failed_at: HashMap<(usize, u64), usize>,
}

impl<'g> Extender<'g> {
    fn new(g: &'g Graph) -> Self {
        Extender {
            g,
            failed_at: HashMap::new(),
        }
    }

    /// `mask` must already contain `v`.
    fn can_extend(&mut self, v: usize, mask: u64, needed: usize) -> bool {
        if needed == 0 {
            return true;
        }
        if let Some(&bound) = self.failed_at.get(&(v, mask)) {
            if needed >= bound {
                return false;
            }
        }
        for u in bits(self.g.neighbors(v) & !mask) {
            if self.can_extend(u, mask | 1 << u, needed - 1) {
                return true;
            }
        }
        let entry = self.failed_at.entry((v, mask)).or_insert(needed);
        *entry = (*entry).min(needed);
        false
    }
}

fn lex_min_path(g: &Graph, target: usize) -> PathSeq {
    let mut ext = Extender::new(g);
    for start in 0..g.order() {
        if !ext.can_extend(start, 1 << start, target - 1) {
            continue;
        }
        let mut seq = vec![start];
        let mut mask = 1u64 << start;
        while seq.len() < target {
            let needed = target - seq.len();
            let last = *seq.last().unwrap();
            let next = bits(g.neighbors(last) & !mask)
                .find(|&u| ext.can_extend(u, mask | 1 << u, needed - 1))
                .expect("feasible prefix always extends");
            seq.push(next);
            mask |= 1 << next;
        }
        return PathSeq::new_unchecked(seq);
    }
    unreachable!("some vertex starts a longest path")
}

fn lex_min_cycle(g: &Graph, target: usize) -> CycleSeq {
    debug_assert!(target >= 3);
    let mut ext = Extender::new(g);
    let mut seq = Vec::with_capacity(target);
    for start in 0..g.order() {
        seq.push(start);
        if cycle_dfs_lex(g, &mut ext, &mut seq, 1 << start, target) {
            return CycleSeq(seq);
        }
        seq.pop();
    }
    unreachable!("a cycle of the computed circumference exists")
}

fn cycle_dfs_lex(
    g: &Graph,
    ext: &mut Extender,
    seq: &mut Vec<usize>,
    mask: u64,
    target: usize,
) -> bool {
    let start = seq[0];
    let last = *seq.last().unwrap();
    if seq.len() == target {
        return g.has_edge(last, start);
    }
    // the closing vertex must be an unvisited neighbor of the start
    if g.neighbors(start) & !mask == 0 {
        return false;
    }
    let needed = target - seq.len();
    for u in bits(g.neighbors(last) & !mask) {
        if !ext.can_extend(u, mask | 1 << u, needed - 1) {
            continue;
        }
        seq.push(u);
        if cycle_dfs_lex(g, ext, seq, mask | 1 << u, target) {
            return true;
        }
        seq.pop();
    }
    false
}
