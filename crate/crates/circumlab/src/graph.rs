//! Immutable simple undirected graphs over dense vertex ids `0..n`, stored as
//! per-vertex neighbor bitmasks. Everything downstream (solvers, vines,
//! enumeration) works on this one representation.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Largest supported order. One graph6 size byte covers `n <= 62`, and a
/// neighbor set then always fits in a single `u64`.
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} outside supported range 1..={MAX_ORDER}")]
    UnsupportedOrder(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
}

/// Iterates the set bits of a mask in ascending order.
pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// An immutable simple undirected graph.
///
/// Invariants, enforced at construction: `1 <= n <= 62`, adjacency is
/// symmetric, there are no self-loops, and no set bit is `>= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph on `n` vertices with the given edges.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u,
                    order: n,
                });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::UnsupportedOrder(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph directly from adjacency masks, validating all invariants.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::UnsupportedOrder(n));
        }
        let full = mask_below(n);
        for (v, &m) in adj.iter().enumerate() {
            if m & !full != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: (m & !full).trailing_zeros() as usize,
                    order: n,
                });
            }
            if m >> v & 1 != 0 {
                return Err(GraphError::SelfLoop(v));
            }
        }
        for u in 0..n {
            for v in bits(adj[u]) {
                if adj[v] >> u & 1 == 0 {
                    // asymmetric input; repair is not our job
                    return Err(GraphError::VertexOutOfRange {
                        vertex: v,
                        order: n,
                    });
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        let full = mask_below(n);
        for v in 0..n {
            g.adj[v] = full & !(1 << v);
        }
        Ok(g)
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::UnsupportedOrder(n));
        }
        let edges: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::new(n, &edges)
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        Self::new(n, &edges)
    }

    /// Complete bipartite graph with parts `{0..a}` and `{a..a+b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Self::new(a + b, &edges)
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner 5-star 5..9, spokes i-(i+5).
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Self::new(10, &edges).expect("petersen construction is valid")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Neighbor set of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors_iter(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !mask_below(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Mask with all `n` vertex bits set.
    #[inline]
    pub fn full_mask(&self) -> u64 {
        mask_below(self.n)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Set of vertices reachable from `start`, as a bitmask.
    pub fn component_mask(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v] & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_mask(0) == self.full_mask()
    }

    /// Articulation vertices, ascending. Errors on disconnected input.
    pub fn cut_vertices(&self) -> Result<Vec<usize>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let n = self.n;
        let mut order = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut is_cut = vec![false; n];
        let mut counter = 0usize;
        // explicit stack so deep paths on 62 vertices cannot overflow
        // (depth 62 would actually be fine, but iterative is just as short)
        self.cut_dfs(
            0,
            usize::MAX,
            &mut order,
            &mut low,
            &mut is_cut,
            &mut counter,
        );
        Ok((0..n).filter(|&v| is_cut[v]).collect())
    }

    fn cut_dfs(
        &self,
        v: usize,
        parent: usize,
        order: &mut [usize],
        low: &mut [usize],
        is_cut: &mut [bool],
        counter: &mut usize,
    ) {
        order[v] = *counter;
        low[v] = *counter;
        *counter += 1;
        let mut child_count = 0usize;
        for u in bits(self.adj[v]) {
            if order[u] == usize::MAX {
                child_count += 1;
                self.cut_dfs(u, v, order, low, is_cut, counter);
                low[v] = low[v].min(low[u]);
                if parent != usize::MAX && low[u] >= order[v] {
                    is_cut[v] = true;
                }
            } else if u != parent {
                low[v] = low[v].min(order[u]);
            }
        }
        if parent == usize::MAX && child_count >= 2 {
            is_cut[v] = true;
        }
    }

    /// `connected && n >= 3 && no articulation vertex`.
    pub fn is_two_connected(&self) -> bool {
        self.n >= 3
            && match self.cut_vertices() {
                Ok(cuts) => cuts.is_empty(),
                Err(_) => false,
            }
    }

    /// Vertex connectivity. `n - 1` for complete graphs, 0 for disconnected
    /// graphs and `n = 1`. Computed as the minimum over non-adjacent pairs of
    /// the maximum number of internally disjoint paths (unit-capacity max-flow
    /// on the vertex-split digraph).
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.n;
        if n <= 1 {
            return 0;
        }
        if self.edge_count() == n * (n - 1) / 2 {
            return n - 1;
        }
        let mut kappa = n - 1;
        for s in 0..n {
            for t in s + 1..n {
                if !self.has_edge(s, t) {
                    kappa = kappa.min(self.local_connectivity(s, t));
                    if kappa == 0 {
                        return 0;
                    }
                }
            }
        }
        kappa
    }

    /// Maximum number of internally vertex-disjoint `s`-`t` paths for a
    /// non-adjacent pair, via augmenting paths on the split digraph:
    /// node `2v` is "v-in", node `2v+1` is "v-out".
    fn local_connectivity(&self, s: usize, t: usize) -> usize {
        debug_assert!(!self.has_edge(s, t));
        let mut net = FlowNetwork::new(2 * self.n);
        for v in 0..self.n {
            net.add_edge(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in self.edges() {
            net.add_edge(2 * u + 1, 2 * v, 1);
            net.add_edge(2 * v + 1, 2 * u, 1);
        }
        net.max_flow(2 * s + 1, 2 * t, self.n)
    }

    pub fn invariants(&self) -> GraphInvariants {
        GraphInvariants {
            n: self.n,
            delta: self.min_degree(),
            kappa: self.vertex_connectivity(),
            connected: self.is_connected(),
            two_connected: self.is_two_connected(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[inline]
pub(crate) fn mask_below(n: usize) -> u64 {
    debug_assert!(n <= 63);
    (1u64 << n) - 1
}

/// Basic numeric invariants of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub n: usize,
    pub delta: usize,
    pub kappa: usize,
    pub connected: bool,
    pub two_connected: bool,
}

/// Minimal unit-capacity max-flow (BFS augmenting paths). Enough for
/// desk-scale connectivity queries; flow values are bounded by `n`.
struct FlowNetwork {
    // per node: list of edge indices
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: i32) {
        let id = self.to.len();
        self.to.push(to);
        self.cap.push(cap);
        self.head[from].push(id);
        self.to.push(from);
        self.cap.push(0);
        self.head[to].push(id + 1);
    }

    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0usize;
        while flow < limit {
            // BFS for an augmenting path of residual edges
            let mut prev_edge = vec![usize::MAX; self.head.len()];
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(source);
            prev_edge[source] = usize::MAX - 1;
            while let Some(v) = queue.pop_front() {
                if v == sink {
                    break;
                }
                for &e in &self.head[v] {
                    let u = self.to[e];
                    if self.cap[e] > 0 && prev_edge[u] == usize::MAX {
                        prev_edge[u] = e;
                        queue.push_back(u);
                    }
                }
            }
            if prev_edge[sink] == usize::MAX {
                break;
            }
            let mut v = sink;
            while v != source {
                let e = prev_edge[v];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles_sharing(v: usize) -> Graph {
        // triangles 0-1-2 and 2-3-4 share vertex 2; relabel so shared is v
        assert_eq!(v, 2);
        Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            Graph::empty(0).unwrap_err(),
            GraphError::UnsupportedOrder(0)
        );
        assert_eq!(
            Graph::empty(63).unwrap_err(),
            GraphError::UnsupportedOrder(63)
        );
        assert_eq!(
            Graph::new(3, &[(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange {
                vertex: 3,
                order: 3
            }
        );
        assert_eq!(
            Graph::new(3, &[(1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(Graph::complete_bipartite(3, 4).unwrap().min_degree(), 3);
        assert_eq!(Graph::cycle(5).unwrap().min_degree(), 2);
        // K_2 joined with three disjoint edges: hubs 0,1; cliques {2,3},{4,5},{6,7}
        let g = crate::extremal::clique_join(2, 3, 2).0;
        assert_eq!(g.min_degree(), 3);
    }

    #[test]
    fn cut_vertices_examples() {
        assert_eq!(Graph::path(3).unwrap().cut_vertices().unwrap(), vec![1]);
        assert_eq!(
            Graph::cycle(5).unwrap().cut_vertices().unwrap(),
            Vec::<usize>::new()
        );
        assert_eq!(two_triangles_sharing(2).cut_vertices().unwrap(), vec![2]);
        let disconnected = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            disconnected.cut_vertices().unwrap_err(),
            GraphError::Disconnected
        );
    }

    #[test]
    fn vertex_connectivity_examples() {
        assert_eq!(Graph::complete(4).unwrap().vertex_connectivity(), 3);
        assert_eq!(Graph::cycle(5).unwrap().vertex_connectivity(), 2);
        assert_eq!(
            Graph::complete_bipartite(2, 3)
                .unwrap()
                .vertex_connectivity(),
            2
        );
        assert_eq!(Graph::path(4).unwrap().vertex_connectivity(), 1);
        let disconnected = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(disconnected.vertex_connectivity(), 0);
    }

    #[test]
    fn two_connected_routes_agree_on_small_graphs() {
        let samples = [
            Graph::cycle(5).unwrap(),
            Graph::path(5).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::complete_bipartite(2, 3).unwrap(),
            two_triangles_sharing(2),
            Graph::petersen(),
        ];
        for g in &samples {
            let via_cuts = g.is_two_connected();
            let via_kappa = g.order() >= 3 && g.vertex_connectivity() >= 2;
            assert_eq!(via_cuts, via_kappa, "{g:?}");
            assert!(g.min_degree() >= g.vertex_connectivity() || g.order() < 2);
        }
    }

    #[test]
    fn invariants_shape() {
        let inv = Graph::petersen().invariants();
        assert_eq!(inv.n, 10);
        assert_eq!(inv.delta, 3);
        assert_eq!(inv.kappa, 3);
        assert!(inv.connected && inv.two_connected);
    }
}
