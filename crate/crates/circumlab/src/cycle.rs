//! Assembles explicit cycles from vines and chord patterns and packages them
//! as machine-checkable certificates.
//!
//! Cycles are built as edge sets first, verified 2-regular and connected,
//! and only then sequenced. Degenerate segment boundaries (zero-length
//! segments, shared anchor vertices) are easy to mis-sequence; 2-regularity
//! of the union is the robust criterion.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bounds::{theorem1_bound_exact, Ratio};
use crate::graph::Graph;
use crate::solver::{enumerate_longest_paths, CycleSeq, PathSeq};
use crate::vine::{find_minimum_vine, Vine, VineError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("segment decomposition needs a vine of at least two paths")]
    VineTooSmall,
    #[error("edge union of {construction} is not a single cycle")]
    DegenerateUnion { construction: Construction },
    #[error(transparent)]
    NoVine(#[from] VineError),
}

/// Which construction produced a certificate cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    Q1,
    Q2,
    Q3,
    R(usize),
    CrossingChord,
    Raw,
}

impl std::fmt::Display for Construction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Construction::Q1 => write!(f, "Q1"),
            Construction::Q2 => write!(f, "Q2"),
            Construction::Q3 => write!(f, "Q3"),
            Construction::R(i) => write!(f, "R{i}"),
            Construction::CrossingChord => write!(f, "CrossingChord"),
            Construction::Raw => write!(f, "Raw"),
        }
    }
}

impl Serialize for Construction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A concrete cycle, the construction that produced it, and the bound it
/// witnesses. `length >= claimed_bound` always holds.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub cycle: CycleSeq,
    pub length: usize,
    pub construction: Construction,
    pub claimed_bound: Ratio,
    pub host_path: PathSeq,
    pub vine: Option<Vine>,
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Certificate", 5)?;
        s.serialize_field("cycle", self.cycle.vertices())?;
        s.serialize_field("construction", &self.construction)?;
        s.serialize_field("claimed_bound", &self.claimed_bound)?;
        s.serialize_field("host_path", self.host_path.vertices())?;
        s.serialize_field("vine", &self.vine)?;
        s.end()
    }
}

/// Host-path segments between consecutive vine anchors, as inclusive index
/// ranges, plus their edge counts. With anchors `x_i`, `y_i` (positions) and
/// `m` paths: `A_1 = [x_1, x_2]`, `A_m = [y_{m-1}, y_m]`,
/// `A_i = [y_{i-1}, x_{i+1}]` in between, and `B_i = [x_{i+1}, y_i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegmentDecomposition {
    pub a_segments: Vec<(usize, usize)>,
    pub b_segments: Vec<(usize, usize)>,
    /// Edge counts of the `A` segments (`a_i = |A_i| - 1`, possibly 0).
    pub a: Vec<usize>,
    /// Edge counts of the `B` segments (`b_i = |B_i| - 1 >= 1`).
    pub b: Vec<usize>,
}

pub fn decompose_segments(host: &PathSeq, vine: &Vine) -> Result<SegmentDecomposition, CycleError> {
    let m = vine.size();
    if m < 2 {
        return Err(CycleError::VineTooSmall);
    }
    let x = |i: usize| vine.paths[i].start_pos;
    let y = |i: usize| vine.paths[i].end_pos;
    let mut a_segments = Vec::with_capacity(m);
    a_segments.push((x(0), x(1)));
    for i in 1..m - 1 {
        a_segments.push((y(i - 1), x(i + 1)));
    }
    a_segments.push((y(m - 2), y(m - 1)));
    let b_segments: Vec<(usize, usize)> = (0..m - 1).map(|i| (x(i + 1), y(i))).collect();
    let a = a_segments.iter().map(|&(lo, hi)| hi - lo).collect();
    let b = b_segments.iter().map(|&(lo, hi)| hi - lo).collect();
    debug_assert!(y(m - 1) < host.order(), "vine anchors must lie on the host");
    Ok(SegmentDecomposition {
        a_segments,
        b_segments,
        a,
        b,
    })
}

/// Host edges inside an inclusive position range.
fn segment_edges(host: &PathSeq, range: (usize, usize), out: &mut Vec<(usize, usize)>) {
    for pos in range.0..range.1 {
        out.push((host.at(pos), host.at(pos + 1)));
    }
}

fn vine_path_edges(host: &PathSeq, vine: &Vine, i: usize, out: &mut Vec<(usize, usize)>) {
    let path = &vine.paths[i];
    let mut prev = host.at(path.start_pos);
    for &v in path
        .interior
        .iter()
        .chain(std::iter::once(&host.at(path.end_pos)))
    {
        out.push((prev, v));
        prev = v;
    }
}

/// Sequences an edge set into a cycle, requiring the union to be 2-regular,
/// duplicate-free and connected. The sequence starts at the smallest vertex
/// and moves toward its smaller neighbor.
fn cycle_from_edges(
    g: &Graph,
    edges: &[(usize, usize)],
    construction: Construction,
) -> Result<CycleSeq, CycleError> {
    let degenerate = || CycleError::DegenerateUnion { construction };
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for &(u, v) in edges {
        if u == v {
            return Err(degenerate());
        }
        incident[u].push(v);
        incident[v].push(u);
    }
    let mut on_cycle: Vec<usize> = Vec::new();
    for (v, inc) in incident.iter_mut().enumerate() {
        match inc.len() {
            0 => {}
            2 => {
                inc.sort_unstable();
                if inc[0] == inc[1] {
                    return Err(degenerate()); // duplicate edge
                }
                on_cycle.push(v);
            }
            _ => return Err(degenerate()),
        }
    }
    if on_cycle.len() != edges.len() || on_cycle.len() < 3 {
        return Err(degenerate());
    }
    let start = on_cycle[0];
    let mut seq = vec![start];
    let mut prev = start;
    let mut current = incident[start][0];
    while current != start {
        seq.push(current);
        let next = if incident[current][0] == prev {
            incident[current][1]
        } else {
            incident[current][0]
        };
        prev = current;
        current = next;
    }
    if seq.len() != on_cycle.len() {
        return Err(degenerate()); // union split into several cycles
    }
    CycleSeq::new(g, seq).map_err(|_| degenerate())
}

/// Builds every cycle the vine yields on the host path.
///
/// For `m >= 2`: `Q1` (all `A` segments plus all vine paths), `Q2` (drop the
/// last vine path, close through `B_{m-1}`), `Q3` (drop the first, close
/// through `B_1`), and `R_i = B_i + A_{i+1} + B_{i+1} + L_{i+1}` for
/// `i = 1..=m-2`. For `m = 1` the single cycle is the host path closed by the
/// vine path. Each certificate's claimed bound is its exact assembled length.
pub fn build_vine_cycles(
    g: &Graph,
    host: &PathSeq,
    vine: &Vine,
) -> Result<Vec<Certificate>, CycleError> {
    let m = vine.size();
    let mut certs: Vec<Certificate> = Vec::new();
    let mut push =
        |edges: Vec<(usize, usize)>, construction: Construction| -> Result<(), CycleError> {
            let cycle = cycle_from_edges(g, &edges, construction)?;
            if certs.iter().any(|c| c.cycle == cycle) {
                return Ok(()); // drop exact duplicates
            }
            certs.push(Certificate {
                length: cycle.order(),
                claimed_bound: Ratio::from_int(cycle.order() as i64),
                cycle,
                construction,
                host_path: host.clone(),
                vine: Some(vine.clone()),
            });
            Ok(())
        };

    if m == 1 {
        let mut edges = Vec::new();
        segment_edges(host, (0, host.order() - 1), &mut edges);
        vine_path_edges(host, vine, 0, &mut edges);
        push(edges, Construction::Raw)?;
        return Ok(certs);
    }

    let seg = decompose_segments(host, vine)?;

    // Q1: all A segments, all vine paths
    let mut edges = Vec::new();
    for &range in &seg.a_segments {
        segment_edges(host, range, &mut edges);
    }
    for i in 0..m {
        vine_path_edges(host, vine, i, &mut edges);
    }
    push(edges, Construction::Q1)?;

    // Q2: A_1..A_{m-1}, B_{m-1}, L_1..L_{m-1}
    let mut edges = Vec::new();
    for &range in &seg.a_segments[..m - 1] {
        segment_edges(host, range, &mut edges);
    }
    segment_edges(host, seg.b_segments[m - 2], &mut edges);
    for i in 0..m - 1 {
        vine_path_edges(host, vine, i, &mut edges);
    }
    push(edges, Construction::Q2)?;

    // Q3: A_2..A_m, B_1, L_2..L_m
    let mut edges = Vec::new();
    for &range in &seg.a_segments[1..] {
        segment_edges(host, range, &mut edges);
    }
    segment_edges(host, seg.b_segments[0], &mut edges);
    for i in 1..m {
        vine_path_edges(host, vine, i, &mut edges);
    }
    push(edges, Construction::Q3)?;

    // R_i = B_i + A_{i+1} + B_{i+1} + L_{i+1}, for i = 1..=m-2 (1-based)
    for i in 1..=m - 2 {
        let mut edges = Vec::new();
        segment_edges(host, seg.b_segments[i - 1], &mut edges);
        segment_edges(host, seg.a_segments[i], &mut edges);
        segment_edges(host, seg.b_segments[i], &mut edges);
        vine_path_edges(host, vine, i, &mut edges);
        push(edges, Construction::R(i))?;
    }
    Ok(certs)
}

/// Expected orders of the assembled cycles, straight from the segment
/// decomposition: `|Q1| = sum(a) + sum(|L_i| - 1)`, and so on. Used to check
/// the constructions length-for-length.
pub fn predicted_lengths(vine: &Vine, seg: &SegmentDecomposition) -> Vec<(Construction, usize)> {
    let m = vine.size();
    let l = |i: usize| vine.paths[i].order() - 1;
    let mut out = Vec::new();
    let q1 = seg.a.iter().sum::<usize>() + (0..m).map(l).sum::<usize>();
    out.push((Construction::Q1, q1));
    let q2 = seg.b[m - 2] + seg.a[..m - 1].iter().sum::<usize>() + (0..m - 1).map(l).sum::<usize>();
    out.push((Construction::Q2, q2));
    let q3 = seg.b[0] + seg.a[1..].iter().sum::<usize>() + (1..m).map(l).sum::<usize>();
    out.push((Construction::Q3, q3));
    for i in 1..=m - 2 {
        out.push((
            Construction::R(i),
            seg.b[i - 1] + seg.a[i] + seg.b[i] + l(i),
        ));
    }
    out
}

/// The Hamilton-of-the-host cycle built from a crossing chord pair: a
/// position `z` with `x ~ host[z]` and `y ~ host[z-1]` yields the cycle
/// `x, host[z..], host[z-1..1 backwards]` of order exactly `|host|`.
/// `z` may be the final position, in which case the construction degenerates
/// to the host path closed by the `x`-`y` edge.
pub fn crossing_chord_cycle(g: &Graph, host: &PathSeq) -> Option<Certificate> {
    let len = host.order();
    if len < 3 {
        return None;
    }
    let x = host.first();
    let y = host.last();
    for z in 1..len {
        if g.has_edge(x, host.at(z)) && g.has_edge(y, host.at(z - 1)) {
            let mut seq = Vec::with_capacity(len);
            seq.push(x);
            seq.extend((z..len).map(|pos| host.at(pos)));
            seq.extend((1..z).rev().map(|pos| host.at(pos)));
            let cycle = CycleSeq::new(g, seq).expect("crossing-chord cycle is valid");
            debug_assert_eq!(cycle.order(), len);
            return Some(Certificate {
                length: len,
                claimed_bound: Ratio::from_int(len as i64),
                cycle,
                construction: Construction::CrossingChord,
                host_path: host.clone(),
                vine: None,
            });
        }
    }
    None
}

/// Hypothesis flags for the three path-closure criteria on a host path with
/// endpoints `x`, `y`:
/// * `crossing_chord`: some `z` past `x` has `x ~ z` and `y ~ z^-`;
/// * `degree_sum`: `d(x) + d(y) >= p`;
/// * `chordless_window`: positions `z1 < z2` strictly inside the path with
///   `y ~ z1`, `x ~ z2`, a window of at least 3 vertices, no chord from `x`
///   or `y` into the open window, and `d(x) + d(y) >= p + 3 - window`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Lemma1Flags {
    pub crossing_chord: bool,
    pub degree_sum: bool,
    pub chordless_window: bool,
}

impl Lemma1Flags {
    pub fn any(&self) -> bool {
        self.crossing_chord || self.degree_sum || self.chordless_window
    }
}

pub fn lemma1_predicates(g: &Graph, host: &PathSeq) -> Lemma1Flags {
    let len = host.order();
    let x = host.first();
    let y = host.last();
    let p = len;

    let crossing_chord =
        (1..len).any(|z| g.has_edge(x, host.at(z)) && g.has_edge(y, host.at(z - 1)));
    let degree_sum = g.degree(x) + g.degree(y) >= p;

    let mut chordless_window = false;
    'outer: for z1 in 1..len.saturating_sub(1) {
        if !g.has_edge(y, host.at(z1)) {
            continue;
        }
        for z2 in z1 + 2..len - 1 {
            if !g.has_edge(x, host.at(z2)) {
                continue;
            }
            let window = z2 - z1 + 1;
            let interior_clean =
                (z1 + 1..z2).all(|z| !g.has_edge(x, host.at(z)) && !g.has_edge(y, host.at(z)));
            if interior_clean && g.degree(x) + g.degree(y) + window >= p + 3 {
                chordless_window = true;
                break 'outer;
            }
        }
    }

    Lemma1Flags {
        crossing_chord,
        degree_sum,
        chordless_window,
    }
}

/// Strongest certificate the constructions can produce: runs the crossing
/// chord search over longest-path witnesses (cap 50) and the vine cycles over
/// each witness's minimum vine, returning the longest cycle found. Its length
/// witnesses the three-case bound, not necessarily the true circumference.
pub fn best_certificate(g: &Graph) -> Result<Certificate, CycleError> {
    const WITNESS_CAP: usize = 50;
    let hosts = enumerate_longest_paths(g, WITNESS_CAP);
    let mut best: Option<Certificate> = None;
    let mut consider = |cert: Certificate| {
        if best.as_ref().is_none_or(|b| cert.length > b.length) {
            best = Some(cert);
        }
    };
    for host in &hosts {
        if let Some(cert) = crossing_chord_cycle(g, host) {
            consider(cert);
        }
        let vine = find_minimum_vine(g, host)?;
        for cert in build_vine_cycles(g, host, &vine)? {
            consider(cert);
        }
    }
    let mut best = best.expect("at least one host yields a vine cycle");
    // report the strongest integer bound the certificate vouches for
    let p = hosts[0].order();
    let ceil = theorem1_bound_exact(p, g.min_degree()).0.ceil();
    if ceil <= best.length {
        best.claimed_bound = Ratio::from_int(ceil as i64);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vine::VinePath;

    fn chorded_path6() -> (Graph, PathSeq, Vine) {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 3), (2, 5)]).unwrap();
        let host = PathSeq::new(&g, vec![0, 1, 2, 3, 4, 5]).unwrap();
        let vine = Vine::new(vec![
            VinePath::new(0, 3, vec![]),
            VinePath::new(2, 5, vec![]),
        ]);
        (g, host, vine)
    }

    /// Path 0..7 with chords 0-2, 1-3, 2-7: carries an m=3 vine whose middle
    /// segment degenerates to a single vertex.
    fn degenerate_middle() -> (Graph, PathSeq, Vine) {
        let mut edges: Vec<(usize, usize)> = (1..8).map(|v| (v - 1, v)).collect();
        edges.extend([(0, 2), (1, 3), (2, 7)]);
        let g = Graph::new(8, &edges).unwrap();
        let host = PathSeq::new(&g, (0..8).collect()).unwrap();
        let vine = Vine::new(vec![
            VinePath::new(0, 2, vec![]),
            VinePath::new(1, 3, vec![]),
            VinePath::new(2, 7, vec![]),
        ]);
        (g, host, vine)
    }

    #[test]
    fn decompose_chorded_path6() {
        let (g, host, vine) = chorded_path6();
        assert_eq!(crate::vine::validate_vine(&g, &host, &vine), Ok(()));
        let seg = decompose_segments(&host, &vine).unwrap();
        assert_eq!(seg.a, vec![2, 2]);
        assert_eq!(seg.b, vec![1]);
        // p = a1 + a2 + b1 + 1 for m = 2
        assert_eq!(host.order(), seg.a.iter().sum::<usize>() + seg.b[0] + 1);
    }

    #[test]
    fn decompose_rejects_single_path_vine() {
        let g = Graph::cycle(4).unwrap();
        let host = PathSeq::new(&g, vec![0, 1, 2, 3]).unwrap();
        let vine = Vine::new(vec![VinePath::new(0, 3, vec![])]);
        assert_eq!(
            decompose_segments(&host, &vine),
            Err(CycleError::VineTooSmall)
        );
    }

    #[test]
    fn decompose_adjacent_anchors_gives_unit_overlap() {
        // m=2 with x2 = y1 - 1
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (1, 4)]).unwrap();
        let host = PathSeq::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        let vine = Vine::new(vec![
            VinePath::new(0, 2, vec![]),
            VinePath::new(1, 4, vec![]),
        ]);
        assert_eq!(crate::vine::validate_vine(&g, &host, &vine), Ok(()));
        let seg = decompose_segments(&host, &vine).unwrap();
        assert_eq!(seg.b, vec![1]);
    }

    #[test]
    fn decompose_degenerate_middle_segment() {
        let (g, host, vine) = degenerate_middle();
        assert_eq!(crate::vine::validate_vine(&g, &host, &vine), Ok(()));
        let seg = decompose_segments(&host, &vine).unwrap();
        assert_eq!(seg.a, vec![1, 0, 4]);
        assert_eq!(seg.b, vec![1, 1]);
    }

    #[test]
    fn vine_cycles_on_chorded_path6() {
        let (g, host, vine) = chorded_path6();
        let certs = build_vine_cycles(&g, &host, &vine).unwrap();
        assert_eq!(certs.len(), 3);
        let by_tag = |tag: Construction| {
            certs
                .iter()
                .find(|c| c.construction == tag)
                .expect("construction present")
        };
        assert_eq!(
            by_tag(Construction::Q1).cycle.vertices(),
            &[0, 1, 2, 5, 4, 3]
        );
        assert_eq!(by_tag(Construction::Q2).cycle.vertices(), &[0, 1, 2, 3]);
        assert_eq!(by_tag(Construction::Q3).cycle.vertices(), &[2, 3, 4, 5]);
        // |Q1| = a1 + a2 + 2 when both vine paths are chords
        assert_eq!(by_tag(Construction::Q1).length, 6);
    }

    #[test]
    fn vine_cycles_single_path() {
        let g = Graph::cycle(5).unwrap();
        let host = PathSeq::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        let vine = Vine::new(vec![VinePath::new(0, 4, vec![])]);
        let certs = build_vine_cycles(&g, &host, &vine).unwrap();
        assert_eq!(certs.len(), 1);
        assert_eq!(certs[0].construction, Construction::Raw);
        assert_eq!(certs[0].length, 5);
    }

    #[test]
    fn vine_cycles_m3_count_and_lengths() {
        let (g, host, vine) = degenerate_middle();
        let certs = build_vine_cycles(&g, &host, &vine).unwrap();
        assert_eq!(certs.len(), 4); // Q1, Q2, Q3, R_1
        let seg = decompose_segments(&host, &vine).unwrap();
        for (tag, expected) in predicted_lengths(&vine, &seg) {
            let cert = certs.iter().find(|c| c.construction == tag).unwrap();
            assert_eq!(cert.length, expected, "{tag}");
            assert!(cert.cycle.is_valid(&g));
        }
        // R_1 is the triangle 1-2-3
        let r1 = certs
            .iter()
            .find(|c| c.construction == Construction::R(1))
            .unwrap();
        assert_eq!(r1.cycle.vertices(), &[1, 2, 3]);
    }

    #[test]
    fn crossing_chord_on_k4_minus_edge() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)]).unwrap();
        let host = PathSeq::new(&g, vec![0, 1, 2, 3]).unwrap();
        let cert = crossing_chord_cycle(&g, &host).unwrap();
        assert_eq!(cert.cycle.vertices(), &[0, 2, 3, 1]);
        assert_eq!(cert.length, 4);
    }

    #[test]
    fn crossing_chord_degenerates_to_closing_edge_on_c5() {
        let g = Graph::cycle(5).unwrap();
        let host = PathSeq::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        let cert = crossing_chord_cycle(&g, &host).unwrap();
        assert_eq!(cert.length, 5);
    }

    #[test]
    fn crossing_chord_absent_on_star() {
        let g = Graph::complete_bipartite(1, 3).unwrap();
        let host = PathSeq::new(&g, vec![1, 0, 2]).unwrap();
        assert!(crossing_chord_cycle(&g, &host).is_none());
    }

    #[test]
    fn lemma1_flags_examples() {
        let k4 = Graph::complete(4).unwrap();
        let host = PathSeq::new(&k4, vec![0, 1, 2, 3]).unwrap();
        let flags = lemma1_predicates(&k4, &host);
        assert!(flags.degree_sum);
        assert!(crate::solver::is_hamiltonian(&k4));

        let c6 = Graph::cycle(6).unwrap();
        let host = PathSeq::new(&c6, vec![0, 1, 2, 3, 4, 5]).unwrap();
        assert!(!lemma1_predicates(&c6, &host).degree_sum);

        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let (p, host) = crate::solver::longest_path(&k33);
        assert_eq!(p, 6);
        assert!(lemma1_predicates(&k33, &host).degree_sum);
        assert!(crate::solver::is_hamiltonian(&k33));
    }

    #[test]
    fn best_certificate_examples() {
        let g = crate::extremal::clique_join(2, 3, 2).0;
        let cert = best_certificate(&g).unwrap();
        assert!(cert.length >= 6);
        assert!(cert.cycle.is_valid(&g));

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(best_certificate(&c5).unwrap().length, 5);

        let petersen = Graph::petersen();
        let cert = best_certificate(&petersen).unwrap();
        assert!(
            cert.length >= 7,
            "bound ceil(6.70..) = 7, got {}",
            cert.length
        );
    }

    #[test]
    fn certificate_json_shape() {
        let c5 = Graph::cycle(5).unwrap();
        let cert = best_certificate(&c5).unwrap();
        let json = serde_json::to_value(&cert).unwrap();
        assert!(json.get("cycle").is_some());
        assert!(json.get("construction").is_some());
        assert!(json["claimed_bound"].get("num").is_some());
        assert!(json["claimed_bound"].get("den").is_some());
        assert!(json.get("host_path").is_some());
        assert!(json.get("vine").is_some());
        assert!(json.get("length").is_none());
    }
}
