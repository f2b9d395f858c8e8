//! Constructions of the sharpness families, with closed-form predictions
//! attached exactly where a prediction exists; all other members are merely
//! cross-checked against the exact solvers.

use serde::Serialize;

use crate::bounds::{theorem1_bound_exact, Theorem1Case};
use crate::graph::Graph;
use crate::harness::{Check, GraphRecord, VerificationReport, Violation};
use crate::solver;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    CompleteBipartite { a: usize, b: usize },
    CliqueJoin { m: usize, t: usize, s: usize },
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Family::CompleteBipartite { a, b } => write!(f, "K_{{{a},{b}}}"),
            Family::CliqueJoin { m, t, s } => write!(f, "K_{m}+{t}K_{s}"),
        }
    }
}

/// Closed-form invariant predictions for a family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Predicted {
    pub n: usize,
    pub p: usize,
    pub c: usize,
    pub delta: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub predicted: Option<Predicted>,
}

/// `K_{a,b}` with parts `{0..a}` and `{a..a+b}`; `2 <= a <= b`. The balanced-
/// plus-one members `b = a + 1` carry the prediction
/// `(n, p, c, delta) = (2a+1, 2a+1, 2a, a)`.
pub fn complete_bipartite(a: usize, b: usize) -> (Graph, FamilySpec) {
    assert!(2 <= a && a <= b, "complete_bipartite wants 2 <= a <= b");
    let g = Graph::complete_bipartite(a, b).expect("order fits");
    let predicted = (b == a + 1).then_some(Predicted {
        n: 2 * a + 1,
        p: 2 * a + 1,
        c: 2 * a,
        delta: a,
    });
    (
        g,
        FamilySpec {
            family: Family::CompleteBipartite { a, b },
            predicted,
        },
    )
}

/// Join of `K_m` (the hub) with `t` disjoint copies of `K_s`: every hub
/// vertex is adjacent to everything else. Members with `m = 2`, `t = 3`
/// carry the prediction `(n, p, c, delta) = (3s+2, 3s+2, 2s+2, s+1)`.
pub fn clique_join(m: usize, t: usize, s: usize) -> (Graph, FamilySpec) {
    assert!(m >= 1 && t >= 1 && s >= 1);
    let n = m + t * s;
    let mut edges = Vec::new();
    for u in 0..m {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    for block in 0..t {
        let base = m + block * s;
        for u in base..base + s {
            for v in u + 1..base + s {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(n, &edges).expect("order fits");
    let predicted = (m == 2 && t == 3).then_some(Predicted {
        n: 3 * s + 2,
        p: 3 * s + 2,
        c: 2 * s + 2,
        delta: s + 1,
    });
    (
        g,
        FamilySpec {
            family: Family::CliqueJoin { m, t, s },
            predicted,
        },
    )
}

/// Instantiates both families for `delta = 2..=6` and checks every sharpness
/// claim in exact arithmetic:
///
/// 1. `c <= p` on every member (so the short-path bound `c >= p` is
///    unimprovable);
/// 2. `K_{delta,delta+1}` has `p = 2*delta + 1` and `c = 2*delta = p - 1`
///    (the short-path case does not extend to `p = 2*delta + 1`);
/// 3. the mid-path bound `p - 1` is attained (`delta >= 3`; at `delta = 2`
///    the member sits in the long-path case and attains that bound instead);
/// 4. the clique join has `n = p = 3*delta - 1`, `c = 2*delta` (with
///    `c <= p - 2` for `delta >= 3`), and attains the long-path bound with
///    exact integer equality `(2c - 2*delta - 1)^2 = 8p - 40 + (2*delta-7)^2`.
pub fn sharpness_suite() -> VerificationReport {
    let mut report = VerificationReport::default();
    for delta in 2..=6usize {
        let (bipartite, _) = complete_bipartite(delta, delta + 1);
        let (join, _) = clique_join(2, 3, delta - 1);
        for (g, label) in [(bipartite, "bipartite"), (join, "clique-join")] {
            let record = sharpness_record(&g, delta, label);
            report.absorb(record);
        }
    }
    report.finish();
    report
}

fn sharpness_record(g: &Graph, delta: usize, label: &str) -> GraphRecord {
    let inv = g.invariants();
    let (p, _) = solver::longest_path(g);
    let (c, _) = solver::circumference(g).expect("family members have cycles");
    let mut record = GraphRecord::measure(g, p, c, &inv);
    let mut fail = |detail: String| {
        record.violations.push(Violation {
            graph6: g.to_graph6(),
            check: Check::Sharpness,
            detail,
        });
    };

    if c > p {
        fail(format!("c = {c} exceeds p = {p}"));
    }
    if inv.delta != delta {
        fail(format!(
            "minimum degree {} but family delta {delta}",
            inv.delta
        ));
    }
    let (bound, case) = theorem1_bound_exact(p, delta);
    match label {
        "bipartite" => {
            if p != 2 * delta + 1 || c != 2 * delta || c + 1 != p {
                fail(format!(
                    "expected (p, c) = ({}, {}), got ({p}, {c})",
                    2 * delta + 1,
                    2 * delta
                ));
            }
            let expected_case = if delta >= 3 {
                Theorem1Case::MidPath
            } else {
                Theorem1Case::LongPath
            };
            if case != expected_case {
                fail(format!("expected {expected_case} case, got {case}"));
            }
            if !bound.attained_by(c) || bound.ceil() != c {
                fail(format!("bound {bound} not attained exactly by c = {c}"));
            }
        }
        "clique-join" => {
            if g.order() != 3 * delta - 1 || p != 3 * delta - 1 || c != 2 * delta {
                fail(format!(
                    "expected n = p = {} and c = {}, got n = {}, p = {p}, c = {c}",
                    3 * delta - 1,
                    2 * delta,
                    g.order()
                ));
            }
            if delta >= 3 && c + 2 > p {
                fail(format!("expected c <= p - 2, got c = {c}, p = {p}"));
            }
            if case != Theorem1Case::LongPath {
                fail(format!("expected LongPath case, got {case}"));
            }
            // (2c - 2*delta - 1)^2 = 8p - 40 + (2*delta - 7)^2, both sides (2*delta - 1)^2
            let lhs = (2 * c as i64 - 2 * delta as i64 - 1).pow(2);
            let rhs = 8 * p as i64 - 40 + (2 * delta as i64 - 7).pow(2);
            if lhs != rhs || !bound.attained_by(c) {
                fail(format!("long-path equality fails: {lhs} vs {rhs}"));
            }
        }
        _ => unreachable!(),
    }
    record
}
