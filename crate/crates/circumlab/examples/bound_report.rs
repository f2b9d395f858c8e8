//! Compute every bound and satisfaction flag for a handful of graphs.
//!
//! ```bash
//! cargo run --example bound_report
//! ```

use circumlab::bounds::BoundReport;
use circumlab::graph::Graph;
use circumlab::solver;

fn report(name: &str, g: &Graph) {
    let inv = g.invariants();
    let (p, _) = solver::longest_path(g);
    let (c, _) = solver::circumference(g).expect("these graphs have cycles");
    let r = BoundReport::from_parts(inv.n, p, c, inv.delta, inv.kappa);
    println!(
        "{name:<14} {} n={} p={} c={} delta={} kappa={}",
        g.to_graph6(),
        r.n,
        r.p,
        r.c,
        r.delta,
        r.kappa
    );
    println!(
        "    degree bound {}  path bound {:.4} (int {})  three-case {} = {} (ceil {}){}",
        r.thm_a,
        r.thm_b,
        r.thm_b_int,
        r.thm1_case,
        r.thm1_exact,
        r.thm1_ceil,
        if r.thm1_tight {
            "  <- attained exactly"
        } else {
            ""
        }
    );
}

fn main() {
    report("K_{3,4}", &Graph::complete_bipartite(3, 4).unwrap());
    report("K_2+3K_2", &circumlab::extremal::clique_join(2, 3, 2).0);
    report("Petersen", &Graph::petersen());
    report("C5", &Graph::cycle(5).unwrap());
    report("K6", &Graph::complete(6).unwrap());
}
