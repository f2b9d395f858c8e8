//! Exact longest paths and cycles with explicit witnesses, and the agreement
//! between the subset-DP and branch-and-bound engines.
//!
//! ```bash
//! cargo run --example exact_solvers
//! ```

use circumlab::graph::Graph;
use circumlab::solver::{self, branch_bound, subset_dp};

fn main() {
    let graphs = [
        ("Petersen", Graph::petersen()),
        ("K_{3,4}", Graph::complete_bipartite(3, 4).unwrap()),
        ("C7", Graph::cycle(7).unwrap()),
        ("K_2+3K_2", circumlab::extremal::clique_join(2, 3, 2).0),
    ];
    for (name, g) in &graphs {
        let (p, path) = solver::longest_path(g);
        let (c, cycle) = solver::circumference(g).unwrap();
        println!("{name:<10} p={p} witness {:?}", path.vertices());
        println!("{:<10} c={c} witness {:?}", "", cycle.vertices());
        println!(
            "{:<10} hamiltonian: {}  engines agree: path {} cycle {}",
            "",
            solver::is_hamiltonian(g),
            subset_dp::longest_path_order(g) == branch_bound::longest_path_order(g),
            subset_dp::longest_cycle_order(g) == branch_bound::longest_cycle_order(g),
        );
    }

    // several distinct longest-path witnesses, in lexicographic order
    let c5 = Graph::cycle(5).unwrap();
    println!("\nfirst four longest paths of C5:");
    for path in solver::enumerate_longest_paths(&c5, 4) {
        println!("  {:?}", path.vertices());
    }
}
