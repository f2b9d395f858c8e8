//! Search for vines on a longest path: minimum-size versus greedy.
//!
//! ```bash
//! cargo run --example find_vines
//! ```

use circumlab::graph::Graph;
use circumlab::solver;
use circumlab::vine::{find_any_vine, find_minimum_vine, validate_vine, Vine};

fn show(host_len: usize, vine: &Vine) {
    println!(
        "  {} path(s) on a host of {} vertices:",
        vine.size(),
        host_len
    );
    for (i, path) in vine.paths.iter().enumerate() {
        if path.interior.is_empty() {
            println!(
                "    L{}: chord at positions ({}, {})",
                i + 1,
                path.start_pos,
                path.end_pos
            );
        } else {
            println!(
                "    L{}: positions ({}, {}) through off-path vertices {:?}",
                i + 1,
                path.start_pos,
                path.end_pos,
                path.interior
            );
        }
    }
}

fn main() {
    let graphs = [
        ("Petersen", Graph::petersen()),
        ("K_{2,3}", Graph::complete_bipartite(2, 3).unwrap()),
        (
            "prism C3 x K2",
            Graph::new(
                6,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 0),
                    (3, 4),
                    (4, 5),
                    (5, 3),
                    (0, 3),
                    (1, 4),
                    (2, 5),
                ],
            )
            .unwrap(),
        ),
    ];
    for (name, g) in &graphs {
        let (p, host) = solver::longest_path(g);
        println!("{name}: longest path {:?} (p = {p})", host.vertices());

        let minimum = find_minimum_vine(g, &host).expect("2-connected graphs carry vines");
        assert_eq!(validate_vine(g, &host, &minimum), Ok(()));
        println!("minimum vine:");
        show(p, &minimum);

        let greedy = find_any_vine(g, &host).expect("greedy search succeeds too");
        assert_eq!(validate_vine(g, &host, &greedy), Ok(()));
        println!("greedy vine:");
        show(p, &greedy);
        println!();
    }
}
