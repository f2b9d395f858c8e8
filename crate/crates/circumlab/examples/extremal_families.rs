//! Instantiate the two sharpness families and show how each pins its case of
//! the three-case bound.
//!
//! ```bash
//! cargo run --example extremal_families
//! ```

use circumlab::bounds::theorem1_bound_exact;
use circumlab::extremal::{clique_join, complete_bipartite, sharpness_suite};
use circumlab::solver;

fn main() {
    println!("family            graph6       n   p   c   delta  case       bound");
    for delta in 2..=6usize {
        for (g, spec) in [
            complete_bipartite(delta, delta + 1),
            clique_join(2, 3, delta - 1),
        ] {
            let (p, _) = solver::longest_path(&g);
            let (c, _) = solver::circumference(&g).unwrap();
            let (bound, case) = theorem1_bound_exact(p, g.min_degree());
            let predicted = spec.predicted.expect("paper members carry predictions");
            assert_eq!((predicted.p, predicted.c), (p, c));
            println!(
                "{:<17} {:<12} {:<3} {:<3} {:<3} {:<6} {:<10} {} {}",
                spec.family.to_string(),
                g.to_graph6(),
                g.order(),
                p,
                c,
                g.min_degree(),
                case.to_string(),
                bound,
                if bound.attained_by(c) {
                    "(attained)"
                } else {
                    ""
                }
            );
        }
    }

    let report = sharpness_suite();
    println!(
        "\nsharpness suite: {} members, {} violations",
        report.total_examined(),
        report.violations.len()
    );
}
