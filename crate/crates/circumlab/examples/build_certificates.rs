//! Assemble explicit cycles from a vine and package the strongest one as a
//! certificate, on the graph where the long-path bound is exactly tight.
//!
//! ```bash
//! cargo run --example build_certificates
//! ```

use circumlab::bounds::theorem1_bound_exact;
use circumlab::cycle::{best_certificate, build_vine_cycles, decompose_segments};
use circumlab::solver;
use circumlab::vine::find_minimum_vine;

fn main() {
    // join of an edge with three disjoint edges: n = p = 8, c = 6, delta = 3
    let (g, spec) = circumlab::extremal::clique_join(2, 3, 2);
    println!("graph {} = {}", spec.family, g.to_graph6());

    let (p, host) = solver::longest_path(&g);
    let vine = find_minimum_vine(&g, &host).unwrap();
    println!(
        "host path {:?}, minimum vine of {} paths",
        host.vertices(),
        vine.size()
    );

    if vine.size() >= 2 {
        let seg = decompose_segments(&host, &vine).unwrap();
        println!("segment edge counts: a = {:?}, b = {:?}", seg.a, seg.b);
    }

    println!("cycles assembled from the vine:");
    for cert in build_vine_cycles(&g, &host, &vine).unwrap() {
        println!(
            "  {:<4} order {:>2}: {:?}",
            cert.construction.to_string(),
            cert.length,
            cert.cycle.vertices()
        );
    }

    let cert = best_certificate(&g).unwrap();
    let (bound, case) = theorem1_bound_exact(p, g.min_degree());
    println!(
        "best certificate: {} of order {} (bound {} = {}, ceil {})",
        cert.construction,
        cert.length,
        case,
        bound,
        bound.ceil()
    );
    println!(
        "certificate JSON:\n{}",
        serde_json::to_string_pretty(&cert).unwrap()
    );
}
