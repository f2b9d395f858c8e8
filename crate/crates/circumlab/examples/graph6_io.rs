//! graph6 encoding and decoding, record by record.
//!
//! ```bash
//! cargo run --example graph6_io
//! # or feed your own records:
//! printf 'C~\nDQc\n' | cargo run --example graph6_io
//! ```

use std::io::{IsTerminal, Read};

use circumlab::graph::Graph;
use circumlab::graph6;

fn describe(record: &str) {
    match graph6::decode(record) {
        Ok(g) => {
            let inv = g.invariants();
            println!(
                "{record:<10} n={} edges={:?} delta={} kappa={} two-connected={}",
                g.order(),
                g.edges(),
                inv.delta,
                inv.kappa,
                inv.two_connected
            );
            assert_eq!(g.to_graph6(), record, "round trip is byte-exact");
        }
        Err(e) => println!("{record:<10} rejected: {e}"),
    }
}

fn main() {
    let stdin = std::io::stdin();
    if !stdin.is_terminal() {
        let mut text = String::new();
        stdin
            .lock()
            .read_to_string(&mut text)
            .expect("readable stdin");
        for line in text.lines().filter(|l| !l.is_empty()) {
            describe(line.trim_end_matches('\r'));
        }
        return;
    }

    for g in [
        Graph::complete(4).unwrap(),
        Graph::cycle(5).unwrap(),
        Graph::petersen(),
        Graph::complete_bipartite(3, 4).unwrap(),
    ] {
        describe(&g.to_graph6());
    }
    describe("this is not graph6");
}
