//! circumlab: a verification and certificate toolkit for circumference lower
//! bounds on 2-connected graphs.
//!
//! The library computes exact longest paths and cycles with witnesses,
//! evaluates a family of lower bounds on the circumference in exact
//! arithmetic, constructs the vines and cycle certificates behind those
//! bounds, and exhaustively checks every claim over all small 2-connected
//! graphs.
//!
//! Start with the runnable examples (`cargo run --example <name>`), or the
//! `circumlab` binary for the same functionality as subcommands:
//!
//! * [`graph`] / [`graph6`] — bitmask graphs, connectivity, graph6 codec;
//! * [`solver`] — exact longest path / cycle with two independent engines;
//! * [`bounds`] — bound formulas and exact decision forms;
//! * [`vine`] — anchored path systems on a host path, search and validation;
//! * [`cycle`] — cycle constructions from vines and chords, certificates;
//! * [`enumerate`] — isomorphism-reduced generation of small graphs;
//! * [`harness`] — corpus verification and reporting;
//! * [`extremal`] — sharpness families with predicted invariants.
//!
//! ```
//! use circumlab::{bounds, solver, Graph};
//!
//! // the join of an edge with three disjoint edges: the long-path bound is
//! // exactly tight here
//! let g = Graph::from_graph6("G~rMEC")?;
//! let (p, _) = solver::longest_path(&g);
//! let (c, _) = solver::circumference(&g)?;
//! assert_eq!((p, c), (8, 6));
//!
//! let (bound, case) = bounds::theorem1_bound_exact(p, g.min_degree());
//! assert_eq!(case, bounds::Theorem1Case::LongPath);
//! assert!(bound.satisfied_by(c) && bound.attained_by(c));
//!
//! let certificate = circumlab::best_certificate(&g)?;
//! assert!(certificate.length >= bound.ceil());
//! assert!(certificate.cycle.is_valid(&g));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod bounds;
pub mod cli;
pub mod cycle;
pub mod enumerate;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod solver;
pub mod vine;

pub use bounds::{BoundExact, BoundReport, Ratio, Theorem1Case};
pub use cycle::{best_certificate, Certificate, Construction};
pub use graph::{Graph, GraphError, GraphInvariants};
pub use graph6::Graph6Error;
pub use harness::{verify_corpus, Check, CheckConfig, VerificationReport};
pub use solver::{circumference, is_hamiltonian, longest_path, CycleSeq, PathSeq};
pub use vine::{find_any_vine, find_minimum_vine, validate_vine, Vine, VinePath};
