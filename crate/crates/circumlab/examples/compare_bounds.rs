//! Compare the three-case bound against sqrt(2p) on a small grid; the margin
//! is strictly positive everywhere.
//!
//! ```bash
//! cargo run --example compare_bounds
//! ```

use circumlab::bounds::{theorem1_bound, theorem1_dominates_b};

fn main() {
    println!("delta  p    sqrt(2p)  three-case  case       margin");
    for delta in [2usize, 3, 5, 8] {
        for p in [3usize, 2 * delta, 2 * delta + 1, 3 * delta - 1, 40, 200] {
            if p < 3 {
                continue;
            }
            let thm_b = (2.0 * p as f64).sqrt();
            let (thm1, case) = theorem1_bound(p, delta);
            assert!(theorem1_dominates_b(p, delta));
            println!(
                "{delta:<6} {p:<4} {thm_b:<9.4} {thm1:<11.4} {:<10} +{:.4}",
                case.to_string(),
                thm1 - thm_b
            );
        }
    }
    println!("\nexhaustive grid dominance (delta <= 50, p <= 10000):");
    let mut rows = 0usize;
    for delta in 2..=50 {
        for p in 3..=10_000 {
            assert!(theorem1_dominates_b(p, delta));
            rows += 1;
        }
    }
    println!("  {rows} grid points, zero failures");
}
