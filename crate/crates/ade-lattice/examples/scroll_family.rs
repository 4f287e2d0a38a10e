//! Sweep the scroll family: the vanishing lattice is the sum-zero
//! sublattice of Z^r, so the classification walks up the A series while the
//! discriminant order counts the ruling degree.
//!
//! ```sh
//! cargo run --example scroll_family
//! ```

use ade_lattice::{classify_construction, expected_outcome, Construction};

fn main() {
    println!("{:>3}  {:>4}  {:<10}  {:>4}  {}", "c2", "rank", "components", "disc", "verdict");
    for r in 1..=9 {
        let c = Construction::scroll(r).expect("positive degree");
        let report = classify_construction(&c).expect("exact kernel");
        let expected = expected_outcome(&c);
        let verdict = if expected.matches(&report) { "matches" } else { "MISMATCH" };
        let components = if report.components.is_empty() {
            "-".to_string()
        } else {
            report
                .components
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(" + ")
        };
        println!(
            "{r:>3}  {:>4}  {components:<10}  {:>4}  {verdict} ({expected})",
            report.rank, report.disc
        );
    }
}
