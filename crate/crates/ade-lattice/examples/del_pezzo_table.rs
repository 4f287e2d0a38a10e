//! The seven del Pezzo rows: each variety's vanishing lattice, classified
//! and checked against its expected root system.
//!
//! ```sh
//! cargo run --example del_pezzo_table
//! ```

use ade_lattice::{classify_construction, del_pezzo_table, expected_outcome};

fn main() {
    println!("{:<42}  {:<8}  {:>4}  {}", "variety", "type", "disc", "check");
    for row in del_pezzo_table() {
        let report = classify_construction(&row).expect("exact kernel");
        let expected = expected_outcome(&row);
        let types = report
            .components
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(" + ");
        let verdict = if expected.matches(&report) { "ok" } else { "MISMATCH" };
        println!(
            "{:<42}  {types:<8}  {:>4}  {verdict}",
            row.display_name(),
            report.disc
        );
    }
}
