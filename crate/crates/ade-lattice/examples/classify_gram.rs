//! Classify the root system of a lattice given by an explicit gram matrix.
//!
//! ```sh
//! cargo run --example classify_gram
//! ```

use ade_lattice::{classify, enumerate_roots, IntMatrix, Lattice};

fn main() {
    // The branched rank-4 diagram: a path of three nodes with a fourth
    // hanging off the middle one.
    let gram = IntMatrix::from_rows(&[
        vec![2, -1, 0, 0],
        vec![-1, 2, -1, -1],
        vec![0, -1, 2, 0],
        vec![0, -1, 0, 2],
    ]);
    let lattice = Lattice::new(gram).expect("symmetric and integral");

    let roots = enumerate_roots(&lattice).expect("positive definite");
    println!("norm-2 vectors found: {}", roots.len());
    for root in roots.iter().take(4) {
        let pretty: Vec<String> = root.iter().map(|x| x.to_string()).collect();
        println!("  ({})", pretty.join(", "));
    }
    println!("  ...");

    let report = classify(&lattice).expect("positive definite");
    println!();
    println!("rank:            {}", report.rank);
    println!("disc order:      {}", report.disc);
    let components: Vec<String> = report.components.iter().map(|t| t.to_string()).collect();
    println!("components:      {}", components.join(" + "));
    println!("spans lattice:   {}", report.roots_span_lattice);
    println!("weyl order:      {}", report.weyl_order);
}
