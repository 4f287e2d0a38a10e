//! Even overlattices of the Veronese-pencil kernels. For most ranks the
//! kernel admits no proper even overlattice, so its type is determined; at
//! rank 8 the kernel glues into a unimodular lattice in two ways and the
//! classification is genuinely two-valued.
//!
//! ```sh
//! cargo run --example overlattice_ambiguity
//! ```

use ade_lattice::{
    build_homology, classify, classify_construction, enumerate_even_overlattices,
    vanishing_lattice, Construction,
};

fn main() {
    println!("possible overlattice types per rank:");
    for m in 3..=12 {
        let c = Construction::veronese_pencil(m).expect("positive rank");
        let report = classify_construction(&c).expect("exact kernel");
        let sets = report
            .possible_overlattice_types
            .expect("this family reports its overlattice types");
        let rendered: Vec<String> = sets
            .iter()
            .map(|set| {
                set.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" + ")
            })
            .collect();
        println!("  m = {m:>2}:  {{{}}}", rendered.join(", "));
    }

    // Drill into the ambiguous rank: every even overlattice of the kernel,
    // with its glue index and its own classification.
    println!();
    println!("even overlattices of the rank-8 kernel:");
    let kernel = vanishing_lattice(&build_homology(
        &Construction::veronese_pencil(8).expect("positive rank"),
    ))
    .expect("kernel is positive definite");
    for over in enumerate_even_overlattices(&kernel).expect("even base lattice") {
        let report = classify(&over.lattice).expect("still positive definite");
        let components: Vec<String> = report.components.iter().map(|t| t.to_string()).collect();
        println!(
            "  index {}: disc {}, components {}",
            over.index,
            report.disc,
            components.join(" + ")
        );
    }
}
