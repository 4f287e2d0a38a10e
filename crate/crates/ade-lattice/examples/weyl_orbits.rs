//! Root-system structure of one lattice: axioms, simple roots, Cartan
//! matrix, and transitivity of the reflection orbit.
//!
//! ```sh
//! cargo run --example weyl_orbits
//! ```

use ade_lattice::{
    build_homology, vanishing_lattice, weyl_orbit_is_transitive, Construction, RootSystem,
};

fn main() {
    let lattice = vanishing_lattice(&build_homology(
        &Construction::del_pezzo(3).expect("degree in range"),
    ))
    .expect("kernel is positive definite");
    let system = RootSystem::new(lattice).expect("roots exist");

    println!("roots:        {}", system.roots().len());
    println!("simple roots: {}", system.simple_roots().len());
    println!("axioms hold:  {}", system.verify_axioms().is_pass());
    println!("cartan matrix:\n{}", system.cartan());

    let transitive = weyl_orbit_is_transitive(&system).expect("irreducible system");
    println!("reflections reach every root from any start: {transitive}");
}
