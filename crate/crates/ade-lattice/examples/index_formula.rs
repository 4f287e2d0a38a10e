//! Finite-index sublattices: the discriminant order grows by the square of
//! the index, and the discriminant group records the glue.
//!
//! ```sh
//! cargo run --example index_formula
//! ```

use ade_lattice::{IntMatrix, Lattice, Sublattice};

fn main() {
    // Hexagonal plane lattice, discriminant group of order 3.
    let ambient = Lattice::new(IntMatrix::from_rows(&[vec![2, -1], vec![-1, 2]]))
        .expect("symmetric and integral");
    let ambient_disc = ambient.discriminant_group().expect("nondegenerate");
    println!(
        "ambient: disc order {}, invariant factors {:?}",
        ambient_disc.order,
        ambient_disc
            .invariant_factors
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
    );

    // Index-3 sublattice spanned by (1, 1) and (0, 3).
    let sub = Sublattice::new(ambient, IntMatrix::from_rows(&[vec![1, 1], vec![0, 3]]))
        .expect("independent rows");
    let induced = sub.induced_lattice();
    let index = sub.index_in_ambient().expect("full rank");
    let sub_disc = induced.discriminant_group().expect("nondegenerate");
    println!(
        "sublattice of index {index}: disc order {}, invariant factors {:?}",
        sub_disc.order,
        sub_disc
            .invariant_factors
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
    );

    let (lhs, rhs) = sub.check_index_formula().expect("full rank");
    println!("disc(sub) = disc(ambient) * index^2 checks out: {lhs} = {rhs}");
}
