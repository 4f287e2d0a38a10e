//! Exact integer normal forms: Smith, Hermite, determinant, and the
//! saturated kernel, all without floating point.
//!
//! ```sh
//! cargo run --example normal_forms
//! ```

use ade_lattice::{det, hermite_normal_form, kernel_basis_z, smith_normal_form, IntMatrix};

fn main() {
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
    println!("m =\n{m}");
    println!("det(m) = {}\n", det(&m));

    let s = smith_normal_form(&m);
    println!("smith diagonal: {:?}", s.diagonal().iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("u * m * v =\n{}", s.u.mul(&m).mul(&s.v));

    let (h, u) = hermite_normal_form(&m);
    println!("hermite form =\n{h}");
    println!("row transform determinant: {}\n", det(&u));

    // A rank-1 map from Z^6: its kernel is a saturated rank-5 sublattice.
    let f = IntMatrix::from_rows(&[vec![3, 1, 1, 1, 1, 1]]);
    let kernel = kernel_basis_z(&f);
    println!("map f =\n{f}");
    println!("kernel basis ({} rows):\n{kernel}", kernel.rows());
}
