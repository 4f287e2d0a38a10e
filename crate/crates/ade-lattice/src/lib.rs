//! Exact computations with integral quadratic lattices.
//!
//! The crate takes a symmetric integer Gram matrix (or a geometric
//! construction that produces one) and answers, with proofs-by-computation
//! rather than floating point:
//!
//! * normal forms and kernels over Z ([`exact_linalg`]),
//! * discriminant groups, index formulas, and even overlattices ([`lattice`]),
//! * enumeration and ADE classification of norm-2 root systems ([`roots`]),
//! * a catalog of geometric constructions whose vanishing lattices realize
//!   those root systems ([`constructions`]),
//! * and a reporting layer used by the `ade-lattice` binary ([`cli`]).
//!
//! Every determinant, every invariant factor, and every root coordinate is an
//! exact integer; randomness appears only in the self-test module, seeded.

pub mod cli;
pub mod constructions;
pub mod exact_linalg;
pub mod lattice;
pub mod roots;
pub mod selftest;

pub use exact_linalg::{
    det, hermite_normal_form, kernel_basis_z, smith_normal_form, IntMatrix, RatMatrix, SnfResult,
};
pub use lattice::{
    enumerate_even_overlattices, enumerate_even_overlattices_with_capacity, DiscriminantGroup,
    EvenOverlattice, Lattice, LatticeError, Sublattice,
};
pub use constructions::{
    build_homology, classify_construction, default_catalog, del_pezzo_table, expected_outcome,
    structured_det, structured_matrix, theorem_filter, vanishing_lattice, variety_identity,
    Construction, ConstructionError, ExpectedOutcome, Family, HomologyData,
};
pub use roots::{
    classify, enumerate_roots, verify_root_axioms, weyl_orbit_is_transitive, AdeType,
    AxiomVerdict, ClassificationReport, RootAxiom, RootSystem, RootsError,
};
