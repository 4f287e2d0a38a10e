//! Integral quadratic lattices and their finite invariants.
//!
//! A [`Lattice`] is Zⁿ equipped with a symmetric integer Gram matrix `G`;
//! vectors are coordinate rows and the pairing is `(x, y) = xᵀ·G·y`. On top of
//! that this module computes:
//!
//! * the discriminant group `L^∨/L` with its invariant factors
//!   ([`Lattice::discriminant_group`]), read off the Smith normal form of `G`;
//! * finite-index sublattices ([`Sublattice`]) with the index identity
//!   `disc(L₁) = disc(L) · [L : L₁]²` checkable exactly
//!   ([`Sublattice::check_index_formula`]);
//! * positive definiteness by leading principal minors and evenness by the
//!   diagonal;
//! * every even overlattice `L ⊆ M ⊆ L^∨`
//!   ([`enumerate_even_overlattices`]): such `M` correspond to subgroups of
//!   `L^∨/L` on which the quadratic form `q(x) = xᵀ·G·x mod 2Z` vanishes, so
//!   the enumeration walks subgroups of a finite abelian group — no search in
//!   the ambient space.

use std::collections::BTreeSet;
use std::env;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact_linalg::{det, hermite_normal_form, smith_normal_form, IntMatrix, RatMatrix};

/// Environment variable overriding the default discriminant-group capacity
/// used by [`enumerate_even_overlattices`]. Values that fail to parse as an
/// unsigned integer are ignored.
pub const DISC_CAPACITY_ENV: &str = "ADE_LATTICE_DISC_CAPACITY";

/// Default bound on `|L^∨/L|` for overlattice enumeration.
pub const DEFAULT_DISC_CAPACITY: u64 = 64;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("gram matrix has a non-integer entry at row {row}, column {col}")]
    NotIntegral { row: usize, col: usize },
    #[error("quadratic form is degenerate (determinant is zero)")]
    DegenerateForm,
    #[error(
        "form is not positive definite: leading principal minor {minor_index} is {minor_value}"
    )]
    NotPositiveDefinite {
        /// 1-based size of the first leading principal submatrix whose
        /// determinant fails to be positive.
        minor_index: usize,
        minor_value: BigInt,
    },
    #[error("form is not even: diagonal entry at index {index} is odd")]
    NotEven { index: usize },
    #[error("sublattice basis has {basis_cols} columns but the ambient rank is {ambient_rank}")]
    RankMismatch {
        basis_cols: usize,
        ambient_rank: usize,
    },
    #[error("sublattice basis rows are linearly dependent")]
    DependentBasis,
    #[error("sublattice does not have finite index (rank {sub_rank} inside rank {ambient_rank})")]
    NotFullRank {
        sub_rank: usize,
        ambient_rank: usize,
    },
    #[error("discriminant group has order {order}, above the enumeration capacity {bound}")]
    CapacityExceeded { order: BigInt, bound: u64 },
}

/// Zⁿ with a symmetric integer Gram matrix.
///
/// Integrality is structural: the Gram matrix is stored as an [`IntMatrix`],
/// so a `Lattice` cannot hold a non-integral form. Rational input goes
/// through [`Lattice::from_rational_gram`], which rejects denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    rank: usize,
    gram: IntMatrix,
    label: Option<String>,
}

impl Lattice {
    pub fn new(gram: IntMatrix) -> Result<Self, LatticeError> {
        if !gram.is_symmetric() {
            return Err(LatticeError::NotSymmetric);
        }
        Ok(Lattice {
            rank: gram.rows(),
            gram,
            label: None,
        })
    }

    /// Accepts a rational Gram matrix only when every entry is an integer.
    pub fn from_rational_gram(gram: &RatMatrix) -> Result<Self, LatticeError> {
        for i in 0..gram.rows() {
            for j in 0..gram.cols() {
                if !gram.at(i, j).is_integer() {
                    return Err(LatticeError::NotIntegral { row: i, col: j });
                }
            }
        }
        Lattice::new(gram.to_integer().expect("just checked integrality"))
    }

    #[must_use]
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// `(x, y) = xᵀ·G·y` for integer coordinate vectors.
    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        assert_eq!(x.len(), self.rank, "vector length != rank");
        assert_eq!(y.len(), self.rank, "vector length != rank");
        let mut acc = BigInt::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                acc += xi * self.gram.at(i, j) * yj;
            }
        }
        acc
    }

    pub fn norm(&self, x: &[BigInt]) -> BigInt {
        self.pairing(x, x)
    }

    /// The pairing extended to rational coordinates (used for vectors in the
    /// dual lattice).
    pub fn pairing_rational(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        assert_eq!(x.len(), self.rank, "vector length != rank");
        assert_eq!(y.len(), self.rank, "vector length != rank");
        let mut acc = BigRational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                acc += xi * BigRational::from_integer(self.gram.at(i, j).clone()) * yj;
            }
        }
        acc
    }

    pub fn determinant(&self) -> BigInt {
        det(&self.gram)
    }

    /// The finite group `L^∨/L`. Errors on a degenerate form.
    pub fn discriminant_group(&self) -> Result<DiscriminantGroup, LatticeError> {
        let d = self.determinant();
        if d.is_zero() {
            return Err(LatticeError::DegenerateForm);
        }
        let factors: Vec<BigInt> = smith_normal_form(&self.gram)
            .invariant_factors()
            .into_iter()
            .filter(|f| !f.is_one())
            .collect();
        Ok(DiscriminantGroup {
            invariant_factors: factors,
            order: d.abs(),
        })
    }

    /// Positive definiteness by Sylvester's criterion: all leading principal
    /// minors positive. Returns the first failure as a witness.
    pub fn positive_definite_check(&self) -> Result<(), LatticeError> {
        for k in 1..=self.rank {
            let minor = det(&self.gram.leading_principal_submatrix(k));
            if !minor.is_positive() {
                return Err(LatticeError::NotPositiveDefinite {
                    minor_index: k,
                    minor_value: minor,
                });
            }
        }
        Ok(())
    }

    pub fn is_positive_definite(&self) -> bool {
        self.positive_definite_check().is_ok()
    }

    /// Even ⟺ every diagonal Gram entry is even (the diagonal controls all
    /// norms: `q(x+y) − q(x) − q(y)` is twice the pairing).
    pub fn is_even(&self) -> bool {
        (0..self.rank).all(|i| self.gram.at(i, i).is_even())
    }

    fn even_check(&self) -> Result<(), LatticeError> {
        match (0..self.rank).find(|&i| self.gram.at(i, i).is_odd()) {
            Some(index) => Err(LatticeError::NotEven { index }),
            None => Ok(()),
        }
    }
}

/// Invariant factors of `L^∨/L` (each > 1, each dividing the next) together
/// with the group order `|det G|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantGroup {
    pub invariant_factors: Vec<BigInt>,
    pub order: BigInt,
}

impl DiscriminantGroup {
    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

/// A sublattice presented by basis vectors written in the coordinates of an
/// ambient lattice, one row per basis vector.
#[derive(Clone, Debug)]
pub struct Sublattice {
    ambient: Lattice,
    basis_in_ambient: IntMatrix,
}

impl Sublattice {
    /// Rows of `basis_in_ambient` must be independent and match the ambient
    /// rank in length.
    pub fn new(ambient: Lattice, basis_in_ambient: IntMatrix) -> Result<Self, LatticeError> {
        if basis_in_ambient.cols() != ambient.rank() {
            return Err(LatticeError::RankMismatch {
                basis_cols: basis_in_ambient.cols(),
                ambient_rank: ambient.rank(),
            });
        }
        if smith_normal_form(&basis_in_ambient).rank() != basis_in_ambient.rows() {
            return Err(LatticeError::DependentBasis);
        }
        Ok(Sublattice {
            ambient,
            basis_in_ambient,
        })
    }

    pub fn ambient(&self) -> &Lattice {
        &self.ambient
    }

    pub fn basis_in_ambient(&self) -> &IntMatrix {
        &self.basis_in_ambient
    }

    /// The sublattice as a lattice in its own right: Gram `B·G·Bᵀ`.
    #[must_use]
    pub fn induced_lattice(&self) -> Lattice {
        let b = &self.basis_in_ambient;
        let gram = b.mul(self.ambient.gram()).mul(&b.transpose());
        Lattice::new(gram).expect("B·G·Bᵀ is symmetric by construction")
    }

    /// `[L : L₁] = |det B|`; requires finite index (square basis).
    pub fn index_in_ambient(&self) -> Result<BigInt, LatticeError> {
        if self.basis_in_ambient.rows() != self.ambient.rank() {
            return Err(LatticeError::NotFullRank {
                sub_rank: self.basis_in_ambient.rows(),
                ambient_rank: self.ambient.rank(),
            });
        }
        Ok(det(&self.basis_in_ambient).abs())
    }

    /// Both sides of the identity `disc(L₁) = disc(L) · [L : L₁]²`, evaluated
    /// independently: the left from the induced Gram determinant, the right
    /// from the ambient determinant and the basis determinant. Callers assert
    /// the two agree.
    pub fn check_index_formula(&self) -> Result<(BigInt, BigInt), LatticeError> {
        let index = self.index_in_ambient()?;
        let lhs = self.induced_lattice().determinant().abs();
        let rhs = self.ambient.determinant().abs() * (&index * &index);
        Ok((lhs, rhs))
    }
}

/// An even lattice `M` with `L ⊆ M ⊆ L^∨`, as produced by
/// [`enumerate_even_overlattices`].
#[derive(Clone, Debug)]
pub struct EvenOverlattice {
    /// `M` with its own integral Gram matrix.
    pub lattice: Lattice,
    /// Rows are a basis of `M` written in the coordinates of the base
    /// lattice; entries may be proper fractions.
    pub basis_in_base: RatMatrix,
    /// `[M : L]`, equal to the order of the glue group.
    pub index: BigInt,
    /// The nonzero elements of `M/L ⊆ L^∨/L`, each as a coordinate vector
    /// with entries in `[0, 1)`, sorted.
    pub glue: Vec<Vec<BigRational>>,
}

/// Coset representative with every coordinate in `[0, 1)`.
fn reduce_mod_z(v: &[BigRational]) -> Vec<BigRational> {
    v.iter().map(|x| x - x.floor()).collect()
}

fn add_cosets(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let sum: Vec<BigRational> = a.iter().zip(b).map(|(x, y)| x + y).collect();
    reduce_mod_z(&sum)
}

/// Close a generating set (which must contain 0) under addition. A finite
/// subset of a finite abelian group that is closed under addition and
/// contains 0 is a subgroup, so no explicit inverses are needed.
fn subgroup_closure(generators: &BTreeSet<Vec<BigRational>>) -> BTreeSet<Vec<BigRational>> {
    let mut set = generators.clone();
    loop {
        let mut fresh = Vec::new();
        for a in &set {
            for b in &set {
                let s = add_cosets(a, b);
                if !set.contains(&s) {
                    fresh.push(s);
                }
            }
        }
        if fresh.is_empty() {
            return set;
        }
        set.extend(fresh);
    }
}

/// Every even overlattice `L ⊆ M ⊆ L^∨` of an even non-degenerate lattice,
/// including `L` itself, with the capacity bound taken from the
/// [`DISC_CAPACITY_ENV`] environment variable (default
/// [`DEFAULT_DISC_CAPACITY`]).
///
/// Overlattices correspond to subgroups `H = M/L` of the discriminant group
/// on which `q(x) = xᵀ·G·x mod 2Z` vanishes identically; vanishing of `q` on
/// all of `H` already forces the pairing to be integral on `H`, so a single
/// condition drives the whole enumeration. Results are deduplicated by the
/// subgroup and sorted by (index, glue), which puts `L` first.
pub fn enumerate_even_overlattices(l: &Lattice) -> Result<Vec<EvenOverlattice>, LatticeError> {
    let capacity = env::var(DISC_CAPACITY_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_DISC_CAPACITY);
    enumerate_even_overlattices_with_capacity(l, capacity)
}

/// [`enumerate_even_overlattices`] with an explicit bound on `|L^∨/L|`.
pub fn enumerate_even_overlattices_with_capacity(
    l: &Lattice,
    capacity: u64,
) -> Result<Vec<EvenOverlattice>, LatticeError> {
    l.even_check()?;
    let disc = l.discriminant_group()?;
    if disc.order > BigInt::from(capacity) {
        return Err(LatticeError::CapacityExceeded {
            order: disc.order,
            bound: capacity,
        });
    }

    let n = l.rank();
    let snf = smith_normal_form(l.gram());
    // From u·G·v = d: the dual L^∨ is spanned by the columns of v scaled by
    // 1/dᵢ, and column i generates a cyclic factor of order dᵢ in L^∨/L.
    let mut elements: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]];
    for i in 0..n {
        let order = snf.d.at(i, i);
        if order.is_one() {
            continue;
        }
        let generator: Vec<BigRational> = (0..n)
            .map(|r| BigRational::new(snf.v.at(r, i).clone(), order.clone()))
            .collect();
        let mut extended = Vec::new();
        let mut multiple = vec![BigRational::zero(); n];
        let mut k = BigInt::zero();
        while &k < order {
            for e in &elements {
                extended.push(add_cosets(e, &multiple));
            }
            multiple = add_cosets(&multiple, &generator);
            k += 1;
        }
        elements = extended;
    }
    debug_assert_eq!(BigInt::from(elements.len()), disc.order);

    // q(x) ∈ 2Z picks out the cosets that may enter an even overlattice.
    let q_even = |x: &[BigRational]| -> bool {
        let q = l.pairing_rational(x, x);
        q.is_integer() && q.to_integer().is_even()
    };
    let even_elements: Vec<Vec<BigRational>> =
        elements.into_iter().filter(|e| q_even(e)).collect();

    // Grow isotropic subgroups one generator at a time. Any subgroup of an
    // isotropic subgroup is isotropic, so every target is reachable through
    // valid intermediate stages.
    let zero = vec![BigRational::zero(); n];
    let trivial: BTreeSet<Vec<BigRational>> = BTreeSet::from([zero]);
    let mut found = BTreeSet::from([trivial.clone()]);
    let mut queue = vec![trivial];
    while let Some(h) = queue.pop() {
        for g in &even_elements {
            if h.contains(g) {
                continue;
            }
            let mut gens = h.clone();
            gens.insert(g.clone());
            let closed = subgroup_closure(&gens);
            if closed.iter().all(|e| q_even(e)) && found.insert(closed.clone()) {
                queue.push(closed);
            }
        }
    }

    let mut out = Vec::new();
    for subgroup in found {
        // M = L + Z·(coset reps): stack the identity on the reps, scale to
        // integers, and read a canonical basis off the Hermite form.
        let reps: Vec<&Vec<BigRational>> = subgroup.iter().filter(|e| !is_zero_vec(e)).collect();
        let stacked = RatMatrix::from_fn(n + reps.len(), n, |i, j| {
            if i < n {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            } else {
                reps[i - n][j].clone()
            }
        });
        let denom = stacked.common_denominator();
        let scaled = IntMatrix::from_fn(stacked.rows(), n, |i, j| {
            (stacked.at(i, j) * BigRational::from_integer(denom.clone())).to_integer()
        });
        let (h, _) = hermite_normal_form(&scaled);
        let basis_in_base = RatMatrix::from_fn(n, n, |i, j| {
            BigRational::new(h.at(i, j).clone(), denom.clone())
        });

        let gram_rat = basis_in_base
            .mul(&l.gram().to_rational())
            .mul(&basis_in_base.transpose());
        let gram = gram_rat
            .to_integer()
            .expect("overlattice from an isotropic subgroup has an integral Gram matrix");
        let mut lattice = Lattice::new(gram).expect("Gram stays symmetric");
        assert!(
            lattice.is_even(),
            "overlattice from an isotropic subgroup must stay even"
        );
        let index = BigInt::from(subgroup.len());
        if index.is_one() {
            if let Some(label) = l.label() {
                lattice = lattice.with_label(label);
            }
        }
        let glue: Vec<Vec<BigRational>> = reps.into_iter().cloned().collect();
        out.push(EvenOverlattice {
            lattice,
            basis_in_base,
            index,
            glue,
        });
    }
    out.sort_by(|a, b| (&a.index, &a.glue).cmp(&(&b.index, &b.glue)));
    Ok(out)
}

fn is_zero_vec(v: &[BigRational]) -> bool {
    v.iter().all(Zero::is_zero)
}
