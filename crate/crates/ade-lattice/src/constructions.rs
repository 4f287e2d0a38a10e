//! A catalog of geometric constructions and the lattices they produce.
//!
//! Each [`Construction`] describes a smooth projective threefold `Y` sitting
//! inside an ambient space `X`, through small integer matrices
//! ([`HomologyData`]): a basis of 2-cycles on `Y`, their pairing (the
//! *negated* intersection numbers, so the interesting lattices come out
//! positive definite), and the pushforward of each basis class to `X`. The
//! *vanishing lattice* of the construction is the kernel of the pushforward
//! with the restricted pairing ([`vanishing_lattice`]); classifying its
//! norm-2 roots is what connects these models to the ADE world.
//!
//! Families covered: rational normal scrolls, three flavors of quadric
//! pencils (ordinary, extraordinary, and Veronese), del Pezzo threefolds of
//! degrees 3–8 (with the degree-6 prime variant), the quadric in `P⁴`, the
//! quadric section of the second Veronese embedding, and blowup extensions
//! that enlarge any base construction by `k` exceptional classes without
//! touching its kernel.
//!
//! [`expected_outcome`] records what each construction must classify to, and
//! [`ExpectedOutcome::matches`] checks a [`ClassificationReport`] against it;
//! [`theorem_filter`] keeps exactly the constructions whose root system is
//! `A1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_linalg::{kernel_basis_z, IntMatrix};
use crate::lattice::{enumerate_even_overlattices, Lattice, LatticeError};
use crate::roots::{classify, AdeType, ClassificationReport, RootsError};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("invalid parameter for {family}: {message}")]
    InvalidParameter { family: String, message: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Roots(#[from] RootsError),
}

/// Which del Pezzo threefold of degree 6: the generic one or its prime
/// (second) deformation class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DelPezzoVariant {
    Standard,
    Prime,
}

/// The supported construction families. Values are only built through the
/// validated [`Construction`] constructors, so parameters are always in
/// range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Rational normal scroll with second Chern number `c2 ≥ 1`.
    Scroll { c2: u32 },
    /// Pencil of quadrics with `m ≥ 1` ordinary degenerate members.
    OrdinaryQuadricPencil { m: u32 },
    /// Pencil of quadrics with `m ≥ 1` degenerate members of the second
    /// kind.
    ExtraordinaryQuadricPencil { m: u32 },
    /// Pencil of quadrics restricted to a Veronese surface, `m ≥ 1`.
    VeronesePencil { m: u32 },
    /// Del Pezzo threefold of the given degree (3–8); `Prime` only at
    /// degree 6.
    DelPezzo { degree: u32, variant: DelPezzoVariant },
    /// The smooth quadric hypersurface in `P⁴`.
    Quadric,
    /// Quadric section of the second Veronese embedding of `P³`.
    VeroneseQuadric,
    /// A base construction with `k ≥ 1` extra exceptional classes glued on;
    /// the vanishing lattice is untouched.
    BlowupExtension { base: Box<Construction>, k: u32 },
}

impl Family {
    /// Stable technical name plus parameters, used when no label is set.
    pub fn descriptor(&self) -> String {
        match self {
            Family::Scroll { c2 } => format!("scroll c2={c2}"),
            Family::OrdinaryQuadricPencil { m } => format!("ordinary-quadric-pencil m={m}"),
            Family::ExtraordinaryQuadricPencil { m } => {
                format!("extraordinary-quadric-pencil m={m}")
            }
            Family::VeronesePencil { m } => format!("veronese-pencil m={m}"),
            Family::DelPezzo {
                degree,
                variant: DelPezzoVariant::Standard,
            } => format!("del-pezzo degree={degree}"),
            Family::DelPezzo {
                variant: DelPezzoVariant::Prime,
                ..
            } => "del-pezzo-prime".to_string(),
            Family::Quadric => "quadric".to_string(),
            Family::VeroneseQuadric => "veronese-quadric".to_string(),
            Family::BlowupExtension { base, k } => {
                format!("blowup k={k} over [{}]", base.display_name())
            }
        }
    }
}

/// One entry of the catalog: a family with parameters, optionally labeled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub family: Family,
    pub label: Option<String>,
}

impl Construction {
    fn bare(family: Family) -> Self {
        Construction {
            family,
            label: None,
        }
    }

    fn invalid(family: &str, message: impl Into<String>) -> ConstructionError {
        ConstructionError::InvalidParameter {
            family: family.to_string(),
            message: message.into(),
        }
    }

    pub fn scroll(c2: u32) -> Result<Self, ConstructionError> {
        if c2 == 0 {
            return Err(Self::invalid("scroll", "c2 must be at least 1"));
        }
        Ok(Self::bare(Family::Scroll { c2 }))
    }

    pub fn ordinary_quadric_pencil(m: u32) -> Result<Self, ConstructionError> {
        if m == 0 {
            return Err(Self::invalid(
                "ordinary-quadric-pencil",
                "m must be at least 1",
            ));
        }
        Ok(Self::bare(Family::OrdinaryQuadricPencil { m }))
    }

    pub fn extraordinary_quadric_pencil(m: u32) -> Result<Self, ConstructionError> {
        if m == 0 {
            return Err(Self::invalid(
                "extraordinary-quadric-pencil",
                "m must be at least 1",
            ));
        }
        Ok(Self::bare(Family::ExtraordinaryQuadricPencil { m }))
    }

    pub fn veronese_pencil(m: u32) -> Result<Self, ConstructionError> {
        if m == 0 {
            return Err(Self::invalid("veronese-pencil", "m must be at least 1"));
        }
        Ok(Self::bare(Family::VeronesePencil { m }))
    }

    pub fn del_pezzo(degree: u32) -> Result<Self, ConstructionError> {
        if !(3..=8).contains(&degree) {
            return Err(Self::invalid("del-pezzo", "degree must be between 3 and 8"));
        }
        Ok(Self::bare(Family::DelPezzo {
            degree,
            variant: DelPezzoVariant::Standard,
        }))
    }

    /// The prime deformation class at degree 6.
    pub fn del_pezzo_prime() -> Self {
        Self::bare(Family::DelPezzo {
            degree: 6,
            variant: DelPezzoVariant::Prime,
        })
    }

    pub fn quadric() -> Self {
        Self::bare(Family::Quadric)
    }

    pub fn veronese_quadric() -> Self {
        Self::bare(Family::VeroneseQuadric)
    }

    pub fn blowup(base: Construction, k: u32) -> Result<Self, ConstructionError> {
        if k == 0 {
            return Err(Self::invalid("blowup", "k must be at least 1"));
        }
        Ok(Self::bare(Family::BlowupExtension {
            base: Box::new(base),
            k,
        }))
    }

    #[must_use]
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn display_name(&self) -> String {
        self.label
            .clone()
            .unwrap_or_else(|| self.family.descriptor())
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_name())
    }
}

/// The integer homology bookkeeping of one construction.
///
/// Invariants (maintained by [`build_homology`]): `pairing` is a symmetric
/// `y_rank × y_rank` matrix of negated intersection numbers, and
/// `pushforward` is `x_rank × y_rank`, sending a 2-cycle on `Y` (a coordinate
/// column) to its class in the ambient space.
#[derive(Clone, Debug)]
pub struct HomologyData {
    pub y_rank: usize,
    pub pairing: IntMatrix,
    pub x_rank: usize,
    pub pushforward: IntMatrix,
}

/// Pairing block shared by the quadric-pencil families: two hyperplane-type
/// classes `e`, `f` with `(e,e) = (f,f) = 0` and `(e,f) = -1`, followed by
/// `m` mutually orthogonal unit classes.
fn pencil_pairing(m: usize) -> IntMatrix {
    IntMatrix::from_fn(m + 2, m + 2, |i, j| match (i, j) {
        (0, 1) | (1, 0) => BigInt::from(-1),
        (i, j) if i == j && i >= 2 => BigInt::from(1),
        _ => BigInt::zero(),
    })
}

/// Cycle data of the blowdown model with `r` exceptional classes: a degree
/// class `h` with `(h,h) = -1` and `r` unit classes, pushing forward by
/// `h ↦ 3`, `lᵢ ↦ 1`.
fn blowdown_model(r: usize) -> HomologyData {
    let mut pairing = IntMatrix::identity(r + 1);
    pairing.set(0, 0, BigInt::from(-1));
    let pushforward = IntMatrix::from_fn(1, r + 1, |_, j| {
        BigInt::from(if j == 0 { 3 } else { 1 })
    });
    HomologyData {
        y_rank: r + 1,
        pairing,
        x_rank: 1,
        pushforward,
    }
}

/// `r` fiber classes pairing as the identity, all pushing forward to the
/// same ambient class.
fn scroll_model(r: usize) -> HomologyData {
    HomologyData {
        y_rank: r,
        pairing: IntMatrix::identity(r),
        x_rank: 1,
        pushforward: IntMatrix::from_fn(1, r, |_, _| BigInt::from(1)),
    }
}

/// Quadric-pencil cycle data where the ambient space sees the fiber class
/// doubled: `e ↦ (1,0)`, `f ↦ (0,2)`, `lⱼ ↦ (0,1)`.
fn ordinary_pencil_model(m: usize) -> HomologyData {
    let pushforward = IntMatrix::from_fn(2, m + 2, |i, j| {
        BigInt::from(match (i, j) {
            (0, 0) => 1,
            (1, 1) => 2,
            (1, j) if j >= 2 => 1,
            _ => 0,
        })
    });
    HomologyData {
        y_rank: m + 2,
        pairing: pencil_pairing(m),
        x_rank: 2,
        pushforward,
    }
}

/// Quadric-pencil cycle data with a third ambient class separating `f` from
/// the `lⱼ`: `e ↦ (1,0,0)`, `f ↦ (0,1,1)`, `lⱼ ↦ (0,1,0)`.
fn extraordinary_pencil_model(m: usize) -> HomologyData {
    let pushforward = IntMatrix::from_fn(3, m + 2, |i, j| {
        BigInt::from(match (i, j) {
            (0, 0) => 1,
            (1, 1) => 1,
            (1, j) if j >= 2 => 1,
            (2, 1) => 1,
            _ => 0,
        })
    });
    HomologyData {
        y_rank: m + 2,
        pairing: pencil_pairing(m),
        x_rank: 3,
        pushforward,
    }
}

/// Pencil data with no `e` class: a single isotropic class `f` and `m` unit
/// classes, pushing forward by `f ↦ 2`, `lⱼ ↦ 1`.
fn veronese_pencil_model(m: usize) -> HomologyData {
    let pairing = IntMatrix::from_fn(m + 1, m + 1, |i, j| {
        BigInt::from(if i == j && i >= 1 { 1 } else { 0 })
    });
    let pushforward = IntMatrix::from_fn(1, m + 1, |_, j| {
        BigInt::from(if j == 0 { 2 } else { 1 })
    });
    HomologyData {
        y_rank: m + 1,
        pairing,
        x_rank: 1,
        pushforward,
    }
}

/// Build the cycle data of a construction. Total on validated constructions.
#[must_use]
pub fn build_homology(c: &Construction) -> HomologyData {
    match &c.family {
        Family::Scroll { c2 } => scroll_model(*c2 as usize),
        Family::OrdinaryQuadricPencil { m } => ordinary_pencil_model(*m as usize),
        Family::ExtraordinaryQuadricPencil { m } => extraordinary_pencil_model(*m as usize),
        Family::VeronesePencil { m } => veronese_pencil_model(*m as usize),
        Family::DelPezzo { degree, variant } => match (degree, variant) {
            (3..=5, _) => blowdown_model((9 - degree) as usize),
            (6, DelPezzoVariant::Standard) => extraordinary_pencil_model(2),
            (6, DelPezzoVariant::Prime) => scroll_model(3),
            (7, _) => scroll_model(2),
            (8, _) => HomologyData {
                // Two ruling classes swapped by the pairing, both mapping to
                // the ambient generator.
                y_rank: 2,
                pairing: IntMatrix::from_rows(&[vec![0, -1], vec![-1, 0]]),
                x_rank: 1,
                pushforward: IntMatrix::from_rows(&[vec![1, 1]]),
            },
            _ => unreachable!("constructors keep the degree between 3 and 8"),
        },
        Family::Quadric => HomologyData {
            // One class of self-pairing 2 and nothing to push forward to:
            // the whole line is the kernel.
            y_rank: 1,
            pairing: IntMatrix::from_rows(&[vec![2]]),
            x_rank: 0,
            pushforward: IntMatrix::zero(0, 1),
        },
        Family::VeroneseQuadric => blowdown_model(5),
        Family::BlowupExtension { base, k } => {
            let inner = build_homology(base);
            let k = *k as usize;
            let y = inner.y_rank + k;
            let pairing = IntMatrix::from_fn(y, y, |i, j| {
                if i < inner.y_rank && j < inner.y_rank {
                    inner.pairing.at(i, j).clone()
                } else if i == j {
                    BigInt::from(1)
                } else {
                    BigInt::zero()
                }
            });
            let x = inner.x_rank + k;
            let pushforward = IntMatrix::from_fn(x, y, |i, j| {
                if i < inner.x_rank && j < inner.y_rank {
                    inner.pushforward.at(i, j).clone()
                } else if i >= inner.x_rank && j >= inner.y_rank && i - inner.x_rank == j - inner.y_rank {
                    BigInt::from(1)
                } else {
                    BigInt::zero()
                }
            });
            HomologyData {
                y_rank: y,
                pairing,
                x_rank: x,
                pushforward,
            }
        }
    }
}

/// The kernel of the pushforward with the restricted pairing, as a lattice
/// on the Hermite-canonical kernel basis. Errors when the restricted form is
/// not positive definite (which includes the degenerate case).
pub fn vanishing_lattice(h: &HomologyData) -> Result<Lattice, LatticeError> {
    let kernel = kernel_basis_z(&h.pushforward);
    let gram = kernel.mul(&h.pairing).mul(&kernel.transpose());
    let lattice = Lattice::new(gram)?;
    lattice.positive_definite_check()?;
    Ok(lattice)
}

/// Basis of the blowdown-model kernel in closed form: `λ₁ = 3l₁ − h` and
/// `λⱼ = l₁ − lⱼ` for `j = 2..r`, as rows in the `(h, l₁, …, l_r)`
/// coordinates. Spans the full kernel of the pushforward, and its Gram
/// matrix is exactly [`structured_matrix`]`(8, 3, 2, 1, r)`.
#[must_use]
pub fn blowdown_lambda_basis(r: usize) -> IntMatrix {
    assert!(r >= 2, "the lambda basis needs at least two exceptional classes");
    IntMatrix::from_fn(r, r + 1, |i, j| {
        BigInt::from(match (i, j) {
            (0, 0) => -1,
            (0, 1) => 3,
            (i, 1) if i >= 1 => 1,
            (i, j) if i >= 1 && j == i + 1 => -1,
            _ => 0,
        })
    })
}

/// The `r × r` matrix with corner `a`, first row and column `b`, remaining
/// diagonal `c`, and all other entries `d`.
#[must_use]
pub fn structured_matrix(a: i64, b: i64, c: i64, d: i64, r: usize) -> IntMatrix {
    IntMatrix::from_fn(r, r, |i, j| {
        BigInt::from(match (i, j) {
            (0, 0) => a,
            (0, _) | (_, 0) => b,
            (i, j) if i == j => c,
            _ => d,
        })
    })
}

/// Determinant of [`structured_matrix`] in closed form:
/// `(c − d)^(r−2) · (a·(c + (r−2)·d) − (r−1)·b²)`.
///
/// # Panics
///
/// Panics when `r < 2`; the closed form starts at `r = 2`.
#[must_use]
pub fn structured_det(a: i64, b: i64, c: i64, d: i64, r: usize) -> BigInt {
    assert!(r >= 2, "closed form requires r >= 2");
    let (a, b, c, d) = (
        BigInt::from(a),
        BigInt::from(b),
        BigInt::from(c),
        BigInt::from(d),
    );
    let r_big = BigInt::from(r as u64);
    (&c - &d).pow((r - 2) as u32)
        * (a * (&c + (&r_big - 2) * &d) - (&r_big - 1) * (&b * &b))
}

/// What a construction's classification must look like.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "types", rename_all = "kebab-case")]
pub enum ExpectedOutcome {
    /// An irreducible root system with exactly these components, spanning
    /// the vanishing lattice.
    RootSystemType(Vec<AdeType>),
    /// The lattice alone does not pin down the root system: these are the
    /// component lists of its even overlattices, any of which could occur.
    AmbiguousOverlattice(Vec<Vec<AdeType>>),
    /// The construction has no vanishing cycles at all (rank-0 kernel).
    NotHypersurface,
    /// The parameters are numerically consistent but the classification
    /// rules the construction out: no roots, a reducible system, or roots
    /// that fail to span.
    Impossible,
}

impl ExpectedOutcome {
    /// Does a report satisfy this expectation?
    pub fn matches(&self, report: &ClassificationReport) -> bool {
        match self {
            ExpectedOutcome::NotHypersurface => report.rank == 0,
            ExpectedOutcome::Impossible => {
                report.root_count == 0
                    || report.components.len() != 1
                    || !report.roots_span_lattice
            }
            ExpectedOutcome::RootSystemType(types) => {
                report.components == *types
                    && report.roots_span_lattice
                    && report
                        .possible_overlattice_types
                        .as_ref()
                        .is_none_or(|sets| sets == &vec![types.clone()])
            }
            ExpectedOutcome::AmbiguousOverlattice(sets) => {
                report.roots_span_lattice
                    && report.possible_overlattice_types.as_ref() == Some(sets)
            }
        }
    }
}

impl fmt::Display for ExpectedOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(types: &[AdeType]) -> String {
            let parts: Vec<String> = types.iter().map(AdeType::to_string).collect();
            parts.join(" + ")
        }
        match self {
            ExpectedOutcome::RootSystemType(types) => write!(f, "root system {}", join(types)),
            ExpectedOutcome::AmbiguousOverlattice(sets) => {
                let parts: Vec<String> = sets.iter().map(|s| join(s)).collect();
                write!(f, "ambiguous overlattice {{{}}}", parts.join(", "))
            }
            ExpectedOutcome::NotHypersurface => write!(f, "not a hypersurface section"),
            ExpectedOutcome::Impossible => write!(f, "impossible"),
        }
    }
}

/// The expectation for each construction, in closed form over the validated
/// parameter space.
#[must_use]
pub fn expected_outcome(c: &Construction) -> ExpectedOutcome {
    use ExpectedOutcome::*;
    match &c.family {
        Family::Scroll { c2: 1 } => NotHypersurface,
        Family::Scroll { c2 } => RootSystemType(vec![AdeType::A(c2 - 1)]),
        Family::OrdinaryQuadricPencil { m: 1 | 2 } => Impossible,
        Family::OrdinaryQuadricPencil { m: 3 } => RootSystemType(vec![AdeType::A(3)]),
        Family::OrdinaryQuadricPencil { m } => RootSystemType(vec![AdeType::D(*m)]),
        Family::ExtraordinaryQuadricPencil { m: 1 } => Impossible,
        Family::ExtraordinaryQuadricPencil { m } => RootSystemType(vec![AdeType::A(m - 1)]),
        Family::VeronesePencil { m: 1 | 2 } => Impossible,
        Family::VeronesePencil { m: 3 } => RootSystemType(vec![AdeType::A(3)]),
        Family::VeronesePencil { m: 8 } => {
            AmbiguousOverlattice(vec![vec![AdeType::D(8)], vec![AdeType::E(8)]])
        }
        Family::VeronesePencil { m } => RootSystemType(vec![AdeType::D(*m)]),
        Family::DelPezzo { degree, variant } => match (degree, variant) {
            (3, _) => RootSystemType(vec![AdeType::E(6)]),
            (4, _) => RootSystemType(vec![AdeType::D(5)]),
            (5, _) => RootSystemType(vec![AdeType::A(4)]),
            (6, DelPezzoVariant::Standard) => RootSystemType(vec![AdeType::A(1)]),
            (6, DelPezzoVariant::Prime) => RootSystemType(vec![AdeType::A(2)]),
            (7, _) => RootSystemType(vec![AdeType::A(1)]),
            (8, _) => RootSystemType(vec![AdeType::A(1)]),
            _ => unreachable!("constructors keep the degree between 3 and 8"),
        },
        Family::Quadric => RootSystemType(vec![AdeType::A(1)]),
        Family::VeroneseQuadric => RootSystemType(vec![AdeType::D(5)]),
        Family::BlowupExtension { base, .. } => expected_outcome(base),
    }
}

/// Classify the vanishing lattice of a construction. For the Veronese-pencil
/// family the report also carries the component types of every even
/// overlattice, because there the lattice alone can leave several root
/// systems possible.
pub fn classify_construction(c: &Construction) -> Result<ClassificationReport, ConstructionError> {
    let homology = build_homology(c);
    let lattice = vanishing_lattice(&homology)?;
    let mut report = classify(&lattice)?;
    if matches!(c.family, Family::VeronesePencil { .. }) {
        let overlattices = enumerate_even_overlattices(&lattice)?;
        let mut type_sets: Vec<Vec<AdeType>> = Vec::new();
        for entry in &overlattices {
            let components = classify(&entry.lattice)?.components;
            if !type_sets.contains(&components) {
                type_sets.push(components);
            }
        }
        type_sets.sort();
        report.possible_overlattice_types = Some(type_sets);
    }
    Ok(report)
}

/// Canonical variety name used to merge constructions that present the same
/// threefold through different cycle models. Constructions without a known
/// coincidence keep their own display name.
#[must_use]
pub fn variety_identity(c: &Construction) -> String {
    match &c.family {
        Family::Quadric => "quadric threefold in P4".to_string(),
        Family::DelPezzo { degree: 8, .. } => "second Veronese embedding of P3".to_string(),
        Family::DelPezzo { degree: 7, .. } | Family::Scroll { c2: 2 } => {
            "blowup of P3 at a point".to_string()
        }
        Family::DelPezzo {
            degree: 6,
            variant: DelPezzoVariant::Standard,
        }
        | Family::ExtraordinaryQuadricPencil { m: 2 } => {
            "product of three projective lines".to_string()
        }
        _ => c.display_name(),
    }
}

/// Keep exactly the constructions whose vanishing lattice classifies as a
/// single `A1` — one component of that type, with the roots spanning the
/// lattice (a reducible system, or an `A1` living inside a bigger kernel,
/// does not count). No deduplication happens here; callers that want one
/// entry per variety group by [`variety_identity`].
pub fn theorem_filter(catalog: &[Construction]) -> Result<Vec<Construction>, ConstructionError> {
    let mut survivors = Vec::new();
    for c in catalog {
        let report = classify_construction(c)?;
        if report.components == vec![AdeType::A(1)] && report.roots_span_lattice {
            survivors.push(c.clone());
        }
    }
    Ok(survivors)
}

/// The seven del Pezzo rows of the standard table, in degree order.
#[must_use]
pub fn del_pezzo_table() -> Vec<Construction> {
    vec![
        Construction::del_pezzo(3)
            .expect("degree 3 is valid")
            .with_label("V3: cubic threefold"),
        Construction::del_pezzo(4)
            .expect("degree 4 is valid")
            .with_label("V4: intersection of two quadrics"),
        Construction::del_pezzo(5)
            .expect("degree 5 is valid")
            .with_label("V5: section of Gr(2,5)"),
        Construction::del_pezzo(6)
            .expect("degree 6 is valid")
            .with_label("V6: product of three projective lines"),
        Construction::del_pezzo_prime().with_label("V6': flag threefold"),
        Construction::del_pezzo(7)
            .expect("degree 7 is valid")
            .with_label("V7: blowup of P3 at a point"),
        Construction::del_pezzo(8)
            .expect("degree 8 is valid")
            .with_label("V8: second Veronese of P3"),
    ]
}

/// The default catalog: every family over its standard parameter range.
#[must_use]
pub fn default_catalog() -> Vec<Construction> {
    let mut catalog = vec![Construction::quadric().with_label("quadric in P4")];
    for r in 1..=9 {
        catalog.push(Construction::scroll(r).expect("r >= 1"));
    }
    for m in 1..=9 {
        catalog.push(Construction::ordinary_quadric_pencil(m).expect("m >= 1"));
    }
    for m in 2..=9 {
        catalog.push(Construction::extraordinary_quadric_pencil(m).expect("m >= 1"));
    }
    for m in 1..=12 {
        catalog.push(Construction::veronese_pencil(m).expect("m >= 1"));
    }
    catalog.extend(del_pezzo_table());
    catalog.push(Construction::veronese_quadric().with_label("quadric section of v2(P3)"));
    catalog.push(
        Construction::blowup(Construction::veronese_quadric(), 1)
            .expect("k >= 1")
            .with_label("blowup of the v2(P3) quadric section"),
    );
    catalog.push(
        Construction::blowup(
            Construction::del_pezzo(4).expect("degree 4 is valid"),
            1,
        )
        .expect("k >= 1")
        .with_label("blowup of V4"),
    );
    catalog
}
