//! Root systems of positive definite even lattices.
//!
//! The roots of a lattice are its vectors of norm 2. Everything downstream
//! follows from enumerating them exactly:
//!
//! * [`enumerate_roots`] — all norm-2 vectors, found by completing the
//!   quadratic form to a weighted sum of squares over the rationals and
//!   searching coordinate ranges exactly (no floating point, no square
//!   roots);
//! * [`RootSystem`] — the roots plus a set of simple roots (indecomposable
//!   positive roots for a fixed linear functional) and their Cartan matrix;
//! * [`classify`] — splits the simple-root graph into connected components
//!   and reads each component's type off its arm shape: a path is `A(n)`, a
//!   single degree-3 node with arm lengths (1,1,k) is `D(n)`, and
//!   (1,2,2)/(1,2,3)/(1,2,4) are `E6`/`E7`/`E8`; no other shape can occur
//!   for a positive definite form;
//! * [`verify_root_axioms`] — checks the defining properties of a root
//!   system on an explicit set of vectors and reports the first violation
//!   with a witness;
//! * [`weyl_orbit_is_transitive`] — closes one root under the simple
//!   reflections and compares against the full set.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_linalg::{hermite_normal_form, IntMatrix};
use crate::lattice::{Lattice, LatticeError};

#[derive(Debug, Error)]
pub enum RootsError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("the lattice has no vectors of norm 2")]
    NoRoots,
    #[error("the root system is reducible ({components} components); orbits are per component")]
    Reducible { components: usize },
}

/// Isomorphism type of an irreducible simply-laced root system.
///
/// Valid parameters are `A(n)` for n ≥ 1, `D(n)` for n ≥ 4 (the rank-3
/// branch shape is the same lattice as `A(3)` and is reported as such), and
/// `E(6)`, `E(7)`, `E(8)`.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(into = "String", try_from = "String")]
pub enum AdeType {
    A(u32),
    D(u32),
    E(u32),
}

impl AdeType {
    pub fn rank(&self) -> u32 {
        match *self {
            AdeType::A(n) | AdeType::D(n) | AdeType::E(n) => n,
        }
    }

    /// Number of roots, in closed form.
    pub fn root_count(&self) -> u64 {
        match *self {
            AdeType::A(n) => u64::from(n) * (u64::from(n) + 1),
            AdeType::D(n) => 2 * u64::from(n) * (u64::from(n) - 1),
            AdeType::E(6) => 72,
            AdeType::E(7) => 126,
            AdeType::E(8) => 240,
            AdeType::E(n) => unreachable!("E({n}) is not a root system"),
        }
    }

    /// Order of the discriminant group of the root lattice.
    pub fn disc_order(&self) -> u64 {
        match *self {
            AdeType::A(n) => u64::from(n) + 1,
            AdeType::D(_) => 4,
            AdeType::E(6) => 3,
            AdeType::E(7) => 2,
            AdeType::E(8) => 1,
            AdeType::E(n) => unreachable!("E({n}) is not a root system"),
        }
    }

    /// Order of the Weyl group, in closed form.
    pub fn weyl_order(&self) -> BigInt {
        fn factorial(n: u32) -> BigInt {
            (1..=n).map(BigInt::from).product()
        }
        match *self {
            AdeType::A(n) => factorial(n + 1),
            AdeType::D(n) => BigInt::from(2).pow(n - 1) * factorial(n),
            AdeType::E(6) => BigInt::from(51_840),
            AdeType::E(7) => BigInt::from(2_903_040),
            AdeType::E(8) => BigInt::from(696_729_600),
            AdeType::E(n) => unreachable!("E({n}) is not a root system"),
        }
    }

    /// Recover the type from the lattice rank and discriminant-group order
    /// alone. `A(3)` and the rank-3 branch shape coincide, and the `A` family
    /// wins every such tie, so the answer is unambiguous. Used as a
    /// cross-check against the diagram-shape classification.
    pub fn from_rank_and_disc(rank: u32, disc: u64) -> Option<AdeType> {
        if rank >= 1 && disc == u64::from(rank) + 1 {
            return Some(AdeType::A(rank));
        }
        match (rank, disc) {
            (6, 3) => Some(AdeType::E(6)),
            (7, 2) => Some(AdeType::E(7)),
            (8, 1) => Some(AdeType::E(8)),
            (n, 4) if n >= 4 => Some(AdeType::D(n)),
            _ => None,
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AdeType::A(n) => write!(f, "A{n}"),
            AdeType::D(n) => write!(f, "D{n}"),
            AdeType::E(n) => write!(f, "E{n}"),
        }
    }
}

impl From<AdeType> for String {
    fn from(t: AdeType) -> String {
        t.to_string()
    }
}

impl FromStr for AdeType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (letter, digits) = s.split_at(1);
        let n: u32 = digits
            .parse()
            .map_err(|_| format!("malformed type '{s}': expected a letter and a number"))?;
        match letter {
            "A" | "a" if n >= 1 => Ok(AdeType::A(n)),
            "D" | "d" if n >= 4 => Ok(AdeType::D(n)),
            "E" | "e" if (6..=8).contains(&n) => Ok(AdeType::E(n)),
            _ => Err(format!("'{s}' is not an irreducible simply-laced type")),
        }
    }
}

impl TryFrom<String> for AdeType {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// All vectors of norm 2, sorted lexicographically (hence closed under
/// negation in a visible way: `-r` appears iff `r` does, and it always does).
///
/// The form is completed to `Q(x) = Σ dᵢ·(xᵢ + Σ_{j>i} uᵢⱼ·xⱼ)²` with
/// positive rational `dᵢ`; a depth-first search fixes coordinates from the
/// last to the first, and at each level the admissible integer range is
/// walked outward from the center of the parabola until the budget is
/// exceeded. Errors if the form is not positive definite.
pub fn enumerate_roots(l: &Lattice) -> Result<Vec<Vec<BigInt>>, LatticeError> {
    l.positive_definite_check()?;
    let n = l.rank();
    if n == 0 {
        return Ok(Vec::new());
    }

    // Lagrange completion of the form into weighted squares.
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(l.gram().at(i, j).clone()))
                .collect()
        })
        .collect();
    let mut d = vec![BigRational::zero(); n];
    let mut u = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        d[i] = a[i][i].clone();
        debug_assert!(d[i].is_positive(), "Schur complement of a definite form");
        for j in i + 1..n {
            u[i][j] = &a[i][j] / &d[i];
        }
        for r in i + 1..n {
            for c in i + 1..n {
                let corr = &d[i] * &u[i][r] * &u[i][c];
                a[r][c] = &a[r][c] - corr;
            }
        }
    }

    struct Search<'s> {
        d: &'s [BigRational],
        u: &'s [Vec<BigRational>],
        coords: Vec<BigInt>,
        out: Vec<Vec<BigInt>>,
    }

    impl Search<'_> {
        /// Choose coordinate `i - 1`; coordinates `i..n` are already fixed.
        fn descend(&mut self, i: usize, budget: &BigRational) {
            if i == 0 {
                if budget.is_zero() {
                    self.out.push(self.coords.clone());
                }
                return;
            }
            let idx = i - 1;
            let shift: BigRational = (i..self.coords.len())
                .map(|j| &self.u[idx][j] * BigRational::from_integer(self.coords[j].clone()))
                .sum();
            // dᵢ·(x + shift)² ≤ budget; walk both ways from the vertex.
            let center = (-&shift).floor().to_integer();
            let mut x = center.clone();
            loop {
                let off = BigRational::from_integer(x.clone()) + &shift;
                let term = &self.d[idx] * (&off * &off);
                if &term > budget {
                    break;
                }
                self.coords[idx] = x.clone();
                self.descend(idx, &(budget - term));
                x -= 1;
            }
            let mut x = center + BigInt::one();
            loop {
                let off = BigRational::from_integer(x.clone()) + &shift;
                let term = &self.d[idx] * (&off * &off);
                if &term > budget {
                    break;
                }
                self.coords[idx] = x.clone();
                self.descend(idx, &(budget - term));
                x += 1;
            }
            self.coords[idx] = BigInt::zero();
        }
    }

    let mut search = Search {
        d: &d,
        u: &u,
        coords: vec![BigInt::zero(); n],
        out: Vec::new(),
    };
    search.descend(n, &BigRational::from_integer(BigInt::from(2)));
    let mut roots = search.out;
    roots.sort();
    Ok(roots)
}

/// `x ↦ x − (x, τ)·τ` for a norm-2 vector τ: the reflection fixing the
/// hyperplane orthogonal to τ.
pub fn reflect(l: &Lattice, tau: &[BigInt], x: &[BigInt]) -> Vec<BigInt> {
    debug_assert_eq!(l.norm(&tau.to_vec()), BigInt::from(2));
    let c = l.pairing(x, tau);
    x.iter().zip(tau).map(|(xi, ti)| xi - &c * ti).collect()
}

/// Indices (into the lex-sorted root list) of the simple roots: the
/// indecomposable elements of the positive half.
///
/// Positivity is decided by the functional `φ(x) = Σ xⱼ·Bʲ` with
/// `B = 1 + max |coordinate|`: no root can satisfy `φ = 0`, because the
/// highest nonzero digit of a balanced base-`B` expansion dominates the rest.
fn simple_root_indices(roots: &[Vec<BigInt>]) -> Vec<usize> {
    if roots.is_empty() {
        return Vec::new();
    }
    let n = roots[0].len();
    let base = roots
        .iter()
        .flat_map(|r| r.iter())
        .map(Signed::abs)
        .max()
        .unwrap_or_else(BigInt::zero)
        + 1;
    let powers: Vec<BigInt> = (0..n)
        .scan(BigInt::one(), |p, _| {
            let cur = p.clone();
            *p = &*p * &base;
            Some(cur)
        })
        .collect();
    let phi = |x: &[BigInt]| -> BigInt { x.iter().zip(&powers).map(|(a, b)| a * b).sum() };

    let positive: Vec<usize> = (0..roots.len())
        .filter(|&i| phi(&roots[i]).is_positive())
        .collect();
    let positive_set: BTreeSet<&[BigInt]> =
        positive.iter().map(|&i| roots[i].as_slice()).collect();
    positive
        .iter()
        .copied()
        .filter(|&i| {
            // α is decomposable iff α − β is again positive for some positive β.
            !positive.iter().any(|&j| {
                i != j && {
                    let diff: Vec<BigInt> =
                        roots[i].iter().zip(&roots[j]).map(|(a, b)| a - b).collect();
                    positive_set.contains(diff.as_slice())
                }
            })
        })
        .collect()
}

/// A positive definite lattice together with its norm-2 roots, a choice of
/// simple roots, and their Cartan matrix.
#[derive(Clone, Debug)]
pub struct RootSystem {
    lattice: Lattice,
    roots: Vec<Vec<BigInt>>,
    simple_roots: Vec<usize>,
    cartan: IntMatrix,
}

impl RootSystem {
    /// Errors with [`RootsError::NoRoots`] when the lattice has no norm-2
    /// vectors, and propagates definiteness failures.
    pub fn new(lattice: Lattice) -> Result<Self, RootsError> {
        let roots = enumerate_roots(&lattice)?;
        if roots.is_empty() {
            return Err(RootsError::NoRoots);
        }
        let simple_roots = simple_root_indices(&roots);
        let k = simple_roots.len();
        let cartan = IntMatrix::from_fn(k, k, |i, j| {
            lattice.pairing(&roots[simple_roots[i]], &roots[simple_roots[j]])
        });
        for i in 0..k {
            for j in 0..k {
                let e = cartan.at(i, j);
                if i == j {
                    assert_eq!(e, &BigInt::from(2), "simple roots have norm 2");
                } else {
                    assert!(
                        e.is_zero() || e == &BigInt::from(-1),
                        "distinct simple roots pair to 0 or -1 in a norm-2 system"
                    );
                }
            }
        }
        Ok(RootSystem {
            lattice,
            roots,
            simple_roots,
            cartan,
        })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn roots(&self) -> &[Vec<BigInt>] {
        &self.roots
    }

    /// Indices of the simple roots in [`Self::roots`].
    pub fn simple_roots(&self) -> &[usize] {
        &self.simple_roots
    }

    pub fn simple_root_vectors(&self) -> Vec<&Vec<BigInt>> {
        self.simple_roots.iter().map(|&i| &self.roots[i]).collect()
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn verify_axioms(&self) -> AxiomVerdict {
        verify_root_axioms(&self.lattice, &self.roots)
    }

    /// Connected components of the simple-root graph, as index sets into
    /// [`Self::simple_roots`].
    fn component_index_sets(&self) -> Vec<Vec<usize>> {
        let k = self.simple_roots.len();
        let mut seen = vec![false; k];
        let mut comps = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in 0..k {
                    if !seen[w] && !self.cartan.at(v, w).is_zero() {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

/// The defining properties of a norm-2 root system, checked on explicit data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootAxiom {
    /// Every element is a nonzero vector of norm 2.
    NonzeroNormTwo,
    /// The reflection in any element maps the set into itself.
    ReflectionClosure,
    /// All pairwise pairings are integers (automatic for an integer Gram
    /// matrix, checked for completeness).
    IntegralPairings,
}

impl fmt::Display for RootAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootAxiom::NonzeroNormTwo => write!(f, "nonzero-norm-two"),
            RootAxiom::ReflectionClosure => write!(f, "reflection-closure"),
            RootAxiom::IntegralPairings => write!(f, "integral-pairings"),
        }
    }
}

/// Outcome of [`verify_root_axioms`]: either a clean pass, or the first
/// failing axiom with a human-readable witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomVerdict {
    Pass,
    Fail { axiom: RootAxiom, detail: String },
}

impl AxiomVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, AxiomVerdict::Pass)
    }
}

fn fmt_vec(v: &[BigInt]) -> String {
    let body: Vec<String> = v.iter().map(BigInt::to_string).collect();
    format!("({})", body.join(", "))
}

/// Check the root-system axioms on an explicit vector set and report the
/// first violation with a witness. The vectors need not come from
/// [`enumerate_roots`]; deliberately mutated sets are the intended input.
pub fn verify_root_axioms(l: &Lattice, roots: &[Vec<BigInt>]) -> AxiomVerdict {
    let two = BigInt::from(2);
    for r in roots {
        if r.iter().all(Zero::is_zero) {
            return AxiomVerdict::Fail {
                axiom: RootAxiom::NonzeroNormTwo,
                detail: "the zero vector is in the set".to_string(),
            };
        }
        let norm = l.norm(r);
        if norm != two {
            return AxiomVerdict::Fail {
                axiom: RootAxiom::NonzeroNormTwo,
                detail: format!("{} has norm {norm}, want 2", fmt_vec(r)),
            };
        }
    }
    // Pairings of lattice vectors are integers by construction; the loop
    // doubles as the reflection-closure sweep.
    let set: BTreeSet<&[BigInt]> = roots.iter().map(Vec::as_slice).collect();
    for tau in roots {
        for rho in roots {
            let image = reflect(l, tau, rho);
            if !set.contains(image.as_slice()) {
                return AxiomVerdict::Fail {
                    axiom: RootAxiom::ReflectionClosure,
                    detail: format!(
                        "reflecting {} in {} gives {}, which is not in the set",
                        fmt_vec(rho),
                        fmt_vec(tau),
                        fmt_vec(&image)
                    ),
                };
            }
        }
    }
    AxiomVerdict::Pass
}

/// Everything [`classify`] reports about one lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub rank: usize,
    /// `|det G|` = order of the discriminant group.
    #[serde(with = "bigint_decimal")]
    pub disc: BigInt,
    pub root_count: usize,
    /// Irreducible components, sorted (A before D before E, then by rank).
    pub components: Vec<AdeType>,
    /// Do the roots span the full lattice over Z (not merely a finite-index
    /// sublattice)?
    pub roots_span_lattice: bool,
    /// Product of the component Weyl orders.
    #[serde(with = "bigint_decimal")]
    pub weyl_order: BigInt,
    /// Component types of each even overlattice's root system, deduplicated
    /// and sorted; `None` when no overlattice analysis was requested.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub possible_overlattice_types: Option<Vec<Vec<AdeType>>>,
}

/// Serialize a `BigInt` as a decimal string so JSON stays lossless at any
/// magnitude.
pub(crate) mod bigint_decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| D::Error::custom("expected a decimal integer string"))
    }
}

impl ClassificationReport {
    /// `true` when the lattice has no roots at all.
    pub fn is_rootless(&self) -> bool {
        self.root_count == 0
    }
}

/// Type of one connected component of the simple-root graph, read off the
/// arm structure around the unique branch node (if any).
fn component_type(cartan: &IntMatrix, comp: &[usize]) -> AdeType {
    let n = comp.len();
    let adj = |a: usize, b: usize| -> bool { !cartan.at(comp[a], comp[b]).is_zero() };
    let degree = |a: usize| -> usize { (0..n).filter(|&b| b != a && adj(a, b)).count() };

    let edge_count: usize = (0..n).map(degree).sum::<usize>() / 2;
    assert_eq!(
        edge_count,
        n - 1,
        "a definite simple-root graph is a tree"
    );

    let branch_nodes: Vec<usize> = (0..n).filter(|&a| degree(a) >= 3).collect();
    match branch_nodes.as_slice() {
        [] => AdeType::A(n as u32),
        [b] => {
            assert_eq!(degree(*b), 3, "branch node of valence > 3 cannot be definite");
            // Walk each arm away from the branch node and record its length.
            let mut arms: Vec<u32> = (0..n)
                .filter(|&x| x != *b && adj(*b, x))
                .map(|first| {
                    let mut len = 1;
                    let mut prev = *b;
                    let mut cur = first;
                    while let Some(next) =
                        (0..n).find(|&x| x != prev && x != cur && adj(cur, x))
                    {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => AdeType::D(n as u32),
                [1, 2, 2] => AdeType::E(6),
                [1, 2, 3] => AdeType::E(7),
                [1, 2, 4] => AdeType::E(8),
                other => unreachable!("arm shape {other:?} cannot come from a definite form"),
            }
        }
        more => unreachable!("{} branch nodes in one definite component", more.len()),
    }
}

/// Full classification of the norm-2 root system of a positive definite
/// integral lattice. A rootless lattice yields a report with no components,
/// not an error.
pub fn classify(l: &Lattice) -> Result<ClassificationReport, RootsError> {
    let disc = if l.rank() == 0 {
        BigInt::one()
    } else {
        l.discriminant_group()?.order
    };
    let roots = enumerate_roots(l)?;
    if roots.is_empty() {
        return Ok(ClassificationReport {
            rank: l.rank(),
            disc,
            root_count: 0,
            components: Vec::new(),
            roots_span_lattice: l.rank() == 0,
            weyl_order: BigInt::one(),
            possible_overlattice_types: None,
        });
    }

    let rs = RootSystem::new(l.clone())?;
    let mut components: Vec<AdeType> = rs
        .component_index_sets()
        .iter()
        .map(|comp| component_type(&rs.cartan, comp))
        .collect();
    components.sort_unstable();

    let total_roots: u64 = components.iter().map(AdeType::root_count).sum();
    assert_eq!(
        total_roots,
        roots.len() as u64,
        "component root counts must add up to the enumeration"
    );
    let weyl_order: BigInt = components.iter().map(AdeType::weyl_order).product();

    // The roots span the lattice over Z exactly when the Hermite form of the
    // stacked root vectors starts with the identity block.
    let stacked = IntMatrix::from_fn(roots.len(), l.rank(), |i, j| roots[i][j].clone());
    let (h, _) = hermite_normal_form(&stacked);
    let roots_span_lattice = (0..l.rank()).all(|i| {
        (0..l.rank()).all(|j| {
            let want = if i == j { BigInt::one() } else { BigInt::zero() };
            h.at(i, j) == &want
        })
    });

    Ok(ClassificationReport {
        rank: l.rank(),
        disc,
        root_count: roots.len(),
        components,
        roots_span_lattice,
        weyl_order,
        possible_overlattice_types: None,
    })
}

/// Does the Weyl group (generated by the simple reflections) act
/// transitively on the roots? Errors on a reducible system, where the honest
/// answer is per component.
pub fn weyl_orbit_is_transitive(rs: &RootSystem) -> Result<bool, RootsError> {
    let comps = rs.component_index_sets();
    if comps.len() != 1 {
        return Err(RootsError::Reducible {
            components: comps.len(),
        });
    }
    let simple: Vec<&Vec<BigInt>> = rs.simple_root_vectors();
    let mut orbit: BTreeSet<Vec<BigInt>> = BTreeSet::from([rs.roots[0].clone()]);
    let mut queue = vec![rs.roots[0].clone()];
    while let Some(v) = queue.pop() {
        for s in &simple {
            let image = reflect(&rs.lattice, s, &v);
            if orbit.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    Ok(orbit.len() == rs.roots.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::IntMatrix;

    fn lattice(rows: &[Vec<i64>]) -> Lattice {
        Lattice::new(IntMatrix::from_rows(rows)).unwrap()
    }

    /// Gram = Cartan matrix of the path with n nodes.
    fn path_gram(n: usize) -> Lattice {
        let gram = IntMatrix::from_fn(n, n, |i, j| {
            BigInt::from(match i.abs_diff(j) {
                0 => 2,
                1 => -1,
                _ => 0,
            })
        });
        Lattice::new(gram).unwrap()
    }

    /// Gram = Cartan matrix of the branch diagram with n nodes and arm
    /// lengths (1, 1, n−3): a path 0–1–…–(n−2) plus node n−1 attached to
    /// node n−3.
    fn branched_gram(n: usize) -> Lattice {
        assert!(n >= 4);
        let mut gram = path_gram(n - 1).gram().clone();
        let mut full = IntMatrix::from_fn(n, n, |i, j| {
            if i < n - 1 && j < n - 1 {
                gram.at(i, j).clone()
            } else {
                BigInt::zero()
            }
        });
        full.set(n - 1, n - 1, BigInt::from(2));
        full.set(n - 1, n - 3, BigInt::from(-1));
        full.set(n - 3, n - 1, BigInt::from(-1));
        gram = full;
        Lattice::new(gram).unwrap()
    }

    /// Gram = Cartan matrix of E6/E7/E8: a path 0–1–…–(n−2) with node n−1
    /// attached to node 2, giving sorted arm lengths (1, 2, n−4).
    fn exceptional_gram(n: usize) -> Lattice {
        assert!((6..=8).contains(&n));
        let mut full = IntMatrix::from_fn(n, n, |i, j| {
            if i < n - 1 && j < n - 1 {
                BigInt::from(match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
            } else {
                BigInt::zero()
            }
        });
        full.set(n - 1, n - 1, BigInt::from(2));
        full.set(n - 1, 2, BigInt::from(-1));
        full.set(2, n - 1, BigInt::from(-1));
        Lattice::new(full).unwrap()
    }

    /// Brute-force oracle: all vectors with coordinates in [-bound, bound]
    /// whose norm is 2.
    fn box_oracle(l: &Lattice, bound: i64) -> Vec<Vec<BigInt>> {
        let n = l.rank();
        let mut out = Vec::new();
        let mut coords = vec![0i64; n];
        fn rec(
            l: &Lattice,
            bound: i64,
            coords: &mut Vec<i64>,
            i: usize,
            out: &mut Vec<Vec<BigInt>>,
        ) {
            if i == coords.len() {
                let v: Vec<BigInt> = coords.iter().map(|&c| BigInt::from(c)).collect();
                if l.norm(&v) == BigInt::from(2) {
                    out.push(v);
                }
                return;
            }
            for c in -bound..=bound {
                coords[i] = c;
                rec(l, bound, coords, i + 1, out);
            }
        }
        rec(l, bound, &mut coords, 0, &mut out);
        out.sort();
        out
    }

    #[test]
    fn a2_roots_match_the_box_oracle() {
        let l = lattice(&[vec![2, -1], vec![-1, 2]]);
        let roots = enumerate_roots(&l).unwrap();
        assert_eq!(roots.len(), 6);
        assert_eq!(roots, box_oracle(&l, 3));
    }

    #[test]
    fn branched_rank4_roots_match_the_box_oracle() {
        let l = branched_gram(4);
        let roots = enumerate_roots(&l).unwrap();
        assert_eq!(roots.len(), 24);
        assert_eq!(roots, box_oracle(&l, 3));
    }

    #[test]
    fn roots_of_indefinite_form_are_refused() {
        let l = lattice(&[vec![1, 2], vec![2, 1]]);
        assert!(matches!(
            enumerate_roots(&l),
            Err(LatticeError::NotPositiveDefinite { minor_index: 2, .. })
        ));
    }

    #[test]
    fn rootless_lattice_enumerates_empty() {
        let l = lattice(&[vec![4]]);
        assert!(enumerate_roots(&l).unwrap().is_empty());
        assert!(matches!(RootSystem::new(l), Err(RootsError::NoRoots)));
    }

    #[test]
    fn a2_simple_roots_and_cartan() {
        let rs = RootSystem::new(lattice(&[vec![2, -1], vec![-1, 2]])).unwrap();
        assert_eq!(rs.simple_roots().len(), 2);
        let expected = IntMatrix::from_rows(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(rs.cartan(), &expected);
        assert!(rs.verify_axioms().is_pass());
    }

    #[test]
    fn classification_golden_values() {
        // (lattice, type, root count, disc, weyl order)
        let cases: Vec<(Lattice, AdeType, usize, u64, u64)> = vec![
            (path_gram(1), AdeType::A(1), 2, 2, 2),
            (path_gram(2), AdeType::A(2), 6, 3, 6),
            (path_gram(4), AdeType::A(4), 20, 5, 120),
            (branched_gram(4), AdeType::D(4), 24, 4, 192),
            (branched_gram(5), AdeType::D(5), 40, 4, 1920),
            (exceptional_gram(6), AdeType::E(6), 72, 3, 51840),
            (exceptional_gram(7), AdeType::E(7), 126, 2, 2903040),
            (exceptional_gram(8), AdeType::E(8), 240, 1, 696729600),
        ];
        for (l, ty, count, disc, weyl) in cases {
            let report = classify(&l).unwrap();
            assert_eq!(report.components, vec![ty], "type of {ty}");
            assert_eq!(report.root_count, count, "root count of {ty}");
            assert_eq!(report.disc, BigInt::from(disc), "disc of {ty}");
            assert_eq!(report.weyl_order, BigInt::from(weyl), "weyl order of {ty}");
            assert!(report.roots_span_lattice, "{ty} roots span their lattice");
            // Closed forms agree with the enumeration.
            assert_eq!(u64::from(ty.root_count()), count as u64);
            assert_eq!(ty.weyl_order(), BigInt::from(weyl));
            assert_eq!(ty.disc_order(), disc);
            // The rank+disc shortcut agrees with the diagram walk.
            assert_eq!(
                AdeType::from_rank_and_disc(ty.rank(), disc),
                Some(ty),
                "rank+disc shortcut for {ty}"
            );
        }
    }

    #[test]
    fn rank_three_branch_shape_is_reported_as_a3() {
        // The 3-node "branch" diagram is a path, so the classification must
        // say A3 (and the rank+disc shortcut agrees).
        let report = classify(&path_gram(3)).unwrap();
        assert_eq!(report.components, vec![AdeType::A(3)]);
        assert_eq!(report.disc, BigInt::from(4));
        assert_eq!(AdeType::from_rank_and_disc(3, 4), Some(AdeType::A(3)));
    }

    #[test]
    fn orthogonal_sum_splits_into_components() {
        let l = lattice(&[vec![2, 0], vec![0, 2]]);
        let report = classify(&l).unwrap();
        assert_eq!(report.components, vec![AdeType::A(1), AdeType::A(1)]);
        assert_eq!(report.root_count, 4);
        assert_eq!(report.weyl_order, BigInt::from(4));
        assert!(report.roots_span_lattice);
    }

    #[test]
    fn roots_may_span_only_a_sublattice() {
        let l = lattice(&[vec![2, 0], vec![0, 4]]);
        let report = classify(&l).unwrap();
        assert_eq!(report.components, vec![AdeType::A(1)]);
        assert_eq!(report.root_count, 2);
        assert!(!report.roots_span_lattice);
        assert_eq!(report.rank, 2);
    }

    #[test]
    fn rootless_report_is_not_an_error() {
        let report = classify(&lattice(&[vec![4]])).unwrap();
        assert!(report.is_rootless());
        assert!(report.components.is_empty());
        assert_eq!(report.weyl_order, BigInt::one());
        assert!(!report.roots_span_lattice);
    }

    #[test]
    fn rank_zero_lattice_classifies_cleanly() {
        let l = Lattice::new(IntMatrix::zero(0, 0)).unwrap();
        let report = classify(&l).unwrap();
        assert_eq!(report.rank, 0);
        assert_eq!(report.root_count, 0);
        assert!(report.roots_span_lattice);
        assert_eq!(report.disc, BigInt::one());
    }

    #[test]
    fn deleting_one_root_breaks_reflection_closure() {
        let l = branched_gram(4);
        let mut roots = enumerate_roots(&l).unwrap();
        assert!(verify_root_axioms(&l, &roots).is_pass());
        let removed = roots.remove(roots.len() / 3);
        match verify_root_axioms(&l, &roots) {
            AxiomVerdict::Fail { axiom, detail } => {
                assert_eq!(axiom, RootAxiom::ReflectionClosure);
                assert!(
                    detail.contains(&fmt_vec(&removed)),
                    "witness should name the missing vector: {detail}"
                );
            }
            AxiomVerdict::Pass => panic!("a mutated root set must fail verification"),
        }
    }

    #[test]
    fn norm_violations_are_caught_with_witnesses() {
        let l = lattice(&[vec![2]]);
        let zero = vec![vec![BigInt::zero()]];
        assert!(matches!(
            verify_root_axioms(&l, &zero),
            AxiomVerdict::Fail {
                axiom: RootAxiom::NonzeroNormTwo,
                ..
            }
        ));
        let long = vec![vec![BigInt::from(2)]];
        match verify_root_axioms(&l, &long) {
            AxiomVerdict::Fail { axiom, detail } => {
                assert_eq!(axiom, RootAxiom::NonzeroNormTwo);
                assert!(detail.contains("norm 8"), "got: {detail}");
            }
            AxiomVerdict::Pass => panic!("norm-8 vector must fail"),
        }
    }

    #[test]
    fn weyl_orbit_is_transitive_on_irreducible_systems() {
        for l in [path_gram(2), branched_gram(4), exceptional_gram(6)] {
            let rs = RootSystem::new(l).unwrap();
            assert_eq!(weyl_orbit_is_transitive(&rs).unwrap(), true);
        }
    }

    #[test]
    fn weyl_orbit_refuses_reducible_systems() {
        let rs = RootSystem::new(lattice(&[vec![2, 0], vec![0, 2]])).unwrap();
        assert!(matches!(
            weyl_orbit_is_transitive(&rs),
            Err(RootsError::Reducible { components: 2 })
        ));
    }

    #[test]
    fn ade_type_string_round_trip() {
        for t in [AdeType::A(1), AdeType::A(12), AdeType::D(7), AdeType::E(8)] {
            let s = t.to_string();
            assert_eq!(s.parse::<AdeType>().unwrap(), t);
        }
        assert!("D3".parse::<AdeType>().is_err());
        assert!("E9".parse::<AdeType>().is_err());
        assert!("A0".parse::<AdeType>().is_err());
        assert!("B2".parse::<AdeType>().is_err());
        let json = serde_json::to_string(&AdeType::D(5)).unwrap();
        assert_eq!(json, "\"D5\"");
        assert_eq!(serde_json::from_str::<AdeType>("\"D5\"").unwrap(), AdeType::D(5));
    }

    #[test]
    fn classification_report_round_trips_as_json() {
        let report = classify(&path_gram(2)).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: ClassificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        // Big integers travel as decimal strings.
        assert!(json.contains("\"weyl_order\":\"6\""), "got: {json}");
    }

    #[test]
    fn components_sort_canonically() {
        // Two component families interleaved: A1 ⊕ D4 ⊕ A2.
        let mut gram = IntMatrix::zero(7, 7);
        gram.set(0, 0, BigInt::from(2));
        let d4 = branched_gram(4);
        for i in 0..4 {
            for j in 0..4 {
                gram.set(1 + i, 1 + j, d4.gram().at(i, j).clone());
            }
        }
        let a2 = path_gram(2);
        for i in 0..2 {
            for j in 0..2 {
                gram.set(5 + i, 5 + j, a2.gram().at(i, j).clone());
            }
        }
        let report = classify(&Lattice::new(gram).unwrap()).unwrap();
        assert_eq!(
            report.components,
            vec![AdeType::A(1), AdeType::A(2), AdeType::D(4)]
        );
    }
}
