//! Exact dense linear algebra over the integers and rationals.
//!
//! Everything here is exact: entries are arbitrary-precision integers
//! ([`BigInt`]) or rationals ([`BigRational`]), and no floating point is used
//! anywhere. The operations are the substrate for lattice computations where a
//! single wrong unit digit in a determinant flips a classification:
//!
//! * [`smith_normal_form`] — diagonalization `u·m·v = d` by unimodular `u`, `v`;
//!   the diagonal entries are the invariant factors of the cokernel.
//! * [`hermite_normal_form`] — row-style echelon form `u·m = h` by unimodular
//!   `u`; used as the canonical form for lattice bases.
//! * [`det`] — fraction-free (Bareiss) determinant.
//! * [`kernel_basis_z`] — a basis of the *saturated* integer kernel
//!   `{x : m·x = 0}`, in Hermite-canonical form.
//!
//! Matrices here are dense and small (rank ≤ ~20); no sparse formats, no
//! modular tricks, no LLL.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense matrix with arbitrary-precision integer entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// The `rows × cols` zero matrix.
    #[must_use]
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    /// The `n × n` identity.
    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Build from machine-integer rows. Panics if the rows are ragged.
    #[must_use]
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows in matrix literal");
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(*x));
            }
        }
        m
    }

    /// Build entrywise from a function of (row, column).
    #[must_use]
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = IntMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    /// Row `i` as a slice (row-major storage makes this free).
    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// Matrix product. Panics on a dimension mismatch.
    #[must_use]
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j) + a * other.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// The top-left `k × k` block.
    #[must_use]
    pub fn leading_principal_submatrix(&self, k: usize) -> IntMatrix {
        IntMatrix::from_fn(k, k, |i, j| self.at(i, j).clone())
    }

    #[must_use]
    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |i, j| {
            BigRational::from_integer(self.at(i, j).clone())
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.at(i, j);
            self.set(i, j, v);
        }
    }

    /// row[target] += k · row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.at(target, j) + k * self.at(source, j);
            self.set(target, j, v);
        }
    }

    /// col[target] += k · col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.at(i, target) + k * self.at(i, source);
            self.set(i, target, v);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(BigInt::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.at(i, j).to_string().len()).max().unwrap_or(1))
            .collect();
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>w$}", self.at(i, j).to_string(), w = widths[j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Dense matrix with arbitrary-precision rational entries.
///
/// `BigRational` keeps every entry in lowest terms with a positive
/// denominator, so no extra normalization is needed here.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    #[must_use]
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    #[must_use]
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut m = RatMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.cols + j] = v;
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        RatMatrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// Matrix product. Panics on a dimension mismatch.
    #[must_use]
    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j) + a * other.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(BigRational::is_integer)
    }

    /// Convert to an integer matrix; `None` when some entry has a denominator.
    #[must_use]
    pub fn to_integer(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        Some(IntMatrix::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).to_integer()
        }))
    }

    /// Least common multiple of all entry denominators (1 for an empty or
    /// integral matrix).
    #[must_use]
    pub fn common_denominator(&self) -> BigInt {
        self.entries
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()))
    }

    /// Exact inverse by Gauss–Jordan elimination; `None` when singular or
    /// non-square.
    #[must_use]
    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::from_fn(n, n, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        });
        for col in 0..n {
            let pivot_row = (col..n).find(|&i| !a.at(i, col).is_zero())?;
            for j in 0..n {
                let (x, y) = (a.at(col, j).clone(), a.at(pivot_row, j).clone());
                a.set(col, j, y);
                a.set(pivot_row, j, x);
                let (x, y) = (inv.at(col, j).clone(), inv.at(pivot_row, j).clone());
                inv.set(col, j, y);
                inv.set(pivot_row, j, x);
            }
            let p = a.at(col, col).clone();
            for j in 0..n {
                let v = a.at(col, j) / &p;
                a.set(col, j, v);
                let v = inv.at(col, j) / &p;
                inv.set(col, j, v);
            }
            for i in 0..n {
                if i == col || a.at(i, col).is_zero() {
                    continue;
                }
                let factor = a.at(i, col).clone();
                for j in 0..n {
                    let v = a.at(i, j) - &factor * a.at(col, j);
                    a.set(i, j, v);
                    let v = inv.at(i, j) - &factor * inv.at(col, j);
                    inv.set(i, j, v);
                }
            }
        }
        Some(inv)
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of [`smith_normal_form`]: unimodular `u`, `v` with `u·m·v = d`,
/// `d` diagonal, nonnegative, each entry dividing the next, zeros trailing.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// The diagonal of `d` (length `min(rows, cols)`).
    #[must_use]
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.at(i, i).clone())
            .collect()
    }

    /// Number of nonzero diagonal entries = rank of the input.
    #[must_use]
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// The nonzero diagonal entries (invariant factors of the image;
    /// the cokernel's finite part drops the 1s).
    #[must_use]
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }
}

/// Location of the entry with minimal nonzero absolute value in the block
/// `m[t.., t..]`, scanning row-major so ties resolve deterministically.
fn find_pivot(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows() {
        for j in t..m.cols() {
            let e = m.at(i, j);
            if e.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if e.abs() < m.at(bi, bj).abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

/// Smith normal form by gcd-driven row/column reduction.
///
/// The pivot is always the entry of minimal nonzero absolute value in the
/// remaining block (row-major scan on ties), which makes the run fully
/// deterministic. Works for any rectangular matrix, including empty ones.
#[must_use]
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = find_pivot(&d, t) else {
            break; // remaining block is zero: zeros trail
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            if d.at(t, t).is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
            // Clear column t below the pivot; floor division leaves
            // remainders in [0, pivot).
            for i in t + 1..rows {
                if !d.at(i, t).is_zero() {
                    let q = -d.at(i, t).div_floor(d.at(t, t));
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                }
            }
            if let Some(i) = (t + 1..rows).find(|&i| !d.at(i, t).is_zero()) {
                // A nonzero remainder is strictly smaller than the pivot:
                // promote it and run again.
                d.swap_rows(t, i);
                u.swap_rows(t, i);
                continue;
            }
            // Same for row t to the right of the pivot.
            for j in t + 1..cols {
                if !d.at(t, j).is_zero() {
                    let q = -d.at(t, j).div_floor(d.at(t, t));
                    d.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                }
            }
            if let Some(j) = (t + 1..cols).find(|&j| !d.at(t, j).is_zero()) {
                d.swap_cols(t, j);
                v.swap_cols(t, j);
                continue;
            }
            // Row and column are clear. Enforce that the pivot divides the
            // whole remaining block, folding offending rows into row t.
            let pivot = d.at(t, t).clone();
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !d.at(i, j).is_multiple_of(&pivot));
            match offender {
                Some((i, _)) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
    }

    SnfResult { u, d, v }
}

/// Row-style Hermite normal form: `u·m = h` with `u` unimodular.
///
/// Canonical variant, fixed so downstream golden data is stable: pivots are
/// positive, each pivot is strictly to the right of the one above, entries
/// *above* a pivot are reduced into `[0, pivot)`, and zero rows trail.
#[must_use]
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut r = 0; // next pivot row

    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            // Minimal nonzero |entry| in column c at or below row r;
            // top-most on ties.
            let pivot = (r..rows)
                .filter(|&i| !h.at(i, c).is_zero())
                .min_by_key(|&i| h.at(i, c).abs());
            let Some(p) = pivot else {
                break;
            };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            if h.at(r, c).is_negative() {
                h.negate_row(r);
                u.negate_row(r);
            }
            let mut clear = true;
            for i in r + 1..rows {
                if !h.at(i, c).is_zero() {
                    let q = -h.at(i, c).div_floor(h.at(r, c));
                    h.add_row_multiple(i, r, &q);
                    u.add_row_multiple(i, r, &q);
                    if !h.at(i, c).is_zero() {
                        clear = false;
                    }
                }
            }
            if clear {
                // Reduce the entries above the pivot into [0, pivot).
                for i in 0..r {
                    let q = -h.at(i, c).div_floor(h.at(r, c));
                    h.add_row_multiple(i, r, &q);
                    u.add_row_multiple(i, r, &q);
                }
                r += 1;
                break;
            }
        }
    }

    (h, u)
}

/// Signed determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate division is exact, so the computation stays in the
/// integers throughout.
///
/// # Panics
///
/// Panics if the matrix is not square (a 0×0 matrix has determinant 1).
#[must_use]
pub fn det(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.at(k, k).is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a.at(i, k).is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a.set(i, j, q);
            }
        }
        prev = a.at(k, k).clone();
    }
    sign * a.at(n - 1, n - 1)
}

/// Basis of the full integer kernel `{x ∈ Zⁿ : m·x = 0}`, one row per basis
/// vector, in Hermite-canonical form.
///
/// The kernel of a linear map is automatically *saturated* (the quotient by
/// it is torsion-free), so the rows generate every integer solution, not just
/// a finite-index subgroup. Obtained from the Smith normal form `u·m·v = d`:
/// the columns of `v` past the rank span the kernel.
#[must_use]
pub fn kernel_basis_z(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let cols = m.cols();
    let k = cols - rank;
    let basis = IntMatrix::from_fn(k, cols, |bi, i| snf.v.at(i, rank + bi).clone());
    hermite_normal_form(&basis).0
}
