//! Exact linear algebra over the rationals.
//!
//! Everything here is built on a fraction-free sparse Gaussian elimination
//! over the integers: rows are kept as sorted `(column, coefficient)` pairs
//! with coprime integer entries, pivots are chosen as the first nonzero in
//! row order, and results are converted back to reduced rational echelon
//! form at the end. Kernels of stacks of operators are computed by
//! incremental intersection: the kernel of the first operator, then the
//! kernel of each following operator restricted to the running subspace.

use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Sparse rational vector: strictly increasing column indices, no zeros.
pub type SparseVec = Vec<(usize, Rational)>;

type IntRow = Vec<(usize, BigInt)>;

// ---------------------------------------------------------------------------
// dense matrices
// ---------------------------------------------------------------------------

/// Dense matrix of exact rationals, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += a * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Exact determinant by Gaussian elimination.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.data.clone();
        let at = |m: &Vec<Rational>, i: usize, j: usize| m[i * n + j].clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !at(&m, r, col).is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                for j in 0..n {
                    m.swap(col * n + j, p * n + j);
                }
                det = -det;
            }
            let pivot = at(&m, col, col);
            det *= &pivot;
            for r in (col + 1)..n {
                let f = at(&m, r, col) / &pivot;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = at(&m, r, j) - &f * at(&m, col, j);
                    m[r * n + j] = v;
                }
            }
        }
        det
    }

    /// `tr(self * other)` without materializing the product; iterates the
    /// nonzeros of `other`, so pair it with the sparser factor there.
    pub fn trace_mul(&self, other: &Self) -> Rational {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.rows, other.cols);
        let mut acc = Rational::zero();
        for j in 0..other.rows {
            for i in 0..other.cols {
                let b = other.get(j, i);
                if !b.is_zero() {
                    let a = self.get(i, j);
                    if !a.is_zero() {
                        acc += a * b;
                    }
                }
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose().neg()
    }

    pub fn is_orthogonal(&self) -> bool {
        self.rows == self.cols && self.transpose().mul(self) == Self::identity(self.rows)
    }

    /// Row-major flattening, for feeding dense matrices to sparse routines.
    pub fn row_sparse(&self, i: usize) -> SparseVec {
        (0..self.cols)
            .filter(|&j| !self.get(i, j).is_zero())
            .map(|j| (j, self.get(i, j).clone()))
            .collect()
    }
}

impl std::fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ExactMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// sparse vector utilities
// ---------------------------------------------------------------------------

/// Adds `c * b` into sparse vector `a`.
pub fn sparse_axpy(a: &SparseVec, c: &Rational, b: &SparseVec) -> SparseVec {
    if c.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_scale(a: &SparseVec, c: &Rational) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, v)| (*i, v * c)).collect()
}

pub fn sparse_get(a: &SparseVec, col: usize) -> Rational {
    match a.binary_search_by_key(&col, |e| e.0) {
        Ok(i) => a[i].1.clone(),
        Err(_) => Rational::zero(),
    }
}

pub fn sparse_from_map(m: BTreeMap<usize, Rational>) -> SparseVec {
    m.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

pub fn sparse_dot(a: &SparseVec, b: &SparseVec) -> Rational {
    let mut acc = Rational::zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &a[i].1 * &b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// fraction-free elimination engine
// ---------------------------------------------------------------------------

/// Divides the row by the gcd of its entries and makes the leading
/// coefficient positive.
fn normalize_content(row: &mut IntRow) {
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// `row := (b/g)*row - (a/g)*pivot` where `a`, `b` are the leading
/// coefficients; the shared leading column cancels exactly.
fn eliminate_leading(row: &IntRow, pivot: &IntRow) -> IntRow {
    debug_assert_eq!(row[0].0, pivot[0].0);
    let a = &row[0].1;
    let b = &pivot[0].1;
    let g = a.gcd(b);
    let ca = b / &g;
    let cb = a / &g;
    let mut out: IntRow = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < row.len() || j < pivot.len() {
        let take_a = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_b = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_a {
            out.push((row[i].0, &ca * &row[i].1));
            i += 1;
        } else if take_b {
            out.push((pivot[j].0, -(&cb * &pivot[j].1)));
            j += 1;
        } else {
            let v = &ca * &row[i].1 - &cb * &pivot[j].1;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    normalize_content(&mut out);
    out
}

/// Incremental integer echelon form: pivot rows keyed by leading column.
struct Echelon {
    pivot_rows: BTreeMap<usize, IntRow>,
}

impl Echelon {
    fn new() -> Self {
        Echelon {
            pivot_rows: BTreeMap::new(),
        }
    }

    /// Reduces `row` against the current pivots and installs it if nonzero.
    fn insert(&mut self, mut row: IntRow) {
        loop {
            if row.is_empty() {
                return;
            }
            let lead = row[0].0;
            match self.pivot_rows.get(&lead) {
                Some(p) => row = eliminate_leading(&row, p),
                None => {
                    normalize_content(&mut row);
                    self.pivot_rows.insert(lead, row);
                    return;
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    /// Clears entries above pivots, producing fully reduced integer rows.
    fn back_reduce(&mut self) {
        let pivots: Vec<usize> = self.pivot_rows.keys().copied().collect();
        for &p in pivots.iter().rev() {
            let mut row = self.pivot_rows.remove(&p).unwrap();
            // entries at later pivot columns; the rows there are already
            // fully reduced, so one combination per column suffices
            let targets: Vec<usize> = row
                .iter()
                .skip(1)
                .map(|e| e.0)
                .filter(|c| self.pivot_rows.contains_key(c))
                .collect();
            for c in targets {
                let pivot = &self.pivot_rows[&c];
                let a = sparse_get_int(&row, c);
                if a.is_zero() {
                    continue;
                }
                let b = &pivot[0].1;
                let g = a.gcd(b);
                let ca = b / &g;
                let cb = &a / &g;
                row = int_axpy(&ca, &row, &-cb, pivot);
                normalize_content(&mut row);
            }
            self.pivot_rows.insert(p, row);
        }
    }

    /// Rational rows with pivot coefficients scaled to one.
    fn rational_rows(&self) -> Vec<(usize, SparseVec)> {
        self.pivot_rows
            .iter()
            .map(|(&p, row)| {
                let lead = Rational::from_integer(row[0].1.clone());
                let v: SparseVec = row
                    .iter()
                    .map(|(c, a)| (*c, Rational::from_integer(a.clone()) / &lead))
                    .collect();
                (p, v)
            })
            .collect()
    }
}

fn sparse_get_int(row: &IntRow, col: usize) -> BigInt {
    match row.binary_search_by_key(&col, |e| e.0) {
        Ok(i) => row[i].1.clone(),
        Err(_) => BigInt::zero(),
    }
}

/// `ca*a + cb*b` over integer rows.
fn int_axpy(ca: &BigInt, a: &IntRow, cb: &BigInt, b: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push((a[i].0, ca * &a[i].1));
            i += 1;
        } else if take_b {
            out.push((b[j].0, cb * &b[j].1));
            j += 1;
        } else {
            let v = ca * &a[i].1 + cb * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Clears denominators of a rational row, yielding a coprime integer row.
fn to_int_row(row: &SparseVec) -> IntRow {
    if row.is_empty() {
        return Vec::new();
    }
    let mut lcm = BigInt::one();
    for (_, v) in row {
        lcm = lcm.lcm(v.denom());
    }
    let mut out: IntRow = row
        .iter()
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    normalize_content(&mut out);
    out
}

// ---------------------------------------------------------------------------
// sparse matrices
// ---------------------------------------------------------------------------

/// Sparse rational matrix; within a row, column indices strictly increase
/// and no zeros are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<SparseVec>,
}

/// Result of reduced row-echelon elimination.
pub struct RrefResult {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub reduced: SparseMatrix,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn from_rows(cols: usize, data: Vec<SparseVec>) -> Self {
        for row in &data {
            debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
            debug_assert!(row.last().map_or(true, |e| e.0 < cols));
        }
        SparseMatrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn from_dense(m: &ExactMatrix) -> Self {
        let data = (0..m.rows).map(|i| m.row_sparse(i)).collect();
        SparseMatrix {
            rows: m.rows,
            cols: m.cols,
            data,
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i < self.rows && j < self.cols);
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(k) => {
                if v.is_zero() {
                    row.remove(k);
                } else {
                    row[k].1 = v;
                }
            }
            Err(k) => {
                if !v.is_zero() {
                    row.insert(k, (j, v));
                }
            }
        }
    }

    /// Exact reduced row-echelon form. The rank equals the number of pivot
    /// rows; an empty matrix has rank zero.
    pub fn rref(&self) -> RrefResult {
        let mut ech = Echelon::new();
        for row in &self.data {
            ech.insert(to_int_row(row));
        }
        ech.back_reduce();
        let rows = ech.rational_rows();
        let pivots: Vec<usize> = rows.iter().map(|(p, _)| *p).collect();
        let data: Vec<SparseVec> = rows.into_iter().map(|(_, r)| r).collect();
        RrefResult {
            rank: pivots.len(),
            pivots,
            reduced: SparseMatrix {
                rows: data.len(),
                cols: self.cols,
                data,
            },
        }
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new();
        for row in &self.data {
            ech.insert(to_int_row(row));
        }
        ech.rank()
    }

    /// Exact null space `{x : self * x = 0}`; `dim kernel + rank = cols`.
    pub fn kernel(&self) -> Subspace {
        let r = self.rref();
        kernel_from_rref(&r, self.cols)
    }
}

fn kernel_from_rref(r: &RrefResult, cols: usize) -> Subspace {
    let pivot_set: std::collections::BTreeSet<usize> = r.pivots.iter().copied().collect();
    let mut basis: Vec<SparseVec> = Vec::new();
    for f in 0..cols {
        if pivot_set.contains(&f) {
            continue;
        }
        let mut v: SparseVec = Vec::new();
        for (k, &p) in r.pivots.iter().enumerate() {
            let a = sparse_get(&r.reduced.data[k], f);
            if !a.is_zero() {
                v.push((p, -a));
            }
        }
        v.push((f, Rational::one()));
        v.sort_by_key(|e| e.0);
        basis.push(v);
    }
    Subspace::from_spanning(cols, basis)
}

// ---------------------------------------------------------------------------
// subspaces
// ---------------------------------------------------------------------------

/// A linear subspace of `Q^n` held as its reduced-echelon basis, which is
/// the canonical representative: two equal subspaces produce identical
/// bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    pub basis: Vec<SparseVec>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| vec![(i, Rational::one())]).collect();
        Subspace {
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_spanning(ambient: usize, rows: Vec<SparseVec>) -> Self {
        let mut ech = Echelon::new();
        for row in rows {
            debug_assert!(row.last().map_or(true, |e| e.0 < ambient));
            ech.insert(to_int_row(&row));
        }
        ech.back_reduce();
        let rat_rows = ech.rational_rows();
        let pivots: Vec<usize> = rat_rows.iter().map(|(p, _)| *p).collect();
        let basis: Vec<SparseVec> = rat_rows.into_iter().map(|(_, r)| r).collect();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `v` against the basis; the remainder is zero iff `v` lies in
    /// the subspace.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (k, &p) in self.pivots.iter().enumerate() {
            let a = sparse_get(&v, p);
            if !a.is_zero() {
                v = sparse_axpy(&v, &-a, &self.basis[k]);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of `v` over the echelon basis, read off at the pivots.
    /// Returns `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| sparse_get(v, p)).collect())
    }

    /// Sparse coordinates over the echelon basis without membership check;
    /// valid whenever `v` is known to lie in the subspace.
    pub fn coordinates_unchecked(&self, v: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        let mut k = 0;
        for (c, a) in v {
            while k < self.pivots.len() && self.pivots[k] < *c {
                k += 1;
            }
            if k < self.pivots.len() && self.pivots[k] == *c {
                out.push((k, a.clone()));
            }
        }
        out
    }

    /// Exact intersection via the Zassenhaus double matrix.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(
            self.ambient, other.ambient,
            "subspace intersection requires equal ambient dimension"
        );
        let n = self.ambient;
        let mut rows: Vec<SparseVec> = Vec::new();
        for b in &self.basis {
            let mut row = b.clone();
            row.extend(b.iter().map(|(c, v)| (c + n, v.clone())));
            rows.push(row);
        }
        for b in &other.basis {
            rows.push(b.clone());
        }
        let mut ech = Echelon::new();
        for row in rows {
            ech.insert(to_int_row(&row));
        }
        // rows whose left half vanished span the intersection in the right half
        let mut inter: Vec<SparseVec> = Vec::new();
        for (&lead, row) in &ech.pivot_rows {
            if lead >= n {
                inter.push(
                    row.iter()
                        .map(|(c, a)| (c - n, Rational::from_integer(a.clone())))
                        .collect(),
                );
            }
        }
        Subspace::from_spanning(n, inter)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis.clone();
        rows.extend(other.basis.clone());
        Subspace::from_spanning(self.ambient, rows)
    }

    /// Kernel of a linear map restricted to this subspace: returns
    /// `{v in self : op(v) = 0}` where `images[j] = op(basis[j])`.
    pub fn restricted_kernel(&self, images: &[SparseVec]) -> Subspace {
        assert_eq!(images.len(), self.dim());
        // constraint matrix rows indexed by ambient coordinates of the images
        let mut by_coord: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (j, im) in images.iter().enumerate() {
            for (c, a) in im {
                by_coord.entry(*c).or_default().push((j, a.clone()));
            }
        }
        let constraints = SparseMatrix::from_rows(self.dim(), by_coord.into_values().collect());
        let coeffs = constraints.kernel();
        let basis = coeffs
            .basis
            .iter()
            .map(|c| {
                let mut acc: SparseVec = Vec::new();
                for (j, a) in c {
                    acc = sparse_axpy(&acc, a, &self.basis[*j]);
                }
                acc
            })
            .collect();
        Subspace::from_spanning(self.ambient, basis)
    }
}
