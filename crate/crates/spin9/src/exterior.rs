//! Sparse exterior algebra over R^n for n <= 16.
//!
//! Blades are bitmasks (set bit i means the basis covector e^i is a
//! factor), factors in ascending index order, and a grade-k form is a
//! sparse map from grade-k blades to rational coefficients. The metric is
//! the standard Euclidean one, the orientation is e^1 ^ ... ^ e^n, and the
//! musical isomorphism is the identity on coordinates.

use crate::linalg::{ExactMatrix, SparseVec, Subspace};
use crate::rational::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

pub type Blade = u32;

/// Sparse exterior form of a single grade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    pub n: usize,
    pub k: usize,
    pub coeffs: BTreeMap<Blade, Rational>,
}

#[inline]
fn popcount(b: Blade) -> usize {
    b.count_ones() as usize
}

/// Sign picked up when multiplying e_S ^ e_T for disjoint S, T: the parity
/// of the number of transpositions needed to sort the concatenation.
pub fn merge_sign(s: Blade, t: Blade) -> i32 {
    debug_assert_eq!(s & t, 0);
    let mut sign = 0u32;
    let mut t_rest = t;
    while t_rest != 0 {
        let i = t_rest.trailing_zeros();
        // factors of s above index i must jump over e_i
        sign += (s >> (i + 1)).count_ones();
        t_rest &= t_rest - 1;
    }
    if sign % 2 == 0 {
        1
    } else {
        -1
    }
}

impl Form {
    pub fn zero(n: usize, k: usize) -> Self {
        assert!(n <= 16);
        Form {
            n,
            k,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut f = Form::zero(n, 0);
        f.coeffs.insert(0, Rational::one());
        f
    }

    /// The basis covector e^i as a grade-1 form (indices are 0-based).
    pub fn basis_covector(n: usize, i: usize) -> Self {
        assert!(i < n);
        Form::from_blade(n, 1 << i, Rational::one())
    }

    pub fn from_blade(n: usize, blade: Blade, c: Rational) -> Self {
        let k = popcount(blade);
        let mut f = Form::zero(n, k);
        if !c.is_zero() {
            f.coeffs.insert(blade, c);
        }
        f
    }

    pub fn add_term(&mut self, blade: Blade, c: Rational) {
        debug_assert_eq!(popcount(blade), self.k);
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(blade).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&blade);
        }
    }

    pub fn get(&self, blade: Blade) -> Rational {
        self.coeffs
            .get(&blade)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Form) -> Form {
        assert_eq!(self.n, other.n);
        assert!(self.is_zero() || other.is_zero() || self.k == other.k);
        let mut out = self.clone();
        if out.is_zero() {
            out.k = other.k;
        }
        for (b, c) in &other.coeffs {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Form {
        if c.is_zero() {
            return Form::zero(self.n, self.k);
        }
        let coeffs = self.coeffs.iter().map(|(b, v)| (*b, v * c)).collect();
        Form {
            n: self.n,
            k: self.k,
            coeffs,
        }
    }

    /// Exterior product. Empty result if the grade exceeds n.
    pub fn wedge(&self, other: &Form) -> Form {
        assert_eq!(self.n, other.n, "wedge requires equal ambient dimension");
        let k = self.k + other.k;
        let mut out = Form {
            n: self.n,
            k,
            coeffs: BTreeMap::new(),
        };
        if k > self.n {
            return out;
        }
        for (s, a) in &self.coeffs {
            for (t, b) in &other.coeffs {
                if s & t != 0 {
                    continue;
                }
                let sign = merge_sign(*s, *t);
                let c = if sign > 0 { a * b } else { -(a * b) };
                out.add_term(s | t, c);
            }
        }
        out
    }

    /// Interior product with a coordinate vector; the anti-derivation
    /// extension of e_i -| e^j = delta_ij.
    pub fn contract(&self, v: &[Rational]) -> Form {
        assert_eq!(v.len(), self.n);
        let mut out = Form::zero(self.n, self.k.saturating_sub(1));
        if self.k == 0 {
            return out;
        }
        for (b, c) in &self.coeffs {
            let mut rest = *b;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if v[i].is_zero() {
                    continue;
                }
                // position of factor i within the blade
                let pos = popcount(b & ((1u32 << i) - 1));
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                let coeff = if sign > 0 { c * &v[i] } else { -(c * &v[i]) };
                out.add_term(b & !(1u32 << i), coeff);
            }
        }
        out
    }

    /// Hodge star for the Euclidean metric and orientation e^1 ^ ... ^ e^n.
    pub fn hodge(&self) -> Form {
        let full: Blade = (1u32 << self.n) - 1;
        let mut out = Form::zero(self.n, self.n - self.k);
        for (b, c) in &self.coeffs {
            let comp = full & !b;
            let sign = merge_sign(*b, comp);
            let coeff = if sign > 0 { c.clone() } else { -c };
            out.add_term(comp, coeff);
        }
        out
    }

    /// Derivation action of an antisymmetric matrix: on a blade, the sum
    /// over factors of replacing e_i by A e_i.
    pub fn rho(&self, a: &ExactMatrix) -> Form {
        assert_eq!(a.rows, self.n);
        assert!(
            a.is_antisymmetric(),
            "rho action requires an antisymmetric matrix"
        );
        self.rho_unchecked(a)
    }

    pub(crate) fn rho_unchecked(&self, a: &ExactMatrix) -> Form {
        let mut out = Form::zero(self.n, self.k);
        for (b, c) in &self.coeffs {
            let mut rest = *b;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                for j in 0..self.n {
                    let aji = a.get(j, i);
                    if aji.is_zero() {
                        continue;
                    }
                    if j == i {
                        out.add_term(*b, c * aji);
                        continue;
                    }
                    if b & (1u32 << j) != 0 {
                        continue; // repeated factor
                    }
                    let nb = (b & !(1u32 << i)) | (1u32 << j);
                    let (lo, hi) = (i.min(j), i.max(j));
                    let between =
                        (b & !(1u32 << i)) & (((1u32 << hi) - 1) & !((1u32 << (lo + 1)) - 1));
                    let sign = if popcount(between) % 2 == 0 { 1 } else { -1 };
                    let coeff = if sign > 0 { c * aji } else { -(c * aji) };
                    out.add_term(nb, coeff);
                }
            }
        }
        out
    }

    /// Induced action of a group element on blades, multiplicative over the
    /// wedge: each factor e^i is replaced by the i-th column of g.
    pub fn pullback(&self, g: &ExactMatrix) -> Form {
        assert_eq!(g.rows, self.n);
        let mut out = Form::zero(self.n, self.k);
        for (b, c) in &self.coeffs {
            let mut acc = Form::from_blade(self.n, 0, c.clone());
            acc.k = 0;
            let mut rest = *b;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let mut col = Form::zero(self.n, 1);
                for r in 0..self.n {
                    let v = g.get(r, i);
                    if !v.is_zero() {
                        col.add_term(1u32 << r, v.clone());
                    }
                }
                acc = acc.wedge(&col);
            }
            for (nb, v) in acc.coeffs {
                out.add_term(nb, v);
            }
        }
        out
    }

    /// Blade-orthonormal inner product of two forms of the same grade.
    pub fn dot(&self, other: &Form) -> Rational {
        let mut acc = Rational::zero();
        for (b, c) in &self.coeffs {
            if let Some(d) = other.coeffs.get(b) {
                acc += c * d;
            }
        }
        acc
    }

    /// Serializes as text lines `<hex bitmask> <numerator>/<denominator>`,
    /// sorted by bitmask.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (b, c) in &self.coeffs {
            out.push_str(&format!("{:x} {}/{}\n", b, c.numer(), c.denom()));
        }
        out
    }

    pub fn deserialize(n: usize, k: usize, text: &str) -> Result<Form, String> {
        let mut f = Form::zero(n, k);
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (b, c) = line
                .split_once(' ')
                .ok_or_else(|| format!("malformed form line: {line}"))?;
            let blade = Blade::from_str_radix(b, 16).map_err(|e| format!("bad blade {b}: {e}"))?;
            if popcount(blade) != k {
                return Err(format!("blade {b} has wrong grade"));
            }
            let coeff =
                crate::rational::parse_frac(c).ok_or_else(|| format!("bad coefficient {c}"))?;
            f.add_term(blade, coeff);
        }
        Ok(f)
    }
}

// ---------------------------------------------------------------------------
// blade indexing for linear algebra over Lambda^k(R^n)
// ---------------------------------------------------------------------------

/// Canonical enumeration of the grade-k blades of R^n in ascending bitmask
/// order, with rank lookups; the coordinate system used whenever forms are
/// treated as vectors.
pub struct BladeTable {
    pub n: usize,
    pub k: usize,
    pub blades: Vec<Blade>,
}

impl BladeTable {
    pub fn new(n: usize, k: usize) -> Self {
        let mut blades: Vec<Blade> = Vec::new();
        let limit: u64 = 1u64 << n;
        if k == 0 {
            blades.push(0);
        } else {
            // first blade of grade k, then successor trick in bitmask order
            let mut b: u64 = (1u64 << k) - 1;
            while b < limit {
                blades.push(b as Blade);
                let c = b & b.wrapping_neg();
                let r = b + c;
                if r >= limit {
                    break;
                }
                b = (((r ^ b) >> 2) / c) | r;
            }
        }
        BladeTable { n, k, blades }
    }

    pub fn dim(&self) -> usize {
        self.blades.len()
    }

    pub fn index(&self, blade: Blade) -> usize {
        self.blades
            .binary_search(&blade)
            .expect("blade not of this grade")
    }

    pub fn to_sparse(&self, f: &Form) -> SparseVec {
        f.coeffs
            .iter()
            .map(|(b, c)| (self.index(*b), c.clone()))
            .collect()
    }

    pub fn to_form(&self, v: &SparseVec) -> Form {
        let mut f = Form::zero(self.n, self.k);
        for (i, c) in v {
            f.add_term(self.blades[*i], c.clone());
        }
        f
    }
}

/// The subspace of grade-k forms annihilated by every operator in `ops`,
/// acting through the derivation representation. Operators are applied in
/// order by incremental kernel intersection. The `torus_prefix` leading
/// operators must commute pairwise and square to minus the identity; for
/// those the kernel step uses spectral projection (the derivation action
/// of a complex structure on grade k has spectrum i*{-k..k} of fixed
/// parity), which keeps the intermediate bases block-local and cheap. The
/// result is verified to be annihilated by every operator.
pub fn invariant_forms(table: &BladeTable, ops: &[ExactMatrix], torus_prefix: usize) -> Subspace {
    let dim = table.dim();
    let mut space = Subspace::full(dim);
    for (idx, a) in ops.iter().enumerate() {
        if space.dim() == 0 {
            break;
        }
        if idx < torus_prefix {
            space = torus_kernel_step(table, a, &space);
        } else {
            let images: Vec<SparseVec> = space
                .basis
                .iter()
                .map(|v| apply_rho_sparse(table, a, v))
                .collect();
            space = space.restricted_kernel(&images);
        }
    }
    for a in ops {
        for v in &space.basis {
            assert!(
                apply_rho_sparse(table, a, v).is_empty(),
                "invariant subspace candidate is not annihilated"
            );
        }
    }
    space
}

/// Image of the kernel projector of the derivation action of a complex
/// structure: applies prod_m (A^2 + m^2) over the nonzero magnitudes of
/// the grade-k spectrum, then re-echelonizes.
fn torus_kernel_step(table: &BladeTable, a: &ExactMatrix, space: &Subspace) -> Subspace {
    let k = table.k;
    let mut basis: Vec<SparseVec> = Vec::new();
    for v in &space.basis {
        let mut w = v.clone();
        let mut m = if k % 2 == 0 { 2i64 } else { 1i64 };
        while m <= k as i64 {
            // w := A(A w) + m^2 w
            let aw = apply_rho_sparse(table, a, &w);
            let aaw = apply_rho_sparse(table, a, &aw);
            w = crate::linalg::sparse_axpy(&aaw, &crate::rational::int(m * m), &w);
            m += 2;
        }
        if !w.is_empty() {
            basis.push(w);
        }
    }
    Subspace::from_spanning(space.ambient, basis)
}

pub fn apply_rho_sparse(table: &BladeTable, a: &ExactMatrix, v: &SparseVec) -> SparseVec {
    let f = table.to_form(v);
    let rf = f.rho_unchecked(a);
    table.to_sparse(&rf)
}
