//! Spinor-valued forms on R^9 and their decomposition theory: the raising
//! and lowering operators built from Clifford multiplication, the kernel
//! spaces they cut out, the two embeddings of Lambda^2(R^9) and
//! Lambda^3(R^9) into antisymmetric endomorphisms of the spinor space,
//! and Schur-type commutant computations certifying irreducibility.

use crate::clifford::CliffordGenerators;
use crate::exterior::{Blade, BladeTable, Form};
use crate::linalg::{sparse_axpy, ExactMatrix, SparseMatrix, SparseVec, Subspace};
use crate::rational::{int, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Element of Lambda^k(R^9) tensor the 16-dimensional spinor space,
/// keyed by (9-bit blade, spinor index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorValuedForm {
    pub k: usize,
    pub coeffs: BTreeMap<(Blade, usize), Rational>,
}

impl SpinorValuedForm {
    pub fn zero(k: usize) -> Self {
        SpinorValuedForm {
            k,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(k: usize, blade: Blade, spinor: usize, c: Rational) -> Self {
        assert_eq!(blade.count_ones() as usize, k);
        assert!(spinor < 16);
        let mut s = Self::zero(k);
        s.add_term(blade, spinor, c);
        s
    }

    pub fn add_term(&mut self, blade: Blade, spinor: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self
            .coeffs
            .entry((blade, spinor))
            .or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&(blade, spinor));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k);
        let mut out = self.clone();
        for ((b, s), c) in &other.coeffs {
            out.add_term(*b, *s, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.k);
        if c.is_zero() {
            return out;
        }
        for ((b, s), v) in &self.coeffs {
            out.coeffs.insert((*b, *s), v * c);
        }
        out
    }

    /// Inner product for blade-orthonormal times spinor-orthonormal bases.
    pub fn dot(&self, other: &Self) -> Rational {
        let mut acc = Rational::zero();
        for (key, c) in &self.coeffs {
            if let Some(d) = other.coeffs.get(key) {
                acc += c * d;
            }
        }
        acc
    }
}

/// Coordinate system for grade-k spinor-valued forms: index is
/// blade rank * 16 + spinor index.
pub struct SpinorTable {
    pub blades: BladeTable,
}

impl SpinorTable {
    pub fn new(k: usize) -> Self {
        SpinorTable {
            blades: BladeTable::new(9, k),
        }
    }

    pub fn dim(&self) -> usize {
        self.blades.dim() * 16
    }

    pub fn to_sparse(&self, s: &SpinorValuedForm) -> SparseVec {
        s.coeffs
            .iter()
            .map(|((b, sp), c)| (self.blades.index(*b) * 16 + sp, c.clone()))
            .collect()
    }

    pub fn to_form(&self, k: usize, v: &SparseVec) -> SpinorValuedForm {
        let mut s = SpinorValuedForm::zero(k);
        for (i, c) in v {
            s.add_term(self.blades.blades[i / 16], i % 16, c.clone());
        }
        s
    }
}

/// Raising operator: `sum_a (e_a ^ omega) tensor (I_a phi)`, grade k to
/// k+1. Grades above 8 are out of range.
pub fn theta(g: &CliffordGenerators, s: &SpinorValuedForm) -> SpinorValuedForm {
    assert!(s.k <= 8, "theta raises grade k <= 8");
    let mut out = SpinorValuedForm::zero(s.k + 1);
    for ((b, sp), c) in &s.coeffs {
        for a in 0..9 {
            if b & (1u32 << a) != 0 {
                continue;
            }
            let sign = if (b & ((1u32 << a) - 1)).count_ones() % 2 == 0 {
                1
            } else {
                -1
            };
            let nb = b | (1u32 << a);
            for t in 0..16 {
                let m = g.i[a].get(t, *sp);
                if !m.is_zero() {
                    let v = if sign > 0 { c * m } else { -(c * m) };
                    out.add_term(nb, t, v);
                }
            }
        }
    }
    out
}

/// Lowering operator: `- sum_a (e_a -| omega) tensor (I_a phi)`, grade k
/// to k-1; grade zero is a usage error.
pub fn theta_star(g: &CliffordGenerators, s: &SpinorValuedForm) -> SpinorValuedForm {
    assert!(s.k >= 1, "theta_star lowers grade k >= 1");
    let mut out = SpinorValuedForm::zero(s.k - 1);
    for ((b, sp), c) in &s.coeffs {
        for a in 0..9 {
            if b & (1u32 << a) == 0 {
                continue;
            }
            let sign = if (b & ((1u32 << a) - 1)).count_ones() % 2 == 0 {
                -1
            } else {
                1
            };
            let nb = b & !(1u32 << a);
            for t in 0..16 {
                let m = g.i[a].get(t, *sp);
                if !m.is_zero() {
                    let v = if sign > 0 { c * m } else { -(c * m) };
                    out.add_term(nb, t, v);
                }
            }
        }
    }
    out
}

/// Kernel of the lowering operator on grade r; all of the spinor space
/// for r = 0.
pub fn p_space(g: &CliffordGenerators, r: usize) -> Subspace {
    let table = SpinorTable::new(r);
    if r == 0 {
        return Subspace::full(16);
    }
    let target = SpinorTable::new(r - 1);
    let mut by_coord: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for j in 0..table.dim() {
        let s = table.to_form(r, &vec![(j, int(1))]);
        let im = target.to_sparse(&theta_star(g, &s));
        for (c, v) in im {
            by_coord.entry(c).or_default().push((j, v));
        }
    }
    SparseMatrix::from_rows(table.dim(), by_coord.into_values().collect()).kernel()
}

pub struct DecompositionReport {
    pub k: usize,
    /// (r, dim of P_r, rank of the composite image)
    pub layers: Vec<(usize, usize, usize)>,
    pub total_rank: usize,
    pub expected_total: usize,
}

impl DecompositionReport {
    pub fn passes(&self) -> bool {
        self.layers.iter().all(|(_, d, r)| d == r) && self.total_rank == self.expected_total
    }
}

/// Verifies that the images of the kernels under composed raising
/// operators are injective, independent, and fill grade k; for k in 1..=3.
pub fn verify_decomposition(g: &CliffordGenerators, k: usize) -> DecompositionReport {
    assert!((1..=3).contains(&k));
    let table_k = SpinorTable::new(k);
    let mut layers = Vec::new();
    let mut all_rows: Vec<SparseVec> = Vec::new();
    for r in 0..=k {
        let pr = p_space(g, r);
        let table_r = SpinorTable::new(r);
        let mut rows = Vec::with_capacity(pr.dim());
        for v in &pr.basis {
            let mut s = table_r.to_form(r, v);
            for _ in r..k {
                s = theta(g, &s);
            }
            rows.push(table_k.to_sparse(&s));
        }
        let rank = SparseMatrix::from_rows(table_k.dim(), rows.clone()).rank();
        layers.push((r, pr.dim(), rank));
        all_rows.extend(rows);
    }
    let total_rank = SparseMatrix::from_rows(table_k.dim(), all_rows).rank();
    DecompositionReport {
        k,
        layers,
        total_rank,
        expected_total: table_k.dim(),
    }
}

/// Flattens an antisymmetric 16x16 matrix to coordinates over the 120
/// pairs (i < j).
fn flatten_antisym(m: &ExactMatrix) -> SparseVec {
    let mut out = Vec::new();
    let mut idx = 0usize;
    for i in 0..16 {
        for j in (i + 1)..16 {
            let v = m.get(i, j);
            if !v.is_zero() {
                out.push((idx, v.clone()));
            }
            idx += 1;
        }
    }
    out
}

pub struct EmbeddingReport {
    pub rank2: usize,
    pub rank3: usize,
    pub combined: usize,
}

/// The embeddings of the 36 wedge monomials and the 84 triple wedge
/// monomials into antisymmetric endomorphisms of the spinor space, via
/// products of the involutions; injective with independent images filling
/// the 120-dimensional space.
pub fn lambda2_lambda3_embeddings(g: &CliffordGenerators) -> EmbeddingReport {
    let mut rows2 = Vec::new();
    for a in 0..9 {
        for b in (a + 1)..9 {
            rows2.push(flatten_antisym(&g.i[a].mul(&g.i[b])));
        }
    }
    let mut rows3 = Vec::new();
    for a in 0..9 {
        for b in (a + 1)..9 {
            for c in (b + 1)..9 {
                rows3.push(flatten_antisym(&g.i[a].mul(&g.i[b]).mul(&g.i[c])));
            }
        }
    }
    let rank2 = SparseMatrix::from_rows(120, rows2.clone()).rank();
    let rank3 = SparseMatrix::from_rows(120, rows3.clone()).rank();
    rows2.extend(rows3);
    let combined = SparseMatrix::from_rows(120, rows2).rank();
    EmbeddingReport {
        rank2,
        rank3,
        combined,
    }
}

// ---------------------------------------------------------------------------
// generator actions on the representation spaces
// ---------------------------------------------------------------------------

/// A representation of the 36 subalgebra generators on a coordinate
/// space: a closure applying generator `idx` to a sparse vector.
pub struct GeneratorAction {
    pub dim: usize,
    ops: Vec<Box<dyn Fn(&SparseVec) -> SparseVec>>,
}

impl GeneratorAction {
    pub fn apply(&self, idx: usize, v: &SparseVec) -> SparseVec {
        (self.ops[idx])(v)
    }

    pub fn count(&self) -> usize {
        self.ops.len()
    }
}

fn matrix_columns(m: &ExactMatrix) -> Vec<SparseVec> {
    (0..m.cols)
        .map(|j| {
            (0..m.rows)
                .filter(|&i| !m.get(i, j).is_zero())
                .map(|i| (i, m.get(i, j).clone()))
                .collect()
        })
        .collect()
}

fn apply_columns(cols: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut acc: SparseVec = Vec::new();
    for (j, c) in v {
        acc = sparse_axpy(&acc, c, &cols[*j]);
    }
    acc
}

/// The spinor representation itself: generators act by their matrices.
pub fn delta9_action(g: &CliffordGenerators) -> GeneratorAction {
    let gens = crate::invariant::spin9_generators(g);
    let ops = gens
        .into_iter()
        .map(|m| {
            let cols = matrix_columns(&m);
            Box::new(move |v: &SparseVec| apply_columns(&cols, v))
                as Box<dyn Fn(&SparseVec) -> SparseVec>
        })
        .collect();
    GeneratorAction { dim: 16, ops }
}

/// The 9x9 matrix of the bracket action `[I_a I_b, -]` on the span of the
/// involutions: a rotation generator of speed two in the (a, b) plane.
pub fn conjugation_matrix_9(pair: (usize, usize)) -> ExactMatrix {
    let (a, b) = pair;
    let mut m = ExactMatrix::zeros(9, 9);
    m.set(b, a, int(-2));
    m.set(a, b, int(2));
    m
}

/// The conjugation representation on the span of the involutions.
pub fn lambda1_action(_g: &CliffordGenerators) -> GeneratorAction {
    let pairs = crate::invariant::spin9_generator_pairs();
    let ops = pairs
        .into_iter()
        .map(|p| {
            let cols = matrix_columns(&conjugation_matrix_9(p));
            Box::new(move |v: &SparseVec| apply_columns(&cols, v))
                as Box<dyn Fn(&SparseVec) -> SparseVec>
        })
        .collect();
    GeneratorAction { dim: 9, ops }
}

/// The derivation action on grade-k forms over R^9 through the
/// conjugation representation.
pub fn lambda_k9_action(k: usize) -> GeneratorAction {
    let pairs = crate::invariant::spin9_generator_pairs();
    let ops: Vec<Box<dyn Fn(&SparseVec) -> SparseVec>> = pairs
        .into_iter()
        .map(|p| {
            let m = conjugation_matrix_9(p);
            let table = BladeTable::new(9, k);
            Box::new(move |v: &SparseVec| crate::exterior::apply_rho_sparse(&table, &m, v))
                as Box<dyn Fn(&SparseVec) -> SparseVec>
        })
        .collect();
    GeneratorAction {
        dim: BladeTable::new(9, k).dim(),
        ops,
    }
}

/// The tensor action on grade-k spinor-valued forms: derivation through
/// the conjugation representation on the form part plus the matrix action
/// on the spinor part.
pub fn spinor_form_action(g: &CliffordGenerators, k: usize) -> GeneratorAction {
    let pairs = crate::invariant::spin9_generator_pairs();
    let gens = crate::invariant::spin9_generators(g);
    let ops: Vec<Box<dyn Fn(&SparseVec) -> SparseVec>> = pairs
        .into_iter()
        .zip(gens)
        .map(|(p, mat)| {
            let conj = conjugation_matrix_9(p);
            let table = SpinorTable::new(k);
            Box::new(move |v: &SparseVec| {
                let s = table.to_form(k, v);
                let mut out = SpinorValuedForm::zero(k);
                for ((b, sp), c) in &s.coeffs {
                    // derivation on the blade through the conjugation action
                    let f = Form::from_blade(9, *b, c.clone());
                    for (nb, nc) in f.rho(&conj).coeffs {
                        out.add_term(nb, *sp, nc);
                    }
                    // matrix action on the spinor
                    for t in 0..16 {
                        let m = mat.get(t, *sp);
                        if !m.is_zero() {
                            out.add_term(*b, t, c * m);
                        }
                    }
                }
                table.to_sparse(&out)
            }) as Box<dyn Fn(&SparseVec) -> SparseVec>
        })
        .collect();
    GeneratorAction {
        dim: SpinorTable::new(k).dim(),
        ops,
    }
}

// ---------------------------------------------------------------------------
// commutant computation
// ---------------------------------------------------------------------------

pub struct CommutantReport {
    pub space_dim: usize,
    pub invariant: bool,
    pub dim: usize,
}

/// Applies `[R, T] = R T - T R` to a sparse coefficient vector of T over
/// the d*d Hom coordinates.
fn ad_apply(cols: &[SparseVec], rows: &[SparseVec], d: usize, t: &SparseVec) -> SparseVec {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (idx, c) in t {
        let (u, v) = (idx / d, idx % d);
        for (p, r) in &cols[u] {
            let e = acc.entry(p * d + v).or_insert_with(Rational::zero);
            *e += r * c;
        }
        for (q, r) in &rows[v] {
            let e = acc.entry(u * d + q).or_insert_with(Rational::zero);
            *e -= r * c;
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Dimension of the algebra of endomorphisms of `space` commuting with
/// every generator, computed as an incremental kernel over the
/// commutator constraints. The four leading generators commute and their
/// adjoint actions on Hom are semisimple with even spectra bounded by 18,
/// so those kernels are taken as spectral-projector images, which keeps
/// the intermediate bases supported on tiny blocks; the remaining
/// generators are folded in as constraint kernels on the running space.
/// The space is first checked to be invariant; non-invariance is
/// reported, not thrown. A commutant of dimension one certifies
/// irreducibility over the rationals for these representations.
pub fn commutant_dim(action: &GeneratorAction, space: &Subspace) -> CommutantReport {
    assert_eq!(action.dim, space.ambient);
    let d = space.dim();
    // invariance check and restricted matrices (columns)
    let mut restricted: Vec<Vec<SparseVec>> = Vec::with_capacity(action.count());
    for idx in 0..action.count() {
        let mut cols = Vec::with_capacity(d);
        for b in &space.basis {
            let im = action.apply(idx, b);
            if !space.contains(&im) {
                return CommutantReport {
                    space_dim: d,
                    invariant: false,
                    dim: 0,
                };
            }
            cols.push(space.coordinates_unchecked(&im));
        }
        restricted.push(cols);
    }
    let rows_of = |cols: &Vec<SparseVec>| -> Vec<SparseVec> {
        let mut rows: Vec<SparseVec> = vec![Vec::new(); d];
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col {
                rows[*i].push((j, c.clone()));
            }
        }
        rows
    };
    // T is supported on d x d coefficients, index u * d + v
    let mut running = Subspace::full(d * d);
    for (gen_idx, cols) in restricted.iter().enumerate() {
        if running.dim() == 0 {
            break;
        }
        let rows = rows_of(cols);
        if gen_idx < 4 {
            // projector image: prod over even m of (ad^2 + m^2)
            let mut basis: Vec<SparseVec> = Vec::new();
            for t in &running.basis {
                let mut w = t.clone();
                let mut m = 2i64;
                while m <= 18 {
                    let a1 = ad_apply(cols, &rows, d, &w);
                    let a2 = ad_apply(cols, &rows, d, &a1);
                    w = crate::linalg::sparse_axpy(&a2, &int(m * m), &w);
                    m += 2;
                }
                if !w.is_empty() {
                    basis.push(w);
                }
            }
            running = Subspace::from_spanning(d * d, basis);
        } else {
            let images: Vec<SparseVec> = running
                .basis
                .iter()
                .map(|t| ad_apply(cols, &rows, d, t))
                .collect();
            running = running.restricted_kernel(&images);
        }
    }
    // every adjoint constraint must annihilate the result
    for cols in &restricted {
        let rows = rows_of(cols);
        for t in &running.basis {
            assert!(
                ad_apply(cols, &rows, d, t).is_empty(),
                "commutant candidate fails a commutator constraint"
            );
        }
    }
    CommutantReport {
        space_dim: d,
        invariant: true,
        dim: running.dim(),
    }
}

/// The composite of the lowering operator after the raising operator on
/// grade zero is an exact multiple of the identity; returns the multiple.
pub fn theta_star_theta_constant(g: &CliffordGenerators) -> Rational {
    let probe = SpinorValuedForm::monomial(0, 0, 0, int(1));
    let composite = theta_star(g, &theta(g, &probe));
    let c = composite
        .coeffs
        .get(&(0, 0))
        .cloned()
        .unwrap_or_else(Rational::zero);
    // verify the multiple on the whole spinor space
    for sp in 0..16 {
        let s = SpinorValuedForm::monomial(0, 0, sp, int(1));
        let got = theta_star(g, &theta(g, &s));
        assert_eq!(
            got,
            s.scale(&c),
            "composite is not a multiple of the identity"
        );
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens() -> CliffordGenerators {
        CliffordGenerators::build()
    }

    #[test]
    fn theta_basic_cases() {
        let g = gens();
        // theta(1 tensor phi) = sum_a e_a tensor (I_a phi), rank 16 over
        // the spinor space since theta* theta = -9 Id makes it injective
        let t0 = SpinorTable::new(0);
        let t1 = SpinorTable::new(1);
        let rows: Vec<SparseVec> = (0..16)
            .map(|sp| t1.to_sparse(&theta(&g, &t0.to_form(0, &vec![(sp, int(1))]))))
            .collect();
        assert_eq!(SparseMatrix::from_rows(t1.dim(), rows).rank(), 16);
        // zero maps to zero
        assert!(theta(&g, &SpinorValuedForm::zero(0)).is_zero());
        // no repeated wedge factor: theta of e_1 tensor phi avoids blade e_1^e_1
        let s = SpinorValuedForm::monomial(1, 1, 5, int(1));
        for ((b, _), _) in &theta(&g, &s).coeffs {
            assert_eq!(b.count_ones(), 2);
            assert!(b & 1 == 1, "every term keeps the e_1 factor");
        }
    }

    #[test]
    fn theta_star_on_basis_covector() {
        let g = gens();
        // theta* (e_1 tensor phi) = -1 tensor (I_1 phi)
        for sp in 0..16 {
            let s = SpinorValuedForm::monomial(1, 1, sp, int(1));
            let got = theta_star(&g, &s);
            let mut want = SpinorValuedForm::zero(0);
            for t in 0..16 {
                let m = g.i[0].get(t, sp);
                if !m.is_zero() {
                    want.add_term(0, t, -m.clone());
                }
            }
            assert_eq!(got, want);
        }
        // zero maps to zero
        assert!(theta_star(&g, &SpinorValuedForm::zero(2)).is_zero());
    }

    #[test]
    #[should_panic(expected = "lowers grade")]
    fn theta_star_rejects_grade_zero() {
        let g = gens();
        let s = SpinorValuedForm::monomial(0, 0, 0, int(1));
        let _ = theta_star(&g, &s);
    }

    #[test]
    fn composite_constant_is_minus_nine() {
        let g = gens();
        assert_eq!(theta_star_theta_constant(&g), int(-9));
    }

    #[test]
    fn p_space_dimensions() {
        let g = gens();
        assert_eq!(p_space(&g, 0).dim(), 16);
        assert_eq!(p_space(&g, 1).dim(), 128);
        assert_eq!(p_space(&g, 2).dim(), 432);
        assert_eq!(p_space(&g, 3).dim(), 768);
    }

    #[test]
    fn decompositions_fill_each_grade() {
        let g = gens();
        let expected: [(usize, usize); 3] = [(1, 144), (2, 576), (3, 1344)];
        for (k, total) in expected {
            let rep = verify_decomposition(&g, k);
            assert!(rep.passes(), "grade {k} report failed");
            assert_eq!(rep.expected_total, total);
            assert_eq!(rep.total_rank, total);
        }
    }

    #[test]
    fn embeddings_fill_antisymmetric_endomorphisms() {
        let g = gens();
        let rep = lambda2_lambda3_embeddings(&g);
        assert_eq!(rep.rank2, 36);
        assert_eq!(rep.rank3, 84);
        assert_eq!(rep.combined, 120);
    }

    #[test]
    fn theta_commutes_with_the_action() {
        let g = gens();
        let act1 = spinor_form_action(&g, 1);
        let act2 = spinor_form_action(&g, 2);
        let t1 = SpinorTable::new(1);
        let t2 = SpinorTable::new(2);
        let mut rng = crate::rng::SplitMix64::new(5);
        for idx in [0usize, 4, 17, 35] {
            let mut s = SpinorValuedForm::zero(1);
            for _ in 0..4 {
                let b = 1u32 << rng.below(9);
                s.add_term(b, rng.below(16) as usize, rng.small_rational());
            }
            let lhs = theta(&g, &t1.to_form(1, &act1.apply(idx, &t1.to_sparse(&s))));
            let rhs = t2.to_form(2, &act2.apply(idx, &t2.to_sparse(&theta(&g, &s))));
            assert_eq!(lhs, rhs, "generator {idx}");
        }
    }

    #[test]
    fn theta_adjoint_up_to_sign() {
        // <theta s, t> = -<s, theta* t> on full bases for k = 0, 1
        let g = gens();
        for k in 0..=1usize {
            let tk = SpinorTable::new(k);
            let tk1 = SpinorTable::new(k + 1);
            for i in (0..tk.dim()).step_by(7) {
                let s = tk.to_form(k, &vec![(i, int(1))]);
                let ts = theta(&g, &s);
                for j in (0..tk1.dim()).step_by(11) {
                    let t = tk1.to_form(k + 1, &vec![(j, int(1))]);
                    assert_eq!(ts.dot(&t), -s.dot(&theta_star(&g, &t)));
                }
            }
        }
    }

    #[test]
    fn p_spaces_are_invariant_and_irreducible() {
        let g = gens();
        let act = spinor_form_action(&g, 1);
        let p1 = p_space(&g, 1);
        let rep = commutant_dim(&act, &p1);
        assert!(rep.invariant);
        assert_eq!(rep.dim, 1);
    }

    #[test]
    fn commutant_dimensions_small_spaces() {
        let g = gens();
        let rep = commutant_dim(&delta9_action(&g), &Subspace::full(16));
        assert!(rep.invariant);
        assert_eq!(rep.dim, 1);
        let rep = commutant_dim(&lambda1_action(&g), &Subspace::full(9));
        assert!(rep.invariant);
        assert_eq!(rep.dim, 1);
        let rep = commutant_dim(&lambda_k9_action(2), &Subspace::full(36));
        assert!(rep.invariant);
        assert_eq!(rep.dim, 1);
        let rep = commutant_dim(&lambda_k9_action(3), &Subspace::full(84));
        assert!(rep.invariant);
        assert_eq!(rep.dim, 1);
    }

    #[test]
    fn reducible_double_copy_has_commutant_four() {
        // two copies of the spinor representation: 2x2 scalar blocks
        let g = gens();
        let gens36 = crate::invariant::spin9_generators(&g);
        let ops: Vec<Box<dyn Fn(&SparseVec) -> SparseVec>> = gens36
            .into_iter()
            .map(|m| {
                let cols = matrix_columns(&m);
                Box::new(move |v: &SparseVec| {
                    let mut lo: SparseVec = Vec::new();
                    let mut hi: SparseVec = Vec::new();
                    for (i, c) in v {
                        if *i < 16 {
                            lo.push((*i, c.clone()));
                        } else {
                            hi.push((*i - 16, c.clone()));
                        }
                    }
                    let mut out = apply_columns(&cols, &lo);
                    for (i, c) in apply_columns(&cols, &hi) {
                        out.push((i + 16, c));
                    }
                    out.sort_by_key(|e| e.0);
                    out
                }) as Box<dyn Fn(&SparseVec) -> SparseVec>
            })
            .collect();
        let act = GeneratorAction { dim: 32, ops };
        let rep = commutant_dim(&act, &Subspace::full(32));
        assert!(rep.invariant);
        assert_eq!(rep.dim, 4);
    }

    #[test]
    fn lambda3_of_spinor_space_dimension_count() {
        let g = gens();
        let three = BladeTable::new(16, 3).dim();
        assert_eq!(three, 560);
        assert_eq!(three, p_space(&g, 1).dim() + p_space(&g, 2).dim());
    }
}
