//! The unique Spin(9)-invariant 8-form on R^16 and its algebraic
//! differential identities.
//!
//! The invariant subspace of grade-8 forms is computed as the joint kernel
//! of the 36 derivation actions of the Lie algebra basis I_a I_b on the
//! 12870-dimensional space of 8-forms, by incremental kernel intersection:
//! the four commuting products I_1I_2, I_3I_4, I_5I_6, I_7I_8 first (their
//! kernels collapse the space fast and stay block-local), then the
//! remaining 32 generators on the running subspace.

use crate::clifford::CliffordGenerators;
use crate::exterior::{invariant_forms, BladeTable, Form};
use crate::linalg::{ExactMatrix, Subspace};
use crate::rational::{int, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// The invariant 8-form, normalized to coprime integer coefficients with
/// the coefficient of the least blade positive.
pub struct Omega8 {
    pub form: Form,
    /// least nonzero blade, and the scale applied to the raw kernel vector
    pub pivot_blade: u32,
    pub scale: Rational,
}

/// The 36 Lie algebra basis matrices I_a I_b (a < b), the four commuting
/// ones first, then the rest in lexicographic order.
pub fn spin9_generators(g: &CliffordGenerators) -> Vec<ExactMatrix> {
    let torus: [(usize, usize); 4] = [(0, 1), (2, 3), (4, 5), (6, 7)];
    let mut out: Vec<ExactMatrix> = torus.iter().map(|&(a, b)| g.i[a].mul(&g.i[b])).collect();
    for a in 0..9 {
        for b in (a + 1)..9 {
            if torus.contains(&(a, b)) {
                continue;
            }
            out.push(g.i[a].mul(&g.i[b]));
        }
    }
    out
}

/// All 36 pairs (a, b) with a < b in the order of [`spin9_generators`].
pub fn spin9_generator_pairs() -> Vec<(usize, usize)> {
    let torus: [(usize, usize); 4] = [(0, 1), (2, 3), (4, 5), (6, 7)];
    let mut out: Vec<(usize, usize)> = torus.to_vec();
    for a in 0..9 {
        for b in (a + 1)..9 {
            if !torus.contains(&(a, b)) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Dimension of the Spin(9)-invariant subspace of grade-k forms on R^16.
pub fn invariant_dimension(g: &CliffordGenerators, k: usize) -> usize {
    let table = BladeTable::new(16, k);
    let ops = spin9_generators(g);
    invariant_forms(&table, &ops, 4).dim()
}

/// Computes the invariant 8-form; the kernel must be exactly
/// one-dimensional or the construction is inconsistent.
pub fn compute_omega8(g: &CliffordGenerators) -> Omega8 {
    let table = BladeTable::new(16, 8);
    let ops = spin9_generators(g);
    let space: Subspace = invariant_forms(&table, &ops, 4);
    assert_eq!(
        space.dim(),
        1,
        "invariant subspace of 8-forms must be one-dimensional, got {}",
        space.dim()
    );
    let raw = table.to_form(&space.basis[0]);
    // normalize: coprime integers, least-blade coefficient positive
    let mut lcm = BigInt::one();
    for c in raw.coeffs.values() {
        lcm = lcm.lcm(c.denom());
    }
    let mut gcd = BigInt::zero();
    for c in raw.coeffs.values() {
        gcd = gcd.gcd(&(c.numer() * (&lcm / c.denom())));
    }
    let mut scale = Rational::new(lcm, gcd);
    let (&pivot_blade, first) = raw.coeffs.iter().next().expect("nonzero form");
    if (first * &scale).is_negative() {
        scale = -scale;
    }
    Omega8 {
        form: raw.scale(&scale),
        pivot_blade,
        scale,
    }
}

/// Rank of the 120 two-forms built from the products I_a I_b and
/// I_a I_b I_c on R^16; a local frame when the rank is 120.
pub fn frame_2forms_rank(g: &CliffordGenerators) -> usize {
    let table = BladeTable::new(16, 2);
    let mut rows = Vec::new();
    for a in 0..9 {
        for b in (a + 1)..9 {
            rows.push(table.to_sparse(&two_form_of(&g.i[a].mul(&g.i[b]))));
        }
    }
    for a in 0..9 {
        for b in (a + 1)..9 {
            for c in (b + 1)..9 {
                rows.push(table.to_sparse(&two_form_of(&g.i[a].mul(&g.i[b]).mul(&g.i[c]))));
            }
        }
    }
    crate::linalg::SparseMatrix::from_rows(table.dim(), rows).rank()
}

/// The 2-form `(X, Y) -> <X, A Y>` of an antisymmetric matrix.
pub fn two_form_of(a: &ExactMatrix) -> Form {
    assert!(a.is_antisymmetric());
    let n = a.rows;
    let mut f = Form::zero(n, 2);
    for i in 0..n {
        for j in (i + 1)..n {
            let v = a.get(i, j);
            if !v.is_zero() {
                f.add_term((1 << i) | (1 << j), v.clone());
            }
        }
    }
    f
}

/// Precomputed data for the two differential identities: the 84 triple
/// products and the derivation action of each on the 8-form, reused
/// across all inputs.
pub struct IdentityEngine {
    pub triples: Vec<ExactMatrix>,
    rotated: Vec<Form>,
}

impl IdentityEngine {
    pub fn new(triples: Vec<ExactMatrix>, omega: &Form) -> Self {
        let rotated = triples.iter().map(|t| omega.rho(t)).collect();
        IdentityEngine { triples, rotated }
    }

    /// Left-hand side of the codifferential identity: `-6 sum_T (T Gamma)
    /// -| (rho8(T) Omega)` over the 84 triple products T, with the
    /// application direction fixed by the printed covector table (see the
    /// liealg module); the sum is quadratic in T, so generator sign
    /// conventions drop out.
    pub fn delta_side(&self, gamma: &[Rational]) -> Form {
        let mut acc = Form::zero(16, 7);
        for (t, rot) in self.triples.iter().zip(&self.rotated) {
            let v = t.mul_vec(gamma);
            acc = acc.add(&rot.contract(&v));
        }
        acc.scale(&int(-6))
    }

    /// Left-hand side of the differential identity: `6 sum_T (T
    /// Gamma)^flat ^ (rho8(T) Omega)`.
    pub fn d_side(&self, gamma: &[Rational]) -> Form {
        let mut acc = Form::zero(16, 9);
        for (t, rot) in self.triples.iter().zip(&self.rotated) {
            let v = t.mul_vec(gamma);
            let mut vflat = Form::zero(16, 1);
            for (i, ci) in v.iter().enumerate() {
                if !ci.is_zero() {
                    vflat.add_term(1 << i, ci.clone());
                }
            }
            acc = acc.add(&vflat.wedge(rot));
        }
        acc.scale(&int(6))
    }
}

/// Checks `delta_side = -504 (Gamma -| Omega)` exactly; returns the
/// residual form (zero iff the stated identity holds).
pub fn delta_identity_residual(engine: &IdentityEngine, omega: &Form, gamma: &[Rational]) -> Form {
    let lhs = engine.delta_side(gamma);
    let rhs = omega.contract(gamma).scale(&int(-504));
    lhs.sub(&rhs)
}

/// Checks `d_side = -504 star(Gamma -| Omega)` exactly; returns the
/// residual form.
pub fn d_identity_residual(engine: &IdentityEngine, omega: &Form, gamma: &[Rational]) -> Form {
    let lhs = engine.d_side(gamma);
    let rhs = omega.contract(gamma).hodge().scale(&int(-504));
    lhs.sub(&rhs)
}

/// The two equivariant maps from 3-forms to 9-forms built from the
/// invariant 8-form: a single-contraction sum and a starred
/// double-contraction sum.
pub fn psi_maps(omega: &Form, gamma3: &Form) -> (Form, Form) {
    assert_eq!(gamma3.n, 16);
    assert_eq!(gamma3.k, 3, "psi maps take a 3-form");
    let basis: Vec<Vec<Rational>> = (0..16)
        .map(|i| {
            let mut v = vec![Rational::zero(); 16];
            v[i] = int(1);
            v
        })
        .collect();
    let mut psi1 = Form::zero(16, 9);
    for e in &basis {
        psi1 = psi1.add(&gamma3.contract(e).wedge(&omega.contract(e)));
    }
    let mut sum2 = Form::zero(16, 7);
    for ei in &basis {
        for ej in &basis {
            let gij = gamma3.contract(ej).contract(ei);
            if gij.is_zero() {
                continue;
            }
            sum2 = sum2.add(&gij.wedge(&omega.contract(ej).contract(ei)));
        }
    }
    (psi1, sum2.hodge())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega8_exists_and_is_self_dual() {
        let g = CliffordGenerators::build();
        let om = compute_omega8(&g);
        assert_eq!(om.form.coeffs.len(), 702);
        assert_eq!(om.form.hodge(), om.form);
        // coefficients are coprime integers, least blade positive
        use num_traits::One;
        let first = om.form.coeffs.values().next().unwrap();
        assert!(first > &Rational::zero());
        assert!(om.form.coeffs.values().all(|c| c.denom().is_one()));
    }

    #[test]
    fn star_relates_the_two_sides() {
        // applying the star to the differential side recovers minus the
        // codifferential side, forced by self-duality and the odd grade
        let g = CliffordGenerators::build();
        let om = compute_omega8(&g);
        let engine = IdentityEngine::new(g.triple_products(), &om.form);
        let mut rng = crate::rng::SplitMix64::new(4);
        for _ in 0..2 {
            let gamma = rng.vector(16);
            let a = engine.delta_side(&gamma);
            let b = engine.d_side(&gamma);
            assert_eq!(b.hodge(), a.scale(&crate::rational::int(-1)));
        }
    }

    #[test]
    fn identity_sides_vanish_on_zero_input() {
        let g = CliffordGenerators::build();
        let om = compute_omega8(&g);
        let engine = IdentityEngine::new(g.triple_products(), &om.form);
        let zero = vec![Rational::zero(); 16];
        assert!(engine.delta_side(&zero).is_zero());
        assert!(engine.d_side(&zero).is_zero());
    }

    #[test]
    fn psi_contraction_structure() {
        // a monomial 3-form passes through both maps to genuine 9-forms
        let g = CliffordGenerators::build();
        let om = compute_omega8(&g);
        let mut probe = Form::zero(16, 3);
        probe.add_term(0b111, crate::rational::int(1));
        let (p1, p2) = psi_maps(&om.form, &probe);
        assert_eq!(p1.k, 9);
        assert_eq!(p2.k, 9);
        assert!(!p1.is_zero());
    }
}
