//! The nine symmetric involutions of the modified Clifford multiplication
//! on R^16, and exact rational elements of the Spin(9) subgroup of SO(16)
//! they generate.
//!
//! The seven 8x8 generators are antisymmetrized combinations of the
//! elementary matrices E_ij (E_ij takes basis vector j to basis vector i),
//! and the sixteen-dimensional involutions are built from them in block
//! form. Whether the E_ij combinations are read literally or transposed is
//! decided by the Clifford relations themselves; see
//! [`CliffordGenerators::build`].

use crate::linalg::ExactMatrix;
use crate::rational::{int, Rational};
use num_traits::Zero;

/// Which reading of the printed E_ij combinations reproduced the Clifford
/// relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EijConvention {
    Literal,
    Transposed,
}

/// The generators e_1..e_7 on R^8 and the nine symmetric involutions
/// I_1..I_9 on R^16.
pub struct CliffordGenerators {
    pub e: Vec<ExactMatrix>,
    pub i: Vec<ExactMatrix>,
    pub convention: EijConvention,
}

/// An exact rational element of Spin(9) inside SO(16), as a product of an
/// even number of unit-vector involutions.
pub struct Spin9Element {
    pub matrix: ExactMatrix,
    pub factors: Vec<Vec<Rational>>,
}

/// (row, col, sign) triples of the printed 8x8 generators, 1-based.
const E_TABLE: [[(usize, usize, i64); 4]; 7] = [
    [(1, 8, 1), (2, 7, 1), (3, 6, -1), (4, 5, -1)],
    [(1, 7, -1), (2, 8, 1), (3, 5, 1), (4, 6, -1)],
    [(1, 6, -1), (2, 5, 1), (3, 8, -1), (4, 7, 1)],
    [(1, 5, -1), (2, 6, -1), (3, 7, -1), (4, 8, -1)],
    [(1, 3, -1), (2, 4, -1), (5, 7, 1), (6, 8, 1)],
    [(1, 4, 1), (2, 3, -1), (5, 8, -1), (6, 7, 1)],
    [(1, 2, 1), (3, 4, -1), (5, 6, -1), (7, 8, 1)],
];

fn build_e(convention: EijConvention) -> Vec<ExactMatrix> {
    E_TABLE
        .iter()
        .map(|rows| {
            let mut m = ExactMatrix::zeros(8, 8);
            for &(r, c, s) in rows {
                let (r, c) = match convention {
                    EijConvention::Literal => (r - 1, c - 1),
                    EijConvention::Transposed => (c - 1, r - 1),
                };
                m.set(r, c, int(s));
                m.set(c, r, int(-s));
            }
            m
        })
        .collect()
}

fn build_i(e: &[ExactMatrix]) -> Vec<ExactMatrix> {
    let mut out = Vec::with_capacity(9);
    for ea in e {
        // I_a = [[0, -e_a], [e_a, 0]]
        let mut m = ExactMatrix::zeros(16, 16);
        for r in 0..8 {
            for c in 0..8 {
                let v = ea.get(r, c);
                if !v.is_zero() {
                    m.set(r, c + 8, -v);
                    m.set(r + 8, c, v.clone());
                }
            }
        }
        out.push(m);
    }
    // I_8 = [[0, E], [E, 0]]
    let mut i8m = ExactMatrix::zeros(16, 16);
    for r in 0..8 {
        i8m.set(r, r + 8, int(1));
        i8m.set(r + 8, r, int(1));
    }
    out.push(i8m);
    // I_9 = [[E, 0], [0, -E]]
    let mut i9m = ExactMatrix::zeros(16, 16);
    for r in 0..8 {
        i9m.set(r, r, int(1));
        i9m.set(r + 8, r + 8, int(-1));
    }
    out.push(i9m);
    out
}

fn relations_hold(i: &[ExactMatrix]) -> bool {
    let id2 = ExactMatrix::identity(16).scale(&int(2));
    for a in 0..9 {
        if !i[a].is_symmetric() {
            return false;
        }
        for b in 0..9 {
            let s = i[a].mul(&i[b]).add(&i[b].mul(&i[a]));
            let expected = if a == b {
                id2.clone()
            } else {
                ExactMatrix::zeros(16, 16)
            };
            if s != expected {
                return false;
            }
        }
    }
    true
}

impl CliffordGenerators {
    /// Builds the printed matrices. The literal E_ij reading is tried
    /// first; if it failed the Clifford relations, the transposed reading
    /// would be used, and the chosen convention is recorded either way.
    pub fn build() -> Self {
        for convention in [EijConvention::Literal, EijConvention::Transposed] {
            let e = build_e(convention);
            let i = build_i(&e);
            if relations_hold(&i) {
                return CliffordGenerators { e, i, convention };
            }
        }
        panic!("neither E_ij convention satisfies the Clifford relations");
    }

    /// Per-pair report of the anticommutation relations
    /// `I_a I_b + I_b I_a = 2 delta_ab Id` and the symmetry of each
    /// involution. Failures are listed, not thrown.
    pub fn verify_relations(&self) -> RelationReport {
        let id2 = ExactMatrix::identity(16).scale(&int(2));
        let mut failing_pairs = Vec::new();
        let mut asymmetric = Vec::new();
        for a in 0..9 {
            if !self.i[a].is_symmetric() {
                asymmetric.push(a + 1);
            }
            for b in 0..9 {
                let s = self.i[a].mul(&self.i[b]).add(&self.i[b].mul(&self.i[a]));
                let expected = if a == b {
                    id2.clone()
                } else {
                    ExactMatrix::zeros(16, 16)
                };
                if s != expected {
                    failing_pairs.push((a + 1, b + 1));
                }
            }
        }
        RelationReport {
            pairs_checked: 81,
            failing_pairs,
            asymmetric,
            convention: self.convention,
        }
    }

    /// The matrix of the vector `v` in R^9 acting on spinors.
    pub fn vector_action(&self, v: &[Rational]) -> ExactMatrix {
        assert_eq!(v.len(), 9);
        let mut m = ExactMatrix::zeros(16, 16);
        for (a, c) in v.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.i[a].scale(c));
            }
        }
        m
    }

    /// The group element `(-1)^k (v_1 . I)(v_2 . I)...(v_2k . I)` for unit
    /// vectors v_i. Fails on a non-unit factor or an odd count.
    pub fn spin9_element(&self, unit_vectors: &[Vec<Rational>]) -> Result<Spin9Element, String> {
        if unit_vectors.len() % 2 != 0 {
            return Err("spin9_element requires an even number of unit vectors".into());
        }
        for v in unit_vectors {
            let norm2: Rational = v.iter().map(|c| c * c).sum();
            if norm2 != int(1) {
                return Err(format!("factor is not a unit vector: |v|^2 = {}", norm2));
            }
        }
        let mut m = ExactMatrix::identity(16);
        for v in unit_vectors {
            m = m.mul(&self.vector_action(v));
        }
        if (unit_vectors.len() / 2) % 2 == 1 {
            m = m.neg();
        }
        Ok(Spin9Element {
            matrix: m,
            factors: unit_vectors.to_vec(),
        })
    }

    /// The 9x9 matrix R of the conjugation action, `g I_b g^-1 = sum_a
    /// R_ab I_a`, recovered by trace pairing. Errors if the conjugate
    /// leaves the span of the involutions.
    pub fn conjugation_matrix(&self, g: &ExactMatrix) -> Result<ExactMatrix, String> {
        let ginv = g.transpose(); // orthogonal
        let mut r = ExactMatrix::zeros(9, 9);
        for b in 0..9 {
            let conj = g.mul(&self.i[b]).mul(&ginv);
            let mut recon = ExactMatrix::zeros(16, 16);
            for a in 0..9 {
                // tr(I_a I_b) = 16 delta_ab
                let c = conj.trace_mul(&self.i[a]) / int(16);
                if !c.is_zero() {
                    recon = recon.add(&self.i[a].scale(&c));
                    r.set(a, b, c);
                }
            }
            if recon != conj {
                return Err(format!(
                    "conjugate of I_{} leaves the span of the involutions",
                    b + 1
                ));
            }
        }
        Ok(r)
    }
}

impl CliffordGenerators {
    /// The 84 products I_a I_b I_c (a < b < c) in lexicographic order.
    pub fn triple_products(&self) -> Vec<ExactMatrix> {
        let mut out = Vec::with_capacity(84);
        for a in 0..9 {
            for b in (a + 1)..9 {
                for c in (b + 1)..9 {
                    out.push(self.i[a].mul(&self.i[b]).mul(&self.i[c]));
                }
            }
        }
        out
    }
}

pub struct RelationReport {
    pub pairs_checked: usize,
    pub failing_pairs: Vec<(usize, usize)>,
    pub asymmetric: Vec<usize>,
    pub convention: EijConvention,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.failing_pairs.is_empty() && self.asymmetric.is_empty()
    }
}

/// Deterministic rational unit vector in R^9 from a seed, via the
/// parametrization v = (1 - |u|^2, 2u_1, ..., 2u_8) / (1 + |u|^2) for a
/// seeded rational u in Q^8; the squared norm is one identically.
pub fn rational_unit_vector(seed: u64) -> Vec<Rational> {
    let mut rng = crate::rng::SplitMix64::new(seed);
    let u: Vec<Rational> = (0..8).map(|_| rng.small_rational()).collect();
    unit_vector_from_u(&u)
}

/// Seeded rational unit vector supported on at most three coordinates;
/// group elements built from these stay sparse, which keeps pullbacks of
/// big forms affordable.
pub fn sparse_unit_vector(seed: u64) -> Vec<Rational> {
    let mut rng = crate::rng::SplitMix64::new(seed);
    const TUPLES: [&[(i64, i64)]; 4] = [
        &[(3, 5), (4, 5)],
        &[(5, 13), (12, 13)],
        &[(1, 3), (2, 3), (2, 3)],
        &[(2, 7), (3, 7), (6, 7)],
    ];
    let tuple = TUPLES[rng.below(4) as usize];
    let mut positions: Vec<usize> = Vec::new();
    while positions.len() < tuple.len() {
        let p = rng.below(9) as usize;
        if !positions.contains(&p) {
            positions.push(p);
        }
    }
    let mut v = vec![Rational::zero(); 9];
    for (&(n, d), &p) in tuple.iter().zip(&positions) {
        let sign = if rng.below(2) == 0 { 1 } else { -1 };
        v[p] = crate::rational::rat(sign * n, d);
    }
    v
}

pub fn unit_vector_from_u(u: &[Rational]) -> Vec<Rational> {
    assert_eq!(u.len(), 8);
    let norm2: Rational = u.iter().map(|c| c * c).sum();
    let denom = int(1) + &norm2;
    let mut v = Vec::with_capacity(9);
    v.push((int(1) - &norm2) / &denom);
    for c in u {
        v.push(int(2) * c / &denom);
    }
    v
}
