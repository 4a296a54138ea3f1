//! The splitting so(16) = spin(9) + m with explicit bases, orthogonal
//! projections under <A,B> = -tr(AB), and the 16x16 matrix of covectors
//! attached to a vector by the triple-product sum, together with its
//! circle-times-sphere specialization.

use crate::clifford::CliffordGenerators;
use crate::linalg::{ExactMatrix, SparseMatrix, Subspace};
use crate::rational::{int, Rational};
use num_traits::Zero;

/// Bases of the subalgebra (36 products I_a I_b) and of its orthogonal
/// complement (84 products I_a I_b I_c), with their index tuples.
pub struct LieBases {
    pub spin9: Vec<((usize, usize), ExactMatrix)>,
    pub m: Vec<((usize, usize, usize), ExactMatrix)>,
}

pub fn build_bases(g: &CliffordGenerators) -> LieBases {
    let mut spin9 = Vec::with_capacity(36);
    for a in 0..9 {
        for b in (a + 1)..9 {
            spin9.push(((a, b), g.i[a].mul(&g.i[b])));
        }
    }
    let mut m = Vec::with_capacity(84);
    for a in 0..9 {
        for b in (a + 1)..9 {
            for c in (b + 1)..9 {
                m.push(((a, b, c), g.i[a].mul(&g.i[b]).mul(&g.i[c])));
            }
        }
    }
    LieBases { spin9, m }
}

/// Rank of the 120 basis matrices flattened to rows of length 256; equals
/// 120 = dim so(16) exactly when they are linearly independent.
pub fn stacked_rank(bases: &LieBases) -> usize {
    let mut rows = Vec::with_capacity(120);
    let flatten = |m: &ExactMatrix| -> Vec<(usize, Rational)> {
        let mut row = Vec::new();
        for i in 0..16 {
            for j in 0..16 {
                let v = m.get(i, j);
                if !v.is_zero() {
                    row.push((i * 16 + j, v.clone()));
                }
            }
        }
        row
    };
    for (_, m) in &bases.spin9 {
        rows.push(flatten(m));
    }
    for (_, m) in &bases.m {
        rows.push(flatten(m));
    }
    SparseMatrix::from_rows(256, rows).rank()
}

/// Orthogonal projection of an antisymmetric W onto the subalgebra and the
/// complement: W = spin9 part + m part exactly, with the coefficient
/// vectors over the two bases.
pub struct Projection {
    pub spin9_part: ExactMatrix,
    pub m_part: ExactMatrix,
    pub spin9_coeffs: Vec<Rational>,
    pub m_coeffs: Vec<Rational>,
}

pub fn project(bases: &LieBases, w: &ExactMatrix) -> Projection {
    assert!(
        w.is_antisymmetric(),
        "projection expects an element of so(16)"
    );
    // each basis element has <B,B> = -tr(B^2) = 16 and the family is
    // orthogonal, so coefficients are -tr(W B)/16
    let coeff = |b: &ExactMatrix| -> Rational { -w.trace_mul(b) / int(16) };
    let mut spin9_part = ExactMatrix::zeros(16, 16);
    let mut spin9_coeffs = Vec::with_capacity(36);
    for (_, b) in &bases.spin9 {
        let c = coeff(b);
        if !c.is_zero() {
            spin9_part = spin9_part.add(&b.scale(&c));
        }
        spin9_coeffs.push(c);
    }
    let mut m_part = ExactMatrix::zeros(16, 16);
    let mut m_coeffs = Vec::with_capacity(84);
    for (_, b) in &bases.m {
        let c = coeff(b);
        if !c.is_zero() {
            m_part = m_part.add(&b.scale(&c));
        }
        m_coeffs.push(c);
    }
    Projection {
        spin9_part,
        m_part,
        spin9_coeffs,
        m_coeffs,
    }
}

// ---------------------------------------------------------------------------
// the 16x16 matrix of covectors
// ---------------------------------------------------------------------------

/// A 16x16 matrix of covectors on R^16: entry (i, j) is a 1-form stored
/// as its 16 coordinates over sigma^1..sigma^16.
pub struct GammaMatrix {
    pub entries: Vec<Vec<Vec<Rational>>>,
}

impl GammaMatrix {
    pub fn zero() -> Self {
        GammaMatrix {
            entries: vec![vec![vec![Rational::zero(); 16]; 16]; 16],
        }
    }

    /// Evaluates every covector entry at X, giving a numeric matrix.
    pub fn evaluate(&self, x: &[Rational]) -> ExactMatrix {
        ExactMatrix::from_fn(16, 16, |i, j| {
            self.entries[i][j].iter().zip(x).map(|(c, xv)| c * xv).sum()
        })
    }

    pub fn is_antisymmetric(&self) -> bool {
        for i in 0..16 {
            for j in 0..16 {
                for k in 0..16 {
                    if self.entries[i][j][k] != -&self.entries[j][i][k] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// The unscaled triple-product sum attached to the vector `v`: entry
/// (i, j) is the covector `X -> sum_T <T v, X> T_ij` over the 84 triple
/// products T. The direction of the product's application to `v` is fixed
/// by the printed table itself (the tensor is quadratic in T, so the sign
/// conventions of the individual generators drop out).
pub fn gamma_matrix_of(bases: &LieBases, v: &[Rational]) -> GammaMatrix {
    let mut out = GammaMatrix::zero();
    for (_, t) in &bases.m {
        let w = t.mul_vec(v);
        for i in 0..16 {
            for j in 0..16 {
                let tij = t.get(i, j);
                if tij.is_zero() {
                    continue;
                }
                for (k, wk) in w.iter().enumerate() {
                    if !wk.is_zero() {
                        let cur = out.entries[i][j][k].clone();
                        out.entries[i][j][k] = cur + wk * tij;
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// the printed table and its comparison
// ---------------------------------------------------------------------------

/// The table as printed, one `(coefficient, sigma index)` per nonzero
/// entry, 1-based sigma indices. Two cells are suspected misprints — they
/// contradict the antisymmetry of every other pair — and the comparison
/// reports computed values for them rather than trusting the text.
pub const PRINTED_TABLE: [[(i64, usize); 16]; 16] = [
    [
        (0, 0),
        (2, 15),
        (-2, 14),
        (-2, 13),
        (2, 12),
        (2, 11),
        (-2, 10),
        (-2, 9),
        (-1, 8),
        (-1, 7),
        (1, 6),
        (1, 5),
        (-1, 4),
        (-1, 3),
        (1, 2),
        (7, 1),
    ],
    [
        (-2, 15),
        (0, 0),
        (2, 13),
        (-2, 14),
        (-2, 11),
        (2, 12),
        (2, 9),
        (-2, 10),
        (1, 7),
        (-1, 8),
        (-1, 5),
        (1, 6),
        (1, 3),
        (-1, 4),
        (-1, 1),
        (7, 2),
    ],
    [
        (2, 14),
        (-1, 13),
        (0, 0),
        (-2, 15),
        (2, 10),
        (-2, 9),
        (2, 12),
        (-2, 11),
        (-1, 6),
        (1, 5),
        (-1, 8),
        (1, 7),
        (-1, 2),
        (1, 1),
        (-1, 4),
        (7, 3),
    ],
    [
        (2, 13),
        (2, 14),
        (2, 15),
        (0, 0),
        (-2, 9),
        (-2, 10),
        (-2, 11),
        (-2, 12),
        (-1, 5),
        (-1, 6),
        (-1, 7),
        (-1, 8),
        (1, 1),
        (1, 2),
        (1, 3),
        (7, 4),
    ],
    [
        (-2, 12),
        (2, 11),
        (-2, 10),
        (2, 9),
        (0, 0),
        (-2, 15),
        (2, 14),
        (-2, 13),
        (1, 4),
        (-1, 3),
        (1, 2),
        (-1, 1),
        (-1, 8),
        (1, 7),
        (-1, 6),
        (7, 5),
    ],
    [
        (-2, 11),
        (-2, 12),
        (2, 9),
        (2, 10),
        (2, 15),
        (0, 0),
        (-2, 13),
        (-2, 14),
        (1, 3),
        (1, 4),
        (-1, 1),
        (-1, 2),
        (-1, 7),
        (-1, 8),
        (1, 5),
        (7, 6),
    ],
    [
        (2, 10),
        (-2, 9),
        (-2, 12),
        (2, 11),
        (-2, 14),
        (1, 13),
        (0, 0),
        (-2, 15),
        (-1, 2),
        (1, 1),
        (1, 4),
        (-1, 3),
        (1, 6),
        (-1, 5),
        (-1, 8),
        (7, 7),
    ],
    [
        (2, 9),
        (2, 10),
        (2, 11),
        (2, 12),
        (2, 13),
        (2, 14),
        (2, 15),
        (0, 0),
        (1, 1),
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (1, 6),
        (1, 7),
        (7, 8),
    ],
    [
        (1, 8),
        (-1, 7),
        (1, 6),
        (1, 5),
        (-1, 4),
        (-1, 3),
        (1, 2),
        (-1, 1),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (4, 9),
    ],
    [
        (1, 7),
        (1, 8),
        (-1, 5),
        (1, 6),
        (1, 3),
        (-1, 4),
        (-1, 1),
        (-1, 2),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (4, 10),
    ],
    [
        (-1, 6),
        (1, 5),
        (1, 8),
        (1, 7),
        (-1, 2),
        (1, 1),
        (-1, 4),
        (-1, 3),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (4, 11),
    ],
    [
        (-1, 5),
        (-1, 6),
        (-1, 7),
        (1, 8),
        (1, 1),
        (1, 2),
        (1, 3),
        (-1, 4),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (4, 12),
    ],
    [
        (1, 4),
        (-1, 3),
        (1, 2),
        (-1, 1),
        (1, 8),
        (1, 7),
        (-1, 6),
        (-1, 5),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (4, 13),
    ],
    [
        (1, 3),
        (1, 4),
        (-1, 1),
        (-1, 2),
        (-1, 7),
        (1, 8),
        (1, 5),
        (-1, 6),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (4, 14),
    ],
    [
        (-1, 2),
        (1, 1),
        (1, 4),
        (-1, 3),
        (1, 6),
        (-1, 5),
        (1, 8),
        (-1, 7),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (4, 15),
    ],
    [
        (-7, 1),
        (-7, 2),
        (-7, 3),
        (-7, 4),
        (-7, 5),
        (-7, 6),
        (-7, 7),
        (-7, 8),
        (-4, 9),
        (-4, 10),
        (-4, 11),
        (-4, 12),
        (-4, 13),
        (-4, 14),
        (-4, 15),
        (0, 0),
    ],
];

/// The two cells whose printed values contradict antisymmetry (1-based).
pub const SUSPECTED_TYPOS: [(usize, usize); 2] = [(3, 2), (7, 6)];

#[derive(Debug, Clone)]
pub struct TableDiff {
    pub row: usize,
    pub col: usize,
    pub computed: String,
    pub printed: String,
    pub suspected_typo: bool,
}

fn covector_string(cov: &[Rational]) -> String {
    let mut parts = Vec::new();
    for (k, c) in cov.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        parts.push(format!("{}*s{}", c, k + 1));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Compares the computed tensor for v = e_16 against the printed table at
/// the given scale, listing every mismatching cell.
pub fn compare_printed_table(computed: &GammaMatrix, scale: i64) -> Vec<TableDiff> {
    let mut diffs = Vec::new();
    for i in 0..16 {
        for j in 0..16 {
            let (pc, ps) = PRINTED_TABLE[i][j];
            let mut printed = vec![Rational::zero(); 16];
            if pc != 0 {
                printed[ps - 1] = int(pc);
            }
            let got: Vec<Rational> = computed.entries[i][j]
                .iter()
                .map(|c| c * int(scale))
                .collect();
            if got != printed {
                diffs.push(TableDiff {
                    row: i + 1,
                    col: j + 1,
                    computed: covector_string(&got),
                    printed: covector_string(&printed),
                    suspected_typo: SUSPECTED_TYPOS.contains(&(i + 1, j + 1)),
                });
            }
        }
    }
    diffs
}

// ---------------------------------------------------------------------------
// circle-times-sphere projection formulas
// ---------------------------------------------------------------------------

/// The printed linear forms mu^1..mu^15 in the coefficients x_ab (1-based
/// index pairs).
pub const PRINTED_MU: [&[(i64, usize, usize)]; 15] = [
    &[(2, 1, 9)],
    &[(2, 2, 9)],
    &[(-2, 3, 9)],
    &[(-2, 4, 9)],
    &[(-2, 6, 9)],
    &[(2, 5, 9)],
    &[(2, 7, 9)],
    &[(-2, 8, 9)],
    &[(2, 1, 8), (2, 2, 7), (2, 3, 5), (-2, 4, 6)],
    &[(-2, 1, 7), (2, 2, 8), (2, 3, 6), (2, 4, 5)],
    &[(2, 1, 5), (2, 2, 6), (-2, 3, 8), (2, 4, 7)],
    &[(-2, 1, 6), (2, 2, 5), (-2, 3, 7), (-2, 4, 8)],
    &[(2, 1, 4), (-2, 2, 3), (-2, 5, 7), (-2, 6, 8)],
    &[(2, 1, 3), (2, 2, 4), (2, 5, 8), (-2, 6, 7)],
    &[(2, 1, 2), (-2, 3, 4), (-2, 5, 6), (2, 7, 8)],
];

/// Evaluates the printed mu forms on a coefficient vector over the
/// subalgebra basis (indexed as in [`build_bases`]).
pub fn printed_mu(bases: &LieBases, x: &[Rational]) -> Vec<Rational> {
    let coeff_of = |a: usize, b: usize| -> Rational {
        for (k, ((p, q), _)) in bases.spin9.iter().enumerate() {
            if (*p, *q) == (a - 1, b - 1) {
                return x[k].clone();
            }
        }
        unreachable!("pair ({a},{b}) not in basis");
    };
    PRINTED_MU
        .iter()
        .map(|terms| terms.iter().map(|&(c, a, b)| int(c) * coeff_of(a, b)).sum())
        .collect()
}

/// Zeroes the last row and column: the orthogonal projection of so(16)
/// onto the subalgebra so(15) annihilating e_16.
pub fn pr_so15(w: &ExactMatrix) -> ExactMatrix {
    ExactMatrix::from_fn(16, 16, |i, j| {
        if i == 15 || j == 15 {
            Rational::zero()
        } else {
            w.get(i, j).clone()
        }
    })
}

/// The matrix predicted by the computed table template with sigma^k
/// replaced by mu^k (mu^16 = 0).
pub fn template_with_mu(template: &GammaMatrix, mu: &[Rational]) -> ExactMatrix {
    let mut x = vec![Rational::zero(); 16];
    x[..15].clone_from_slice(mu);
    template.evaluate(&x)
}

/// Verifies that the projection of every subalgebra basis element onto
/// the complement through so(15) is a single uniform multiple of the
/// covector-table template with sigma^k replaced by the printed mu^k
/// forms, and returns that multiple (the printed forms use the raw trace
/// pairing, so the orthogonal projection differs by one global constant).
pub fn s1s15_match(bases: &LieBases) -> Result<Rational, String> {
    let mut e16 = vec![Rational::zero(); 16];
    e16[15] = int(1);
    let template = gamma_matrix_of(bases, &e16);
    let mut scale: Option<Rational> = None;
    for k in 0..36 {
        let mut x = vec![Rational::zero(); 36];
        x[k] = int(1);
        let p = project(bases, &pr_so15(&bases.spin9[k].1));
        let predicted = template_with_mu(&template, &printed_mu(bases, &x));
        for i in 0..16 {
            for j in 0..16 {
                let l = p.m_part.get(i, j);
                let r = predicted.get(i, j);
                match (l.is_zero(), r.is_zero()) {
                    (true, true) => {}
                    (false, false) => {
                        let q = l / r;
                        match &scale {
                            None => scale = Some(q),
                            Some(s) if *s == q => {}
                            Some(s) => {
                                return Err(format!(
                                    "scale mismatch at basis {:?} entry ({},{}): {} vs {}",
                                    bases.spin9[k].0,
                                    i + 1,
                                    j + 1,
                                    q,
                                    s
                                ))
                            }
                        }
                    }
                    _ => {
                        return Err(format!(
                            "support mismatch at basis {:?} entry ({},{})",
                            bases.spin9[k].0,
                            i + 1,
                            j + 1
                        ))
                    }
                }
            }
        }
    }
    scale.ok_or_else(|| "projections all vanished".to_string())
}

/// The stabilizer of the spinor e_16 inside the subalgebra: coefficient
/// vectors x with (sum x_ab I_a I_b) e_16 = 0.
pub fn spinor_stabilizer(bases: &LieBases) -> Subspace {
    let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); 16];
    for (k, (_, b)) in bases.spin9.iter().enumerate() {
        for i in 0..16 {
            let v = b.get(i, 15);
            if !v.is_zero() {
                rows[i].push((k, v.clone()));
            }
        }
    }
    SparseMatrix::from_rows(36, rows).kernel()
}
