//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Every check is a zero-tolerance identity over the
//! rationals.
//!
//! Two criteria pin printed constants that exact computation shows to be
//! wrong in the source (the -504 differential constant, truly -384, and
//! the fourth Pontrjagin identity together with its corollaries). Those
//! tests assert the stated values and fail by design; the structural
//! truth behind each is asserted by the companion `*_computed_truth`
//! test, and the closed-form oracles at the bottom certify the machinery
//! independently.

use num_traits::Zero;
use spin9::charclass;
use spin9::clifford::CliffordGenerators;
use spin9::exterior::{BladeTable, Form};
use spin9::invariant::{self, IdentityEngine};
use spin9::liealg;
use spin9::linalg::{ExactMatrix, Subspace};
use spin9::rational::{fmt_frac, int, rat, Rational};
use spin9::rng::SplitMix64;
use spin9::spinorforms;
use spin9::twistor;
use std::sync::OnceLock;
use std::time::Instant;

struct Shared {
    g: CliffordGenerators,
    bases: liealg::LieBases,
    omega: invariant::Omega8,
    engine: IdentityEngine,
    omega_elapsed: std::time::Duration,
}

fn shared() -> &'static Shared {
    static CELL: OnceLock<Shared> = OnceLock::new();
    CELL.get_or_init(|| {
        let g = CliffordGenerators::build();
        let bases = liealg::build_bases(&g);
        let t0 = Instant::now();
        let omega = invariant::compute_omega8(&g);
        let omega_elapsed = t0.elapsed();
        let engine = IdentityEngine::new(g.triple_products(), &omega.form);
        Shared {
            g,
            bases,
            omega,
            engine,
            omega_elapsed,
        }
    })
}

fn verdict(n: usize, pass: bool, details: &str) -> bool {
    println!(
        "criterion {n}: {} - {details}",
        if pass { "PASS" } else { "FAIL" }
    );
    pass
}

#[test]
fn criterion_01_clifford_relations() {
    let t0 = Instant::now();
    let g = CliffordGenerators::build();
    let rel = g.verify_relations();
    let elapsed = t0.elapsed();
    let pass = rel.all_pass() && elapsed.as_secs_f64() < 1.0;
    assert!(verdict(
        1,
        pass,
        &format!("81/81 anticommutation pairs, all symmetric involutions, {elapsed:?}")
    ));
}

#[test]
fn criterion_02_lie_splitting() {
    let s = shared();
    let rank = liealg::stacked_rank(&s.bases);
    let frames = invariant::frame_2forms_rank(&s.g);
    let pass = s.bases.spin9.len() == 36 && s.bases.m.len() == 84 && rank == 120 && frames == 120;
    assert!(verdict(
        2,
        pass,
        &format!("36 + 84 products, matrix rank {rank}, frame 2-form rank {frames}")
    ));
}

#[test]
fn criterion_03_unique_invariant_8form() {
    let s = shared();
    let mut low = Vec::new();
    for k in 1..=7 {
        low.push(invariant::invariant_dimension(&s.g, k));
    }
    let self_dual = s.omega.form.hodge() == s.omega.form;
    let within_budget = s.omega_elapsed.as_secs() <= 600;
    let pass = low.iter().all(|&d| d == 0) && self_dual && within_budget;
    assert!(verdict(
        3,
        pass,
        &format!(
            "kernel dimension 1 in {:?} ({} terms), grades 1..7 dims {:?}, self-dual {}",
            s.omega_elapsed,
            s.omega.form.coeffs.len(),
            low,
            self_dual
        )
    ));
}

fn identity_gammas() -> Vec<Vec<Rational>> {
    let mut gammas: Vec<Vec<Rational>> = (0..16)
        .map(|i| {
            let mut v = vec![Rational::zero(); 16];
            v[i] = int(1);
            v
        })
        .collect();
    let mut rng = SplitMix64::new(10);
    for _ in 0..5 {
        gammas.push(rng.vector(16));
    }
    gammas
}

#[test]
fn criterion_04_nearly_parallel_identities_as_stated() {
    // asserts the stated constant -504 for both identities; the exact
    // computation gives -384 (see the companion test and the oracles
    // below), so this criterion fails by design rather than be weakened
    let s = shared();
    let mut printed_hold = true;
    for gamma in identity_gammas() {
        if !invariant::delta_identity_residual(&s.engine, &s.omega.form, &gamma).is_zero() {
            printed_hold = false;
        }
        if !invariant::d_identity_residual(&s.engine, &s.omega.form, &gamma).is_zero() {
            printed_hold = false;
        }
    }
    // rescaling by two must leave the stated checks unchanged
    let doubled = s.omega.form.scale(&int(2));
    let engine2 = IdentityEngine::new(s.g.triple_products(), &doubled);
    let g0 = &identity_gammas()[0];
    let rescaled_consistent = invariant::delta_identity_residual(&engine2, &doubled, g0).is_zero()
        == invariant::delta_identity_residual(&s.engine, &s.omega.form, g0).is_zero();
    let pass = printed_hold && rescaled_consistent;
    verdict(
        4,
        pass,
        "stated constant -504; computed constant is -384 on every input (see companion test)",
    );
    assert!(
        pass,
        "criterion 4 as stated is irreproducible: the codifferential and differential \
         identities hold exactly but with constant -384, not -504; the closed-form \
         oracles in this file force that value"
    );
}

#[test]
fn criterion_04_companion_computed_truth() {
    // the structural content of the criterion with the computed constant:
    // exact proportionality on all 21 inputs, both identities, the same
    // constant, invariant under rescaling the form
    let s = shared();
    let c = int(-384);
    let mut pass = true;
    for gamma in identity_gammas() {
        let contracted = s.omega.form.contract(&gamma);
        if s.engine.delta_side(&gamma) != contracted.scale(&c) {
            pass = false;
        }
        if s.engine.d_side(&gamma) != contracted.hodge().scale(&c) {
            pass = false;
        }
    }
    let doubled = s.omega.form.scale(&int(2));
    let engine2 = IdentityEngine::new(s.g.triple_products(), &doubled);
    let g0 = &identity_gammas()[0];
    if engine2.delta_side(g0) != doubled.contract(g0).scale(&c) {
        pass = false;
    }
    assert!(verdict(
        4,
        pass,
        "companion: both identities hold exactly with constant -384, rescaling invariant"
    ));
}

#[test]
fn criterion_05_decomposition_dimensions() {
    let s = shared();
    let dims: Vec<usize> = (0..=3)
        .map(|r| spinorforms::p_space(&s.g, r).dim())
        .collect();
    let mut pass = dims == vec![16, 128, 432, 768];
    let mut totals = Vec::new();
    for k in 1..=3 {
        let rep = spinorforms::verify_decomposition(&s.g, k);
        totals.push(rep.total_rank);
        if !rep.passes() {
            pass = false;
        }
    }
    if totals != vec![144, 576, 1344] {
        pass = false;
    }
    let spaces: Vec<(spinorforms::GeneratorAction, Subspace)> = vec![
        (spinorforms::delta9_action(&s.g), Subspace::full(16)),
        (spinorforms::lambda1_action(&s.g), Subspace::full(9)),
        (spinorforms::lambda_k9_action(2), Subspace::full(36)),
        (spinorforms::lambda_k9_action(3), Subspace::full(84)),
        (
            spinorforms::spinor_form_action(&s.g, 1),
            spinorforms::p_space(&s.g, 1),
        ),
    ];
    let mut commutants = Vec::new();
    for (action, space) in &spaces {
        let rep = spinorforms::commutant_dim(action, space);
        commutants.push(rep.dim);
        if !rep.invariant || rep.dim != 1 {
            pass = false;
        }
    }
    assert!(verdict(
        5,
        pass,
        &format!(
            "kernel dims {dims:?}, decomposition totals {totals:?}, commutants {commutants:?}"
        )
    ));
}

#[test]
fn criterion_06_pontrjagin_identities_as_stated() {
    // items 4 and 6 and the divisibility-by-13 consequence pin printed
    // polynomials that the weight calculus refutes; asserted as stated,
    // failing by design (companion test freezes the computed truth)
    let items = charclass::theorem2_items();
    let mut all_zero_residual = true;
    for (_, computed, printed) in &items {
        if computed != printed {
            all_zero_residual = false;
        }
    }
    let l4 = charclass::l4_abstract();
    let l4_ok = l4.terms[&[0, 0, 0, 1]] == rat(381, 14175)
        && l4.terms[&[1, 0, 1, 0]] == rat(-71, 14175)
        && l4.terms[&[0, 2, 0, 0]] == rat(-19, 14175)
        && l4.terms[&[2, 1, 0, 0]] == rat(22, 14175)
        && l4.terms[&[4, 0, 0, 0]] == rat(-3, 14175);
    let div = charclass::divisibility_report();
    let div_ok = div.x_is_q && div.item2_integral && div.item3_mod13;
    let cay = charclass::cayley_plane_checks();
    let pass = all_zero_residual && l4_ok && div_ok && cay.chain_is_minus_third;
    verdict(
        6,
        pass,
        "stated identities 4 and 6 and the 13-divisibility are refuted by exact weight calculus",
    );
    assert!(
        pass,
        "criterion 6 as stated is irreproducible: the fourth Pontrjagin identity lacks \
         a p2^2 term (true reduction is frozen in the companion test), and the sixth \
         identity and the 13-divisibility inherit the defect; items 1, 2, 3, 5 verify"
    );
}

#[test]
fn criterion_06_companion_computed_truth() {
    let items = charclass::theorem2_items();
    let mut pass = true;
    // items 1, 2, 3, 5 match as printed
    for idx in [0usize, 1, 2, 4] {
        if items[idx].1 != items[idx].2 {
            pass = false;
        }
    }
    // the computed fourth identity, frozen against the evaluation oracle
    let mut truth4 = charclass::Poly::zero();
    truth4.add_term([4, 0, 0, 0], rat(35, 128));
    truth4.add_term([2, 1, 0, 0], rat(-15, 16));
    truth4.add_term([1, 0, 1, 0], int(2));
    truth4.add_term([0, 2, 0, 0], rat(3, 8));
    truth4.add_term([0, 0, 0, 1], rat(-17, 2));
    if items[3].1 != truth4 {
        pass = false;
    }
    // the printed sixth is exactly the substitution of the printed fourth
    let subs = [
        items[0].2.clone(),
        items[1].2.clone(),
        items[2].2.clone(),
        items[3].2.clone(),
    ];
    if charclass::l4_abstract().substitute(&subs) != items[5].2 {
        pass = false;
    }
    let l4_ok = charclass::l4_abstract().terms[&[0, 0, 0, 1]] == rat(381, 14175);
    let div = charclass::divisibility_report();
    let cay = charclass::cayley_plane_checks();
    assert!(verdict(
        6,
        pass && l4_ok
            && div.x_is_q
            && div.item2_integral
            && div.item3_equals_13_p4 == false
            && cay.chain_is_minus_third
            && cay.p2_relation
            && cay.p3_relation
            && cay.euler_relation,
        "companion: items 1,2,3,5 hold; computed item 4 frozen; item 6 traced to item 4; chain -1/3"
    ));
}

#[test]
fn criterion_07_complete_intersection() {
    let t = charclass::complete_intersection(&[2, 2, 2], 11).expect("valid input");
    let chern: Vec<Rational> = (1..=8).map(|i| t.chern[i].clone()).collect();
    let expected_c: Vec<Rational> = [6, 18, 32, 39, 30, 20, 0, 15]
        .iter()
        .map(|&v| int(v))
        .collect();
    let pont: Vec<Rational> = (1..=4).map(|k| t.pontrjagin[k].clone()).collect();
    let expected_p: Vec<Rational> = [0, 18, 60, 351].iter().map(|&v| int(v)).collect();
    let pass = chern == expected_c
        && pont == expected_p
        && t.euler_number == int(120)
        && t.signature == Some(int(72))
        && t.chi_over_sigma == Some(rat(5, 3));
    assert!(verdict(
        7,
        pass,
        &format!(
            "classes entrywise, chi {}, sigma {}, ratio {}",
            fmt_frac(&t.euler_number),
            t.signature.as_ref().map(fmt_frac).unwrap_or_default(),
            t.chi_over_sigma.as_ref().map(fmt_frac).unwrap_or_default()
        )
    ));
}

#[test]
fn criterion_08_twistor_algebra() {
    let s = shared();
    let triples = s.g.triple_products();
    let nf = twistor::normal_form_solutions(&s.bases);
    let mut pass = nf.system_forces_unit_tuples && nf.solutions.len() == 8;
    for k in 0..10u64 {
        let j = twistor::random_twistor_point(&s.g, &s.bases, 500 + k);
        let rep = twistor::ad_relations(&s.bases, &j, k);
        if (rep.stabilizer_dim, rep.perp_dim) != (22, 14) || !rep.quadratic_relation {
            pass = false;
        }
    }
    let mut rng = SplitMix64::new(77);
    let constant = twistor::CurvatureLike::constant_curvature();
    let gamma0 = rng.vector(16);
    let bracket = twistor::CurvatureLike::gamma_bracket(&triples, &gamma0);
    for k in 0..20u64 {
        let j = twistor::random_twistor_point(&s.g, &s.bases, 600 + k);
        let gamma = rng.vector(16);
        let x = rng.vector(16);
        let y = rng.vector(16);
        let t = twistor::torsion(&triples, &gamma, &x, &y);
        let dot: Rational = t.iter().zip(&gamma).map(|(a, b)| a * b).sum();
        if !dot.is_zero() {
            pass = false;
        }
        if twistor::torsion_integrability_residual(&triples, &gamma, &j, &x, &y)
            .iter()
            .any(|v| !v.is_zero())
        {
            pass = false;
        }
        if !twistor::curvature_residual(&constant, &j, &x, &y).is_zero() {
            pass = false;
        }
        if !twistor::curvature_residual(&bracket, &j, &x, &y).is_zero() {
            pass = false;
        }
    }
    let table2 = BladeTable::new(9, 2);
    let table5 = BladeTable::new(9, 5);
    for k in 0..20u64 {
        let c = rng.small_rational();
        let mut eta = Form::zero(9, 2);
        let mut mu5 = Form::zero(9, 5);
        for _ in 0..3 {
            eta.add_term(table2.blades[rng.below(36) as usize], rng.small_rational());
            mu5.add_term(table5.blades[rng.below(126) as usize], rng.small_rational());
        }
        let op = twistor::W22::Family { c, eta, mu5 };
        let j = twistor::random_twistor_point(&s.g, &s.bases, 700 + k);
        let mut w = Form::zero(9, 2);
        for _ in 0..3 {
            w.add_term(table2.blades[rng.below(36) as usize], rng.small_rational());
        }
        let (l, rr) = twistor::w22_residual(&s.bases, &op, &j, &w);
        if l != rr {
            pass = false;
        }
    }
    // the excluded symmetric direction
    let mut l0 = ExactMatrix::zeros(9, 9);
    l0.set(0, 1, int(1));
    l0.set(1, 0, int(1));
    let op = twistor::W22::Symmetric(l0);
    let j0 = twistor::TwistorPoint::base(&s.bases);
    let mut w13 = Form::zero(9, 2);
    w13.add_term(0b101, int(1));
    let (left, right) = twistor::w22_residual(&s.bases, &op, &j0, &w13);
    let i1i3 = &s.bases.spin9[1].1;
    if left != i1i3.scale(&int(-8)) || right != i1i3.scale(&int(8)) {
        pass = false;
    }
    assert!(verdict(
        8,
        pass,
        "8 normal forms, (22,14) splits on 10 points, torsion and curvature residuals zero on 20 draws, family residuals zero on 20 draws, counterexample -8/+8"
    ));
}

#[test]
fn criterion_09_covector_table_and_mu() {
    let s = shared();
    let mut e16 = vec![Rational::zero(); 16];
    e16[15] = int(1);
    let table = liealg::gamma_matrix_of(&s.bases, &e16);
    let mut pass = table.is_antisymmetric();
    let diffs = liealg::compare_printed_table(&table, 1);
    let cells: Vec<(usize, usize)> = diffs.iter().map(|d| (d.row, d.col)).collect();
    if cells != liealg::SUSPECTED_TYPOS.to_vec() {
        pass = false;
    }
    let computed: Vec<String> = diffs.iter().map(|d| d.computed.clone()).collect();
    // the printed mu forms match all 36 basis projections with one
    // uniform normalization constant, which is reported
    let scale = match liealg::s1s15_match(&s.bases) {
        Ok(sc) => sc,
        Err(_) => {
            pass = false;
            Rational::zero()
        }
    };
    if scale != rat(-1, 16) {
        pass = false;
    }
    assert!(verdict(
        9,
        pass,
        &format!(
            "antisymmetric; diffs only at flagged cells {:?} with computed values {:?}; mu forms match at uniform scale {}",
            cells,
            computed,
            fmt_frac(&scale)
        )
    ));
}

#[test]
fn criterion_10_deterministic_reports() {
    let exe = env!("CARGO_BIN_EXE_spin9");
    let dir = std::env::temp_dir();
    let f1 = dir.join("spin9-acceptance-report-1.json");
    let f2 = dir.join("spin9-acceptance-report-2.json");
    let mut outputs = Vec::new();
    for f in [&f1, &f2] {
        let status = std::process::Command::new(exe)
            .args([
                "all",
                "--seed",
                "7",
                "--draws",
                "6",
                "--json",
                f.to_str().unwrap(),
            ])
            .output()
            .expect("run the binary");
        outputs.push(status);
    }
    let j1 = std::fs::read(&f1).expect("first report");
    let j2 = std::fs::read(&f2).expect("second report");
    let pass = j1 == j2 && !j1.is_empty();
    assert!(verdict(
        10,
        pass,
        &format!(
            "two runs with seed 7 produced byte-identical {}-byte reports",
            j1.len()
        )
    ));
}

// ---------------------------------------------------------------------------
// closed-form oracles backing the constant finding
// ---------------------------------------------------------------------------

/// For any grade-k form w on R^n and vector v,
/// `sum_{i<j} (L_ij v) -| rho(L_ij) w = (n - k) (v -| w)` over the
/// standard antisymmetric basis L_ij = E_ij - E_ji. Combined with the
/// vanishing of the subalgebra actions on the invariant form and the
/// trace norms 16 (triple products) versus 2 (L basis), this forces the
/// codifferential constant to be -6 * (16/2) * (16-8) = -384 with the
/// table-anchored application direction.
#[test]
fn oracle_contraction_identity() {
    let mut rng = SplitMix64::new(99);
    for &(n, k) in &[(6usize, 2usize), (7, 3), (16, 8)] {
        let table = BladeTable::new(n, k);
        let mut w = Form::zero(n, k);
        for _ in 0..6 {
            w.add_term(
                table.blades[(rng.below(table.dim() as u64)) as usize],
                rng.small_rational(),
            );
        }
        let v = rng.vector(n);
        let mut lhs = Form::zero(n, k - 1);
        for i in 0..n {
            for j in (i + 1)..n {
                let mut l = ExactMatrix::zeros(n, n);
                l.set(i, j, int(1));
                l.set(j, i, int(-1));
                let lv = l.mul_vec(&v);
                lhs = lhs.add(&w.rho(&l).contract(&lv));
            }
        }
        let rhs = w.contract(&v).scale(&int((n - k) as i64));
        assert_eq!(lhs, rhs, "contraction identity failed for n={n} k={k}");
    }
}

/// The wedge-side twin: `sum_{i<j} (L_ij v)^flat ^ rho(L_ij) w = k (v^flat ^ w)`.
#[test]
fn oracle_wedge_identity() {
    let mut rng = SplitMix64::new(7);
    for &(n, k) in &[(6usize, 2usize), (7, 3), (16, 8)] {
        let table = BladeTable::new(n, k);
        let mut w = Form::zero(n, k);
        for _ in 0..6 {
            w.add_term(
                table.blades[(rng.below(table.dim() as u64)) as usize],
                rng.small_rational(),
            );
        }
        let v = rng.vector(n);
        let flat = |v: &[Rational]| -> Form {
            let mut f = Form::zero(n, 1);
            for (idx, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    f.add_term(1 << idx, c.clone());
                }
            }
            f
        };
        let mut lhs = Form::zero(n, k + 1);
        for i in 0..n {
            for j in (i + 1)..n {
                let mut l = ExactMatrix::zeros(n, n);
                l.set(i, j, int(1));
                l.set(j, i, int(-1));
                lhs = lhs.add(&flat(&l.mul_vec(&v)).wedge(&w.rho(&l)));
            }
        }
        let rhs = flat(&v).wedge(&w).scale(&int(k as i64));
        assert_eq!(lhs, rhs, "wedge identity failed for n={n} k={k}");
    }
}

/// The per-triple structure behind the constant: every one of the 84
/// triple products contributes the same diagonal coefficient 16/21 with
/// respect to the contraction, and the sum telescopes to 64.
#[test]
fn oracle_per_triple_diagonal() {
    let s = shared();
    let mut gamma = vec![Rational::zero(); 16];
    gamma[15] = int(1);
    let contracted = s.omega.form.contract(&gamma);
    let norm = contracted.dot(&contracted);
    let mut total = Rational::zero();
    for t in &s.g.triple_products() {
        let v = t.mul_vec(&gamma);
        let x = s.omega.form.rho(t).contract(&v);
        let d = x.dot(&contracted) / &norm;
        assert_eq!(d, rat(16, 21));
        total += d;
    }
    assert_eq!(total, int(64));
}
