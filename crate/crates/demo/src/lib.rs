//! Browser bindings for three interactive views: the 16x16 covector
//! table attached to a chosen vector, characteristic-class tables of
//! complete intersections, and seeded sampling of the twistor fiber.
//! Every value shown is exact; the functions return JSON strings and the
//! page renders them.

use spin9::charclass;
use spin9::clifford::CliffordGenerators;
use spin9::liealg;
use spin9::rational::{fmt_frac, parse_frac, Rational};
use spin9::twistor;
use wasm_bindgen::prelude::*;

fn json_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn err(msg: &str) -> String {
    format!("{{\"error\":\"{}\"}}", json_escape(msg))
}

/// The table of covectors attached to a rational vector, as a JSON
/// matrix of entry strings over s1..s16. Input: 16 comma-separated
/// rationals.
#[wasm_bindgen]
pub fn gamma_table(vector: &str) -> String {
    let parts: Vec<&str> = vector.split(',').map(|s| s.trim()).collect();
    if parts.len() != 16 {
        return err("expected 16 comma-separated rationals");
    }
    let mut v: Vec<Rational> = Vec::with_capacity(16);
    for p in parts {
        match parse_frac(p) {
            Some(r) => v.push(r),
            None => return err(&format!("bad rational: {p}")),
        }
    }
    let g = CliffordGenerators::build();
    let bases = liealg::build_bases(&g);
    let table = liealg::gamma_matrix_of(&bases, &v);
    let mut rows = Vec::with_capacity(16);
    for i in 0..16 {
        let mut cells = Vec::with_capacity(16);
        for j in 0..16 {
            let mut parts = Vec::new();
            for (k, c) in table.entries[i][j].iter().enumerate() {
                if !num_traits::Zero::is_zero(c) {
                    let coeff = fmt_frac(c);
                    parts.push(format!("{coeff} s{}", k + 1));
                }
            }
            let cell = if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(" + ")
            };
            cells.push(format!("\"{}\"", json_escape(&cell)));
        }
        rows.push(format!("[{}]", cells.join(",")));
    }
    format!(
        "{{\"antisymmetric\":{},\"rows\":[{}]}}",
        table.is_antisymmetric(),
        rows.join(",")
    )
}

/// Characteristic classes of a complete intersection: degrees as
/// comma-separated positive integers, ambient the projective dimension.
#[wasm_bindgen]
pub fn intersection_classes(degrees: &str, ambient: usize) -> String {
    let mut ds: Vec<i64> = Vec::new();
    for p in degrees.split(',') {
        match p.trim().parse::<i64>() {
            Ok(d) => ds.push(d),
            Err(_) => return err(&format!("bad degree: {p}")),
        }
    }
    let t = match charclass::complete_intersection(&ds, ambient) {
        Ok(t) => t,
        Err(e) => return err(&e),
    };
    let chern: Vec<String> = (1..=t.dim)
        .map(|i| format!("\"{}\"", fmt_frac(&t.chern[i])))
        .collect();
    let pont: Vec<String> = (1..t.pontrjagin.len())
        .map(|k| format!("\"{}\"", fmt_frac(&t.pontrjagin[k])))
        .collect();
    let sig = t
        .signature
        .as_ref()
        .map(|s| format!("\"{}\"", fmt_frac(s)))
        .unwrap_or_else(|| "null".into());
    let ratio = t
        .chi_over_sigma
        .as_ref()
        .map(|s| format!("\"{}\"", fmt_frac(s)))
        .unwrap_or_else(|| "null".into());
    format!(
        "{{\"dim\":{},\"chern\":[{}],\"pontrjagin\":[{}],\"euler\":\"{}\",\"signature\":{},\"chi_over_sigma\":{}}}",
        t.dim,
        chern.join(","),
        pont.join(","),
        fmt_frac(&t.euler_number),
        sig,
        ratio
    )
}

/// A seeded exact point on the twistor fiber: its 36 coefficients, the
/// verification that its matrix squares to minus the identity, and the
/// eigenvalue split of the squared adjoint action.
#[wasm_bindgen]
pub fn twistor_sample(seed: u64) -> String {
    let g = CliffordGenerators::build();
    let bases = liealg::build_bases(&g);
    let j = twistor::random_twistor_point(&g, &bases, seed);
    let square_ok = twistor::is_twistor_point(&bases, &j.coeffs);
    let rep = twistor::ad_relations(&bases, &j, seed);
    let coeffs: Vec<String> = j
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(k, c)| {
            let (a, b) = bases.spin9[k].0;
            format!(
                "{{\"pair\":\"I{}I{}\",\"value\":\"{}\"}}",
                a + 1,
                b + 1,
                fmt_frac(c)
            )
        })
        .collect();
    format!(
        "{{\"square_is_minus_identity\":{},\"stabilizer_dim\":{},\"tangent_dim\":{},\"coefficients\":[{}]}}",
        square_ok,
        rep.stabilizer_dim,
        rep.perp_dim,
        coeffs.join(",")
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_table_last_basis_vector() {
        let out = gamma_table("0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1");
        assert!(out.contains("\"antisymmetric\":true"));
        assert!(out.contains("7/1 s1"));
        assert!(gamma_table("1,2").starts_with("{\"error\""));
        let bad = vec!["x"; 16].join(",");
        assert!(gamma_table(&bad).starts_with("{\"error\""));
    }

    #[test]
    fn intersection_quadrics() {
        let out = intersection_classes("2,2,2", 11);
        assert!(out.contains("\"chi_over_sigma\":\"5/3\""));
        assert!(out.contains("\"euler\":\"120/1\""));
        assert!(intersection_classes("2,0", 11).starts_with("{\"error\""));
    }

    #[test]
    fn twistor_sample_is_exact() {
        let out = twistor_sample(4);
        assert!(out.contains("\"square_is_minus_identity\":true"));
        assert!(out.contains("\"stabilizer_dim\":22"));
        assert!(out.contains("\"tangent_dim\":14"));
    }
}
