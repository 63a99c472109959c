//! LaTeX rendering of the general derivation matrix with symbolic
//! coefficients.

use std::fmt::Write as _;

use crate::dercalc::{DerSpace, LinearMap};
use crate::liecore::{LieAlgebra, SchrodingerBasis};
use crate::scalar::Scalar;

/// `u_1 → u_1`, `s_12 → s_{12}`, `e → e`.
pub fn latex_label(label: &str) -> String {
    match label.split_once('_') {
        Some((base, idx)) if idx.chars().count() > 1 => format!("{base}_{{{idx}}}"),
        _ => label.to_string(),
    }
}

fn coefficient_symbol(label: &str) -> String {
    let l = latex_label(label);
    if l.chars().count() == 1 {
        format!("a_{l}")
    } else {
        format!("a_{{{l}}}")
    }
}

fn term(c: &Scalar, sym: &str) -> String {
    let sign = if c.is_negative() { "-" } else { "" };
    let c = c.abs();
    let (p, q) = (c.numer(), c.denom());
    let one = num_bigint::BigInt::from(1);
    let p = if *p == one {
        String::new()
    } else {
        p.to_string()
    };
    if *q == one {
        format!("{sign}{p}{sym}")
    } else {
        format!("{sign}\\frac{{{p}{sym}}}{{{q}}}")
    }
}

/// Renders `Σ c_i sym_i`.
pub fn linear_form(coeffs: &[Scalar], symbols: &[String]) -> String {
    let mut out = String::new();
    for (c, s) in coeffs.iter().zip(symbols).filter(|(c, _)| !c.is_zero()) {
        let t = term(c, s);
        if !out.is_empty() && !t.starts_with('-') {
            out.push('+');
        }
        out.push_str(&t);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parameter symbols and the maps they multiply. For `s_n` these are
/// `a_b` for every non-central basis element `b` (multiplying `ad(b)`),
/// then `\lambda` for `σ` or `σ₁` and `\mu` for `τ`. Other algebras get
/// `t_1, t_2, ...` over the canonical `Der` basis.
pub fn parameters(alg: &LieAlgebra, der: &DerSpace) -> Vec<(String, LinearMap)> {
    if SchrodingerBasis::detect(alg).is_none() {
        return der
            .basis_maps()
            .into_iter()
            .enumerate()
            .map(|(i, m)| (format!("t_{{{}}}", i + 1), m))
            .collect();
    }
    let mut params: Vec<(String, LinearMap)> = (0..alg.dim())
        .map(|i| (coefficient_symbol(&alg.labels()[i]), alg.ad_basis(i)))
        .filter(|(_, m)| !m.is_zero())
        .collect();
    for rep in der.outer_reps() {
        let sym = match rep.name.as_str() {
            "tau" => "\\mu".to_string(),
            "sigma" | "sigma1" => "\\lambda".to_string(),
            other => format!("c_{{{other}}}"),
        };
        params.push((sym, rep.map.clone()));
    }
    params
}

/// Symbolic entries `M[r][c]` of the general derivation.
pub fn symbolic_matrix(alg: &LieAlgebra, der: &DerSpace) -> (Vec<String>, Vec<Vec<String>>) {
    let params = parameters(alg, der);
    let symbols: Vec<String> = params.iter().map(|(s, _)| s.clone()).collect();
    let n = alg.dim();
    let rows = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let coeffs: Vec<Scalar> =
                        params.iter().map(|(_, m)| m.get(r, c).clone()).collect();
                    linear_form(&coeffs, &symbols)
                })
                .collect()
        })
        .collect();
    (symbols, rows)
}

pub fn derivation_matrix_latex(alg: &LieAlgebra, der: &DerSpace) -> String {
    let (symbols, rows) = symbolic_matrix(alg, der);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "% general derivation of {} (dim {}), {} parameters: {}",
        alg.name(),
        alg.dim(),
        symbols.len(),
        symbols.join(", ")
    );
    let _ = writeln!(
        out,
        "% columns are images of the basis {}",
        alg.labels().join(", ")
    );
    if SchrodingerBasis::detect(alg).is_some() {
        let _ = writeln!(
            out,
            "% a_{{s_{{kl}}}} is the coefficient of s_{{kl}} in the inner part, indexed by the actual pair k<l"
        );
    }
    let _ = writeln!(out, "\\[");
    let _ = writeln!(out, "\\left(");
    let _ = writeln!(out, "\\begin{{array}}{{{}}}", "c".repeat(alg.dim()));
    for row in &rows {
        let _ = writeln!(out, "  {} \\\\", row.join(" & "));
    }
    let _ = writeln!(out, "\\end{{array}}");
    let _ = writeln!(out, "\\right)");
    let _ = writeln!(out, "\\]");
    out
}
