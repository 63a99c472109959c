//! Replay of the elimination argument showing that a local derivation of
//! `s_n` is a derivation.
//!
//! A map `Δ` is normalized in two stages,
//! `Δ′ = Δ − D` and `Δ″ = Δ′ − ad(x₀) − λσ`, and the remaining coefficients
//! of `Δ″` are checked against the test elements that force them to zero.
//! Every assumption of the argument is a checked precondition, so arbitrary
//! maps can be fed in and produce a failed trace instead of an error.

use std::fmt::Write as _;

use serde::Serialize;

use crate::dercalc::{combine, sigma, sigma1, tau, DerSpace, LinearMap};
use crate::error::{check_len, Error, Result};
use crate::exactla::{solve, Mat};
use crate::liecore::{LieAlgebra, SchrodingerBasis};
use crate::locder::certify_at;
use crate::scalar::Scalar;

/// One matrix entry of a normalized map: the coefficient of `row` in the
/// image of `column`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coefficient {
    pub row: String,
    pub column: String,
    pub value: Scalar,
}

/// Whether the normalized map sends a test element into its orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointCheck {
    pub point: String,
    pub local: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub id: String,
    pub claim: String,
    pub points: Vec<PointCheck>,
    pub coefficients: Vec<Coefficient>,
    /// All checked coefficients vanish.
    pub pass: bool,
}

impl Verdict {
    fn new(id: &str, claim: &str, points: Vec<PointCheck>, coefficients: Vec<Coefficient>) -> Self {
        let pass = coefficients.iter().all(|c| c.value.is_zero());
        Verdict {
            id: id.to_string(),
            claim: claim.to_string(),
            points,
            coefficients,
            pass,
        }
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &Coefficient> {
        self.coefficients.iter().filter(|c| !c.value.is_zero())
    }

    pub fn all_points_local(&self) -> bool {
        self.points.iter().all(|p| p.local)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProofTrace {
    pub algebra: String,
    pub n: usize,
    pub labels: Vec<String>,
    pub input: LinearMap,
    pub stage1_subtrahend: LinearMap,
    pub stage2_point: Vec<Scalar>,
    pub stage2_lambda: Scalar,
    /// Coefficient of `τ`, only for `n = 2`.
    pub stage2_tau: Option<Scalar>,
    pub residual: LinearMap,
    pub verdicts: Vec<Verdict>,
    pub decomposition_valid: bool,
    pub failure: Option<String>,
}

impl ProofTrace {
    /// `D + ad(x₀) + λσ (+ μτ) + residual`; equals `input` for every trace.
    pub fn reassemble(&self, alg: &LieAlgebra) -> Result<LinearMap> {
        let outer = outer_map(self.n)?.scale(&self.stage2_lambda);
        let mut m = self
            .stage1_subtrahend
            .add(&alg.ad(&self.stage2_point)?)?
            .add(&outer)?
            .add(&self.residual)?;
        if let Some(mu) = &self.stage2_tau {
            m = m.add(&tau().scale(mu))?;
        }
        Ok(m)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "replay on {} (n = {})", self.algebra, self.n);
        let x0: Vec<String> = self
            .stage2_point
            .iter()
            .zip(&self.labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| format!("{c}*{l}"))
            .collect();
        let x0 = if x0.is_empty() {
            "0".to_string()
        } else {
            x0.join(" + ")
        };
        let _ = writeln!(out, "  x0 = {x0}");
        let _ = writeln!(out, "  lambda = {}", self.stage2_lambda);
        if let Some(mu) = &self.stage2_tau {
            let _ = writeln!(out, "  tau coefficient = {mu}");
        }
        let _ = writeln!(
            out,
            "  stage-1 subtrahend is zero: {}",
            self.stage1_subtrahend.is_zero()
        );
        for v in &self.verdicts {
            let mark = if v.pass { "pass" } else { "FAIL" };
            let _ = writeln!(out, "  [{mark}] {}: {}", v.id, v.claim);
            if !v.points.is_empty() {
                let pts: Vec<String> = v
                    .points
                    .iter()
                    .map(|p| format!("{}{}", p.point, if p.local { "" } else { " (not local)" }))
                    .collect();
                let _ = writeln!(out, "      points: {}", pts.join(", "));
            }
            let _ = writeln!(out, "      coefficients checked: {}", v.coefficients.len());
            for c in v.nonzero() {
                let _ = writeln!(
                    out,
                    "      nonzero: {} in image of {} = {}",
                    c.row, c.column, c.value
                );
            }
        }
        if let Some(f) = &self.failure {
            let _ = writeln!(out, "  failure: {f}");
        }
        let _ = writeln!(out, "  residual is zero: {}", self.residual.is_zero());
        let _ = writeln!(out, "  decomposition valid: {}", self.decomposition_valid);
        out
    }
}

fn outer_map(n: usize) -> Result<LinearMap> {
    if n == 1 {
        Ok(sigma1())
    } else {
        sigma(n)
    }
}

fn entries(
    labels: &[String],
    m: &LinearMap,
    cells: impl IntoIterator<Item = (usize, usize)>,
) -> Vec<Coefficient> {
    cells
        .into_iter()
        .map(|(r, c)| Coefficient {
            row: labels[r].clone(),
            column: labels[c].clone(),
            value: m.get(r, c).clone(),
        })
        .collect()
}

fn block_cells(b: &SchrodingerBasis, blocks: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let g = b.groups();
    let mut cells = Vec::new();
    for &(br, bc) in blocks {
        for r in g[br].clone() {
            for c in g[bc].clone() {
                cells.push((r, c));
            }
        }
    }
    cells
}

const OFF_PATTERN: [(usize, usize); 4] = [(0, 1), (0, 2), (2, 0), (2, 1)];
const SEMISIMPLE: [(usize, usize); 2] = [(0, 0), (2, 2)];

fn schrodinger(alg: &LieAlgebra) -> Result<SchrodingerBasis> {
    SchrodingerBasis::detect(alg).ok_or(Error::NotSchrodinger)
}

/// Finds `D ∈ Der(s_n)` agreeing with `delta` on the `sl_2` and `so_n`
/// diagonal blocks and returns `(D, delta − D)`.
pub fn normalize_stage1(
    alg: &LieAlgebra,
    der: &DerSpace,
    delta: &LinearMap,
) -> Result<(LinearMap, LinearMap)> {
    let b = schrodinger(alg)?;
    check_len(alg.dim(), delta.dim())?;
    check_len(alg.dim(), der.algebra_dim())?;
    if let Some((r, c)) = block_cells(&b, &OFF_PATTERN)
        .into_iter()
        .find(|&(r, c)| !delta.get(r, c).is_zero())
    {
        let l = alg.labels();
        return Err(Error::Precondition(format!(
            "map leaves the local-derivation block pattern: {} has a {} component",
            l[c], l[r]
        )));
    }
    let cells = block_cells(&b, &SEMISIMPLE);
    let basis = der.basis_maps();
    let mut a = Mat::zeros(cells.len(), basis.len());
    for (k, d) in basis.iter().enumerate() {
        for (i, &(r, c)) in cells.iter().enumerate() {
            a.set(i, k, d.get(r, c).clone());
        }
    }
    let target: Vec<Scalar> = cells
        .iter()
        .map(|&(r, c)| delta.get(r, c).clone())
        .collect();
    let coeffs = solve(&a, &target)?.ok_or_else(|| {
        Error::Precondition(
            "restriction to the sl2 + so_n blocks is not the restriction of a derivation".into(),
        )
    })?;
    let d = combine(alg.dim(), &coeffs, &basis)?;
    let delta_prime = delta.sub(&d)?;
    Ok((d, delta_prime))
}

/// Result of the second normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage2 {
    pub point: Vec<Scalar>,
    pub lambda: Scalar,
    pub tau: Option<Scalar>,
    pub delta_dprime: LinearMap,
}

/// Reads `x₀` from `Δ′(h)` and `λ` from `Δ′(z)` and subtracts
/// `ad(x₀) + λσ`. For `n = 2` the `τ` coefficient comes from the `z`
/// component of `Δ′(s_12)`, and `x₀` also carries the `s_12` component
/// read off `Δ′(u_2)`, since `ad(s_12)` is invisible to the first stage.
pub fn normalize_stage2(alg: &LieAlgebra, delta_prime: &LinearMap) -> Result<Stage2> {
    let b = schrodinger(alg)?;
    let dim = alg.dim();
    check_len(dim, delta_prime.dim())?;
    let labels = alg.labels();
    let n = b.n();
    let (h, z) = (b.h(), b.z());
    let is_uv = |r: usize| (b.u(1)..=b.v(n)).contains(&r);
    if let Some(r) = (0..dim).find(|&r| !is_uv(r) && !delta_prime.get(r, h).is_zero()) {
        return Err(Error::Precondition(format!(
            "image of h has a {} component outside span(u, v)",
            labels[r]
        )));
    }
    if let Some(r) = (0..dim).find(|&r| r != z && !delta_prime.get(r, z).is_zero()) {
        return Err(Error::Precondition(format!(
            "image of z has a {} component outside span(z)",
            labels[r]
        )));
    }
    let mut point = alg.zero_vector();
    for i in 1..=n {
        point[b.u(i)] = -delta_prime.get(b.u(i), h).clone();
        point[b.v(i)] = delta_prime.get(b.v(i), h).clone();
    }
    let lambda = delta_prime.get(z, z).clone();
    let mut tau_coeff = None;
    if n == 2 {
        let (s12, _) = b.s(1, 2).expect("k != l");
        let unit = alg.bracket(&alg.basis_vector(s12), &alg.basis_vector(b.u(2)))?;
        let k = &unit[b.u(1)];
        point[s12] = delta_prime.get(b.u(1), b.u(2)) / k;
        tau_coeff = Some(delta_prime.get(z, s12).clone());
    }
    let mut dd = delta_prime
        .sub(&alg.ad(&point)?)?
        .sub(&outer_map(n)?.scale(&lambda))?;
    if let Some(mu) = &tau_coeff {
        dd = dd.sub(&tau().scale(mu))?;
    }
    Ok(Stage2 {
        point,
        lambda,
        tau: tau_coeff,
        delta_dprime: dd,
    })
}

struct PointSet<'a> {
    alg: &'a LieAlgebra,
    der: &'a DerSpace,
    delta: &'a LinearMap,
    b: &'a SchrodingerBasis,
}

impl PointSet<'_> {
    fn check(&self, label: String, terms: &[(usize, Scalar)]) -> Result<PointCheck> {
        let mut x = self.alg.zero_vector();
        for (i, c) in terms {
            x[*i] += c;
        }
        let local = certify_at(self.alg, self.der, self.delta, &x)?.is_some();
        Ok(PointCheck {
            point: label,
            local,
        })
    }

    fn s_term(&self, k: usize, l: usize) -> (usize, Scalar) {
        let (idx, sign) = self.b.s(k, l).expect("k != l");
        (idx, Scalar::from_int(sign))
    }
}

/// Checks the coefficients of `Δ″` against the test elements that force
/// them to vanish. Together the verdicts cover every entry of `Δ″` outside
/// the `h` and `z` columns in the Heisenberg rows.
pub fn coefficient_checks(
    alg: &LieAlgebra,
    der: &DerSpace,
    delta_dprime: &LinearMap,
) -> Result<Vec<Verdict>> {
    let b = schrodinger(alg)?;
    check_len(alg.dim(), delta_dprime.dim())?;
    let labels = alg.labels();
    let n = b.n();
    let (e, f, h, z) = (b.e(), b.f(), b.h(), b.z());
    let one = Scalar::one;
    let half = || Scalar::frac(1, 2);
    let ps = PointSet {
        alg,
        der,
        delta: delta_dprime,
        b: &b,
    };
    let heis: Vec<usize> = b.groups()[1].clone().collect();
    let coeffs = |cells: Vec<(usize, usize)>| entries(labels, delta_dprime, cells);
    let l = |i: usize| &labels[i];

    let mut pts = Vec::new();
    let mut cells = Vec::new();
    for i in 1..=n {
        let (u, v) = (b.u(i), b.v(i));
        pts.push(ps.check(format!("e+{}", l(u)), &[(e, one()), (u, one())])?);
        pts.push(ps.check(format!("f+{}", l(v)), &[(f, one()), (v, one())])?);
        cells.extend([(v, u), (u, v)]);
    }
    let cross = Verdict::new(
        "cross_terms",
        "the v_i coefficient of the image of u_i and the u_i coefficient of the image of v_i vanish",
        pts,
        coeffs(cells),
    );

    let mut pts = Vec::new();
    let mut cells = Vec::new();
    for i in 1..=n {
        let (u, v) = (b.u(i), b.v(i));
        pts.push(ps.check(format!("h+{}", l(u)), &[(h, one()), (u, one())])?);
        pts.push(ps.check(format!("h+{}", l(v)), &[(h, one()), (v, one())])?);
        cells.extend([(z, u), (z, v)]);
    }
    let central = Verdict::new(
        "central_terms",
        "the z coefficients of the images of u_i and v_i vanish",
        pts,
        coeffs(cells),
    );

    let mut pts = Vec::new();
    let mut cells: Vec<(usize, usize)> = heis.iter().map(|&r| (r, f)).collect();
    for i in 1..=n {
        let v = b.v(i);
        for (sign, tag) in [(1, "+"), (-1, "-")] {
            pts.push(ps.check(
                format!("f-1/2z{tag}{}", l(v)),
                &[(f, one()), (z, -half()), (v, Scalar::from_int(sign))],
            )?);
        }
        cells.push((v, v));
    }
    let f_col = Verdict::new(
        "f_image",
        "the image of f vanishes and the v_i coefficient of the image of v_i vanishes",
        pts,
        coeffs(cells),
    );

    let mut pts = Vec::new();
    let mut cells: Vec<(usize, usize)> = heis.iter().map(|&r| (r, e)).collect();
    for i in 1..=n {
        let u = b.u(i);
        for (sign, tag) in [(1, "+"), (-1, "-")] {
            pts.push(ps.check(
                format!("e+1/2z{tag}{}", l(u)),
                &[(e, one()), (z, half()), (u, Scalar::from_int(sign))],
            )?);
        }
        cells.push((u, u));
    }
    let e_col = Verdict::new(
        "e_image",
        "the image of e vanishes and the u_i coefficient of the image of u_i vanishes",
        pts,
        coeffs(cells),
    );

    let mut pts = Vec::new();
    for k in 1..=n {
        for m in (1..=n).filter(|&m| m != k) {
            let s = ps.s_term(k, m);
            let s_label = format!("s_{k},{m}");
            pts.push(ps.check(
                format!("{}+{s_label}", l(b.u(k))),
                &[(b.u(k), one()), s.clone()],
            )?);
            pts.push(ps.check(format!("{}+{s_label}", l(b.v(k))), &[(b.v(k), one()), s])?);
        }
    }
    let mut cells = Vec::new();
    for i in 1..=n {
        let (u, v) = (b.u(i), b.v(i));
        for &r in heis.iter().filter(|&&r| r != z && r != u && r != v) {
            cells.extend([(r, u), (r, v)]);
        }
    }
    for c in b.groups()[2].clone() {
        cells.extend(heis.iter().map(|&r| (r, c)));
    }
    let so_heis = Verdict::new(
        "so_and_heisenberg_images",
        "the images of so_n vanish and the images of u_i, v_i carry no further terms",
        pts,
        coeffs(cells),
    );

    Ok(vec![cross, central, f_col, e_col, so_heis])
}

/// Runs both normalizations and the coefficient checks. Only a non-`s_n`
/// algebra or mismatched dimensions give an error; every other failure is
/// recorded in the trace.
pub fn replay(alg: &LieAlgebra, der: &DerSpace, delta: &LinearMap) -> Result<ProofTrace> {
    let b = schrodinger(alg)?;
    let dim = alg.dim();
    check_len(dim, delta.dim())?;
    check_len(dim, der.algebra_dim())?;
    let labels = alg.labels().to_vec();
    let n = b.n();
    let mut trace = ProofTrace {
        algebra: alg.name().to_string(),
        n,
        labels: labels.clone(),
        input: delta.clone(),
        stage1_subtrahend: LinearMap::zero(dim),
        stage2_point: alg.zero_vector(),
        stage2_lambda: Scalar::zero(),
        stage2_tau: (n == 2).then(Scalar::zero),
        residual: delta.clone(),
        verdicts: Vec::new(),
        decomposition_valid: false,
        failure: None,
    };

    trace.verdicts.push(Verdict::new(
        "block_pattern",
        "the map has the block pattern of a derivation",
        Vec::new(),
        entries(&labels, delta, block_cells(&b, &OFF_PATTERN)),
    ));
    let (d, delta_prime) = match normalize_stage1(alg, der, delta) {
        Ok(r) => r,
        Err(Error::Precondition(msg)) => {
            trace.failure = Some(format!("first normalization: {msg}"));
            return Ok(trace);
        }
        Err(e) => return Err(e),
    };
    trace.verdicts.push(Verdict::new(
        "semisimple_blocks",
        "after subtracting a derivation the sl2 and so_n diagonal blocks vanish",
        Vec::new(),
        entries(&labels, &delta_prime, block_cells(&b, &SEMISIMPLE)),
    ));
    trace.stage1_subtrahend = d;
    trace.residual = delta_prime.clone();

    let stage2 = match normalize_stage2(alg, &delta_prime) {
        Ok(s) => s,
        Err(Error::Precondition(msg)) => {
            trace.failure = Some(format!("second normalization: {msg}"));
            return Ok(trace);
        }
        Err(e) => return Err(e),
    };
    let hz = (0..dim).flat_map(|r| [(r, b.h()), (r, b.z())]);
    trace.verdicts.push(Verdict::new(
        "h_z_normalized",
        "after subtracting ad(x0) and the outer part the images of h and z vanish",
        Vec::new(),
        entries(&labels, &stage2.delta_dprime, hz),
    ));
    trace.stage2_point = stage2.point;
    trace.stage2_lambda = stage2.lambda;
    trace.stage2_tau = stage2.tau;
    trace.residual = stage2.delta_dprime;

    trace
        .verdicts
        .extend(coefficient_checks(alg, der, &trace.residual)?);
    trace.decomposition_valid = trace.residual.is_zero();
    if !trace.decomposition_valid {
        let failed: Vec<&str> = trace
            .verdicts
            .iter()
            .filter(|v| !v.pass)
            .map(|v| v.id.as_str())
            .collect();
        trace.failure = Some(format!(
            "nonzero residual; failed checks: {}",
            failed.join(", ")
        ));
    }
    Ok(trace)
}
