//! Local derivations.
//!
//! A linear map `Δ` is a local derivation when `Δ(x)` lies in the orbit
//! `Der·x = {D(x) : D ∈ Der(L)}` for every `x`. For a fixed point this is a
//! linear condition on `Δ`; intersecting the conditions over a sample of
//! points gives a subspace that contains `LocDer(L)`, which in turn contains
//! `Der(L)`. When the sampled intersection has the dimension of `Der(L)`
//! the three spaces coincide.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dercalc::{DerSpace, LinearMap};
use crate::error::{check_len, Result};
use crate::exactla::{solve, Echelon, Mat, Subspace};
use crate::liecore::{LieAlgebra, SchrodingerBasis};
use crate::scalar::Scalar;

pub const DEFAULT_STABILIZATION_WINDOW: usize = 5;
pub const DEFAULT_MAX_SAMPLES: usize = 200;

/// Random sample coordinates are drawn uniformly from `-RANGE..=RANGE`.
const SAMPLE_RANGE: i64 = 3;

/// `span{D(x) : D ∈ Der}`.
pub fn orbit(alg: &LieAlgebra, der: &DerSpace, x: &[Scalar]) -> Result<Subspace> {
    check_len(alg.dim(), x.len())?;
    let images = der
        .basis_maps()
        .into_iter()
        .map(|d| d.apply(x))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(alg.dim(), images)
}

/// The pointwise locality condition at one point.
#[derive(Clone, Debug)]
pub struct PointConstraint {
    pub point: Vec<Scalar>,
    pub image_space: Subspace,
    /// `{Δ : Δ(point) ∈ image_space}` in endomorphism coordinates.
    pub constraint: Subspace,
}

// One equation per annihilator vector w of the orbit: Σ_{r,c} w_r x_c Δ_{rc} = 0.
fn constraint_equations(point: &[Scalar], image_space: &Subspace) -> Vec<Vec<Scalar>> {
    let n = point.len();
    image_space
        .annihilator()
        .basis_vectors()
        .map(|w| {
            let mut row = vec![Scalar::zero(); n * n];
            for (r, wr) in w.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (c, xc) in point.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    row[r * n + c] = wr * xc;
                }
            }
            row
        })
        .collect()
}

pub fn point_constraint(alg: &LieAlgebra, der: &DerSpace, x: &[Scalar]) -> Result<PointConstraint> {
    let image_space = orbit(alg, der, x)?;
    let n = alg.dim();
    let mut ech = Echelon::new(n * n);
    if x.iter().any(|c| !c.is_zero()) {
        for row in constraint_equations(x, &image_space) {
            ech.insert(row);
        }
    }
    Ok(PointConstraint {
        point: x.to_vec(),
        image_space,
        constraint: ech.null_space(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocDerStatus {
    ProvenEqual,
    CandidateExcess,
}

/// A candidate-space map outside `Der`, with the first sampled point that
/// refutes its locality, if one was found.
#[derive(Clone, Debug, Serialize)]
pub struct ExcessWitness {
    pub map: LinearMap,
    pub refuting_point: Option<Vec<Scalar>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocDerReport {
    pub algebra: String,
    pub dim_der: usize,
    pub dim_candidate: usize,
    pub status: LocDerStatus,
    pub seed: u64,
    pub samples_used: usize,
    pub witnesses: Vec<ExcessWitness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingConfig {
    pub seed: u64,
    pub stabilization_window: usize,
    pub max_samples: usize,
}

impl SamplingConfig {
    pub fn with_seed(seed: u64) -> Self {
        SamplingConfig {
            seed,
            ..Default::default()
        }
    }
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig {
            seed: 0,
            stabilization_window: DEFAULT_STABILIZATION_WINDOW,
            max_samples: DEFAULT_MAX_SAMPLES,
        }
    }
}

fn combo(dim: usize, terms: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    for (i, c) in terms {
        v[*i] += c;
    }
    v
}

/// Test elements used by the elimination argument for `s_n`:
/// `e+u_i, f+v_i, h+u_i, h+v_i, f−½z±v_i, e+½z±u_i, u_k+s_kl, v_k+s_kl`
/// (`k ≠ l`, with `s_lk = −s_kl`).
pub fn schrodinger_test_points(b: &SchrodingerBasis) -> Vec<(String, Vec<Scalar>)> {
    let dim = b.dim();
    let one = Scalar::one;
    let half = || Scalar::frac(1, 2);
    let mut pts = Vec::new();
    for i in 1..=b.n() {
        let (u, v) = (b.u(i), b.v(i));
        pts.push((
            format!("e+u_{i}"),
            combo(dim, &[(b.e(), one()), (u, one())]),
        ));
        pts.push((
            format!("f+v_{i}"),
            combo(dim, &[(b.f(), one()), (v, one())]),
        ));
        pts.push((
            format!("h+u_{i}"),
            combo(dim, &[(b.h(), one()), (u, one())]),
        ));
        pts.push((
            format!("h+v_{i}"),
            combo(dim, &[(b.h(), one()), (v, one())]),
        ));
        for (sign, tag) in [(1, "+"), (-1, "-")] {
            let s = Scalar::from_int(sign);
            pts.push((
                format!("f-1/2z{tag}v_{i}"),
                combo(dim, &[(b.f(), one()), (b.z(), -half()), (v, s.clone())]),
            ));
            pts.push((
                format!("e+1/2z{tag}u_{i}"),
                combo(dim, &[(b.e(), one()), (b.z(), half()), (u, s)]),
            ));
        }
    }
    for k in 1..=b.n() {
        for l in 1..=b.n() {
            if let Some((s, sign)) = b.s(k, l) {
                let s_kl = (s, Scalar::from_int(sign));
                pts.push((
                    format!("u_{k}+s_{k}{l}"),
                    combo(dim, &[(b.u(k), one()), s_kl.clone()]),
                ));
                pts.push((
                    format!("v_{k}+s_{k}{l}"),
                    combo(dim, &[(b.v(k), one()), s_kl]),
                ));
            }
        }
    }
    pts
}

/// The deterministic structured sample set: all basis vectors, followed by
/// the `s_n` test elements when the algebra is recognized as `s_n`.
pub fn structured_points(alg: &LieAlgebra) -> Vec<Vec<Scalar>> {
    let mut pts: Vec<Vec<Scalar>> = (0..alg.dim()).map(|i| alg.basis_vector(i)).collect();
    if let Some(b) = SchrodingerBasis::detect(alg) {
        pts.extend(schrodinger_test_points(&b).into_iter().map(|(_, p)| p));
    }
    pts
}

/// Signed sums of two and then three distinct basis vectors, leading
/// coefficient `+1`: `b_i ± b_j`, then `b_i ± b_j ± b_k`.
///
/// Orbits of generic points are often the whole algebra, so random points
/// carry no constraint; these low-height points sit on the degenerate
/// strata (for `s_2`, `e − f + s_12` lies on `h² + s² + ef = 0`).
pub fn low_height_points(dim: usize) -> impl Iterator<Item = Vec<Scalar>> {
    let pairs = (0..dim).flat_map(move |i| {
        (i + 1..dim).flat_map(move |j| {
            [1, -1]
                .into_iter()
                .map(move |sj| signed_point(dim, &[(i, 1), (j, sj)]))
        })
    });
    let triples = (0..dim).flat_map(move |i| {
        (i + 1..dim).flat_map(move |j| {
            (j + 1..dim).flat_map(move |k| {
                [(1, 1), (1, -1), (-1, 1), (-1, -1)]
                    .into_iter()
                    .map(move |(sj, sk)| signed_point(dim, &[(i, 1), (j, sj), (k, sk)]))
            })
        })
    });
    pairs.chain(triples)
}

fn signed_point(dim: usize, terms: &[(usize, i64)]) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    for &(i, c) in terms {
        v[i] = Scalar::from_int(c);
    }
    v
}

/// Pseudorandom integer points with coordinates in `[-3, 3]`.
pub struct RandomPoints {
    rng: ChaCha8Rng,
    dim: usize,
}

impl RandomPoints {
    pub fn new(dim: usize, seed: u64) -> Self {
        RandomPoints {
            rng: ChaCha8Rng::seed_from_u64(seed),
            dim,
        }
    }
}

impl Iterator for RandomPoints {
    type Item = Vec<Scalar>;

    fn next(&mut self) -> Option<Vec<Scalar>> {
        Some(
            (0..self.dim)
                .map(|_| Scalar::from_int(self.rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE)))
                .collect(),
        )
    }
}

/// Intersects point constraints over the structured set, the low-height
/// points and then pseudorandom points. Random sampling stops once the dimension has not
/// moved for `stabilization_window` consecutive samples, once
/// `max_samples` random points were used, or as soon as the dimension
/// reaches `dim Der` (it cannot drop below it).
pub fn candidate_space(
    alg: &LieAlgebra,
    der: &DerSpace,
    config: SamplingConfig,
) -> Result<(Subspace, LocDerReport)> {
    if config.stabilization_window == 0 {
        return Err(crate::Error::InvalidParameter(
            "stabilization window must be at least 1".into(),
        ));
    }
    let n = alg.dim();
    let ambient = n * n;
    let dim_der = der.dim();
    let mut ech = Echelon::new(ambient);
    let mut samples_used = 0;
    let candidate_dim = |e: &Echelon| ambient - e.rank();

    let add_point = |ech: &mut Echelon, x: &[Scalar]| -> Result<()> {
        if x.iter().any(|c| !c.is_zero()) {
            let image = orbit(alg, der, x)?;
            for row in constraint_equations(x, &image) {
                ech.insert(row);
            }
        }
        Ok(())
    };

    for x in structured_points(alg)
        .into_iter()
        .chain(low_height_points(n))
    {
        if candidate_dim(&ech) == dim_der {
            break;
        }
        add_point(&mut ech, &x)?;
        samples_used += 1;
    }

    let mut stable = 0;
    let mut random = RandomPoints::new(n, config.seed);
    let mut drawn = 0;
    while candidate_dim(&ech) > dim_der
        && stable < config.stabilization_window
        && drawn < config.max_samples
    {
        let before = candidate_dim(&ech);
        let x = random.next().expect("infinite iterator");
        add_point(&mut ech, &x)?;
        drawn += 1;
        samples_used += 1;
        stable = if candidate_dim(&ech) == before {
            stable + 1
        } else {
            0
        };
    }

    let candidate = ech.null_space();
    let status = if candidate.dim() == dim_der {
        LocDerStatus::ProvenEqual
    } else {
        LocDerStatus::CandidateExcess
    };

    let mut witnesses = Vec::new();
    if status == LocDerStatus::CandidateExcess {
        let mut basis = Echelon::new(ambient);
        for v in der.space().basis_vectors() {
            basis.insert(v);
        }
        for v in candidate.basis_vectors() {
            if basis.insert(v.clone()) {
                let map = LinearMap::from_coords(n, v)?;
                let refuting_point =
                    witness_search(alg, der, &map, config.max_samples, config.seed)?;
                witnesses.push(ExcessWitness {
                    map,
                    refuting_point,
                });
            }
        }
    }

    let report = LocDerReport {
        algebra: alg.name().to_string(),
        dim_der,
        dim_candidate: candidate.dim(),
        status,
        seed: config.seed,
        samples_used,
        witnesses,
    };
    Ok((candidate, report))
}

/// Coefficients `c` over the canonical `Der` basis with
/// `(Σ c_i D_i)(x) = delta(x)`, or `None` if `delta(x)` is outside the orbit.
pub fn certify_at(
    alg: &LieAlgebra,
    der: &DerSpace,
    delta: &LinearMap,
    x: &[Scalar],
) -> Result<Option<Vec<Scalar>>> {
    let n = alg.dim();
    check_len(n, x.len())?;
    check_len(n, delta.dim())?;
    let basis = der.basis_maps();
    let images = basis
        .iter()
        .map(|d| d.apply(x))
        .collect::<Result<Vec<_>>>()?;
    // columns are D_i(x)
    let mut a = Mat::zeros(n, basis.len());
    for (c, img) in images.iter().enumerate() {
        for (r, v) in img.iter().enumerate() {
            a.set(r, c, v.clone());
        }
    }
    solve(&a, &delta.apply(x)?)
}

/// Whether `delta(x) ∈ Der·x`.
pub fn is_local_at(
    alg: &LieAlgebra,
    der: &DerSpace,
    delta: &LinearMap,
    x: &[Scalar],
) -> Result<bool> {
    let image = orbit(alg, der, x)?;
    image.contains(&delta.apply(x)?)
}

/// Scans the structured set, then up to `budget` pseudorandom points, for an
/// `x` with `delta(x) ∉ Der·x`.
pub fn witness_search(
    alg: &LieAlgebra,
    der: &DerSpace,
    delta: &LinearMap,
    budget: usize,
    seed: u64,
) -> Result<Option<Vec<Scalar>>> {
    check_len(alg.dim(), delta.dim())?;
    if der.contains(delta)? {
        return Ok(None);
    }
    let points = structured_points(alg)
        .into_iter()
        .chain(low_height_points(alg.dim()))
        .chain(RandomPoints::new(alg.dim(), seed).take(budget));
    for x in points {
        if !is_local_at(alg, der, delta, &x)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Equation form of the constraint at `x`, exposed for cross-checks: every
/// row `w ⊗ x` with `w` annihilating the orbit.
pub fn constraint_rows(alg: &LieAlgebra, der: &DerSpace, x: &[Scalar]) -> Result<Mat> {
    let image = orbit(alg, der, x)?;
    let n = alg.dim();
    Mat::from_rows(n * n, constraint_equations(x, &image))
}
