//! Derivations: the Leibniz system, `Der(L)`, `Inn(L)`, the named outer
//! derivations of `s_n`, and the block shape of derivations of `s_n`.

use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};
use crate::exactla::{Echelon, Mat, Subspace};
use crate::liecore::{LieAlgebra, SchrodingerBasis};
use crate::scalar::Scalar;

/// A linear endomorphism of an algebra. Column `c` of the matrix is the
/// image of basis vector `c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap {
    matrix: Mat,
}

impl LinearMap {
    pub fn zero(dim: usize) -> Self {
        LinearMap {
            matrix: Mat::zeros(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        LinearMap {
            matrix: Mat::identity(dim),
        }
    }

    pub fn from_mat(matrix: Mat) -> Result<Self> {
        check_len(matrix.rows(), matrix.cols())?;
        Ok(LinearMap { matrix })
    }

    /// The map sending basis vector `from` to basis vector `to` and every
    /// other basis vector to zero.
    pub fn elementary(dim: usize, from: usize, to: usize) -> Self {
        let mut m = LinearMap::zero(dim);
        m.set(to, from, Scalar::one());
        m
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        self.matrix.get(r, c)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.matrix.set(r, c, v);
    }

    pub(crate) fn add_entry(&mut self, r: usize, c: usize, v: &Scalar) {
        let cur = self.matrix.get(r, c) + v;
        self.matrix.set(r, c, cur);
    }

    pub fn apply(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        self.matrix.mul_vec(x)
    }

    /// Image of basis vector `c`.
    pub fn image_of_basis(&self, c: usize) -> Vec<Scalar> {
        self.matrix.column(c)
    }

    /// Row-major flattening; entry `(r, c)` lands at `r * dim + c`.
    pub fn to_coords(&self) -> Vec<Scalar> {
        self.matrix.entries().to_vec()
    }

    pub fn from_coords(dim: usize, coords: Vec<Scalar>) -> Result<Self> {
        check_len(dim * dim, coords.len())?;
        let rows = coords.chunks(dim.max(1)).map(<[Scalar]>::to_vec).collect();
        let matrix = if dim == 0 {
            Mat::zeros(0, 0)
        } else {
            Mat::from_rows(dim, rows)?
        };
        Ok(LinearMap { matrix })
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap {
            matrix: self.matrix.add(&other.matrix)?,
        })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap {
            matrix: self.matrix.sub(&other.matrix)?,
        })
    }

    pub fn scale(&self, k: &Scalar) -> LinearMap {
        LinearMap {
            matrix: self.matrix.scale(k),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap {
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    /// `self ∘ other − other ∘ self`.
    pub fn commutator(&self, other: &LinearMap) -> Result<LinearMap> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

#[derive(Serialize, Deserialize)]
struct LinearMapFile {
    dim: usize,
    matrix: Mat,
}

// File form: { "dim": n, "matrix": [["p/q", ..], ..] }, row-major.
impl Serialize for LinearMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LinearMapFile {
            dim: self.dim(),
            matrix: self.matrix.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinearMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = LinearMapFile::deserialize(d)?;
        let matrix = if file.dim == 0 && file.matrix.rows() == 0 {
            Mat::zeros(0, 0)
        } else {
            file.matrix
        };
        if matrix.rows() != file.dim || matrix.cols() != file.dim {
            return Err(serde::de::Error::custom(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                file.dim,
                file.dim
            )));
        }
        Ok(LinearMap { matrix })
    }
}

/// Linear combination `Σ c_i m_i` of maps of dimension `dim`.
pub fn combine(dim: usize, coeffs: &[Scalar], maps: &[LinearMap]) -> Result<LinearMap> {
    check_len(maps.len(), coeffs.len())?;
    let mut acc = LinearMap::zero(dim);
    for (c, m) in coeffs.iter().zip(maps) {
        if !c.is_zero() {
            acc = acc.add(&m.scale(c))?;
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMap {
    pub name: String,
    pub map: LinearMap,
}

/// `Der(L)` with its inner part and chosen outer representatives, all as
/// subspaces of the `dim²`-dimensional endomorphism space.
#[derive(Clone, Debug)]
pub struct DerSpace {
    dim: usize,
    space: Subspace,
    inner: Subspace,
    outer_reps: Vec<NamedMap>,
}

impl DerSpace {
    /// Dimension of the underlying algebra.
    pub fn algebra_dim(&self) -> usize {
        self.dim
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn inner(&self) -> &Subspace {
        &self.inner
    }

    pub fn outer_reps(&self) -> &[NamedMap] {
        &self.outer_reps
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The canonical basis of `Der(L)` as maps.
    pub fn basis_maps(&self) -> Vec<LinearMap> {
        self.space
            .basis_vectors()
            .map(|v| {
                LinearMap::from_coords(self.dim, v).expect("basis vector has dim² coordinates")
            })
            .collect()
    }

    pub fn contains(&self, m: &LinearMap) -> Result<bool> {
        check_len(self.dim, m.dim())?;
        self.space.contains(&m.to_coords())
    }

    /// Restricts the space to a subspace of it. Only meant for exercising
    /// code paths that must cope with an incomplete derivation space.
    pub fn restricted_to(&self, space: Subspace) -> Result<DerSpace> {
        if !space.is_subspace_of(&self.space)? {
            return Err(Error::Precondition(
                "restriction is not a subspace of Der".into(),
            ));
        }
        Ok(DerSpace {
            dim: self.dim,
            inner: self.inner.intersect(&space)?,
            space,
            outer_reps: Vec::new(),
        })
    }
}

fn leibniz_rows_for_pair(alg: &LieAlgebra, i: usize, j: usize) -> Vec<Vec<Scalar>> {
    let n = alg.dim();
    let idx = |r: usize, c: usize| r * n + c;
    let mut rows = vec![vec![Scalar::zero(); n * n]; n];
    // D([b_i, b_j])_k
    for (m, c) in alg.bracket_basis(i, j) {
        for (k, row) in rows.iter_mut().enumerate() {
            row[idx(k, *m)] += c;
        }
    }
    for r in 0..n {
        // − [D b_i, b_j]_k
        for (k, c) in alg.bracket_basis(r, j) {
            rows[*k][idx(r, i)] -= c;
        }
        // − [b_i, D b_j]_k
        for (k, c) in alg.bracket_basis(i, r) {
            rows[*k][idx(r, j)] -= c;
        }
    }
    rows
}

fn basis_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// The linear system on endomorphism coordinates whose kernel is `Der(L)`.
/// Rows are ordered by basis pair `(i, j)`, `i < j`, then output index `k`.
pub fn leibniz_system(alg: &LieAlgebra) -> Mat {
    let n = alg.dim();
    let rows: Vec<Vec<Scalar>> = basis_pairs(n)
        .flat_map(|(i, j)| leibniz_rows_for_pair(alg, i, j))
        .collect();
    Mat::from_rows(n * n, rows).expect("rows have dim² entries")
}

fn der_kernel(alg: &LieAlgebra) -> Subspace {
    let n = alg.dim();
    let mut ech = Echelon::new(n * n);
    for (i, j) in basis_pairs(n) {
        for row in leibniz_rows_for_pair(alg, i, j) {
            if row.iter().any(|x| !x.is_zero()) {
                ech.insert(row);
            }
        }
    }
    ech.null_space()
}

/// Span of all `ad(b_i)`.
pub fn inner_derivations(alg: &LieAlgebra) -> Subspace {
    let n = alg.dim();
    Subspace::span(n * n, (0..n).map(|i| alg.ad_basis(i).to_coords()))
        .expect("ad maps have dim² coordinates")
}

/// Computes `Der(L)`, `Inn(L)` and outer representatives. For `s_n` the
/// representatives are the named maps `σ₁`, `σ`, `τ`; otherwise canonical
/// basis vectors of `Der` extending a basis of `Inn`.
pub fn derivation_space(alg: &LieAlgebra) -> DerSpace {
    let n = alg.dim();
    let space = der_kernel(alg);
    let inner = inner_derivations(alg);

    let named = SchrodingerBasis::detect(alg).map(|b| named_outer(b.n()));
    let outer_reps = match named {
        Some(reps) if outer_reps_valid(&space, &inner, &reps) => reps,
        _ => extend_to_basis(n, &space, &inner),
    };
    DerSpace {
        dim: n,
        space,
        inner,
        outer_reps,
    }
}

fn named_outer(n: usize) -> Vec<NamedMap> {
    let named = |name: &str, map: LinearMap| NamedMap {
        name: name.into(),
        map,
    };
    match n {
        1 => vec![named("sigma1", sigma1())],
        2 => vec![
            named("sigma", sigma(2).expect("n = 2")),
            named("tau", tau()),
        ],
        _ => vec![named("sigma", sigma(n).expect("n >= 3"))],
    }
}

fn outer_reps_valid(space: &Subspace, inner: &Subspace, reps: &[NamedMap]) -> bool {
    let all_in = reps
        .iter()
        .all(|r| space.contains(&r.map.to_coords()).unwrap_or(false));
    let span = Subspace::span(
        space.ambient_dim(),
        inner
            .basis_vectors()
            .chain(reps.iter().map(|r| r.map.to_coords())),
    );
    all_in && matches!(span, Ok(s) if s.dim() == inner.dim() + reps.len() && s.dim() == space.dim())
}

fn extend_to_basis(n: usize, space: &Subspace, inner: &Subspace) -> Vec<NamedMap> {
    let mut ech = Echelon::new(n * n);
    for v in inner.basis_vectors() {
        ech.insert(v);
    }
    let mut reps = Vec::new();
    for v in space.basis_vectors() {
        if ech.insert(v.clone()) {
            reps.push(NamedMap {
                name: format!("outer_{}", reps.len() + 1),
                map: LinearMap::from_coords(n, v).expect("dim² coordinates"),
            });
        }
    }
    reps
}

// σ-type map: z ↦ z, u_i ↦ ½u_i, v_i ↦ ½v_i, everything else ↦ 0.
fn half_weight_map(n: usize) -> LinearMap {
    let b = SchrodingerBasis::new(n).expect("n >= 1");
    let mut m = LinearMap::zero(b.dim());
    m.set(b.z(), b.z(), Scalar::one());
    for i in 1..=n {
        m.set(b.u(i), b.u(i), Scalar::frac(1, 2));
        m.set(b.v(i), b.v(i), Scalar::frac(1, 2));
    }
    m
}

/// Outer derivation `σ` of `s_n`, `n ≥ 2`.
pub fn sigma(n: usize) -> Result<LinearMap> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "sigma is defined for n >= 2, got {n}"
        )));
    }
    Ok(half_weight_map(n))
}

/// Outer derivation `τ` of `s_2`: `s_12 ↦ z`.
pub fn tau() -> LinearMap {
    let b = SchrodingerBasis::new(2).expect("n = 2");
    let (s12, _) = b.s(1, 2).expect("k != l");
    LinearMap::elementary(b.dim(), s12, b.z())
}

/// Outer derivation `σ₁` of `s_1`.
pub fn sigma1() -> LinearMap {
    half_weight_map(1)
}

/// Outcome of a Leibniz-rule check over all basis pairs `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivationVerdict {
    /// Violating pairs in lexicographic order.
    pub violations: Vec<(usize, usize)>,
}

impl DerivationVerdict {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<(usize, usize)> {
        self.violations.first().copied()
    }
}

pub fn is_derivation(alg: &LieAlgebra, m: &LinearMap) -> Result<DerivationVerdict> {
    let n = alg.dim();
    check_len(n, m.dim())?;
    let images: Vec<Vec<Scalar>> = (0..n).map(|c| m.image_of_basis(c)).collect();
    let mut violations = Vec::new();
    for (i, j) in basis_pairs(n) {
        let lhs = m.apply(&bracket_vec(alg, i, j))?;
        let a = alg.bracket(&images[i], &alg.basis_vector(j))?;
        let b = alg.bracket(&alg.basis_vector(i), &images[j])?;
        let ok = lhs
            .iter()
            .zip(a.iter().zip(&b))
            .all(|(l, (x, y))| *l == x + y);
        if !ok {
            violations.push((i, j));
        }
    }
    Ok(DerivationVerdict { violations })
}

fn bracket_vec(alg: &LieAlgebra, i: usize, j: usize) -> Vec<Scalar> {
    let mut v = alg.zero_vector();
    for (k, c) in alg.bracket_basis(i, j) {
        v[*k] = c.clone();
    }
    v
}

/// Dimensions and checks for `Der(L) = Inn(L) ⊕ span(outer_reps)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub algebra: String,
    pub dim: usize,
    pub dim_center: usize,
    pub dim_der: usize,
    pub dim_inn: usize,
    pub n_outer: usize,
    pub outer_names: Vec<String>,
    pub outer_are_derivations: bool,
    pub outer_outside_inner: bool,
    pub direct_sum: bool,
}

impl DecompositionReport {
    pub fn all_checks_pass(&self) -> bool {
        self.outer_are_derivations && self.outer_outside_inner && self.direct_sum
    }
}

pub fn decomposition_report(alg: &LieAlgebra, der: &DerSpace) -> Result<DecompositionReport> {
    let mut outer_are_derivations = true;
    let mut outer_outside_inner = true;
    for rep in der.outer_reps() {
        outer_are_derivations &= is_derivation(alg, &rep.map)?.is_pass();
        outer_outside_inner &= !der.inner().contains(&rep.map.to_coords())?;
    }
    let n = alg.dim();
    let span = Subspace::span(
        n * n,
        der.inner()
            .basis_vectors()
            .chain(der.outer_reps().iter().map(|r| r.map.to_coords())),
    )?;
    let direct_sum = span == *der.space()
        && der.inner().dim() + der.outer_reps().len() == der.dim()
        && der.inner().is_subspace_of(der.space())?;
    Ok(DecompositionReport {
        algebra: alg.name().to_string(),
        dim: n,
        dim_center: alg.center().dim(),
        dim_der: der.dim(),
        dim_inn: der.inner().dim(),
        n_outer: der.outer_reps().len(),
        outer_names: der.outer_reps().iter().map(|r| r.name.clone()).collect(),
        outer_are_derivations,
        outer_outside_inner,
        direct_sum,
    })
}

/// Checks `Der(s_n) = Inn(s_n) ⊕ (named outer derivations)`.
pub fn verify_schrodinger_derivations(alg: &LieAlgebra) -> Result<DecompositionReport> {
    let basis = SchrodingerBasis::detect(alg).ok_or(Error::NotSchrodinger)?;
    let der = derivation_space(alg);
    let report = decomposition_report(alg, &der)?;
    let expected: Vec<&str> = match basis.n() {
        1 => vec!["sigma1"],
        2 => vec!["sigma", "tau"],
        _ => vec!["sigma"],
    };
    let named_ok = report.outer_names.iter().map(String::as_str).eq(expected);
    Ok(DecompositionReport {
        direct_sum: report.direct_sum && named_ok,
        ..report
    })
}

/// A map cut into the 3 × 3 grid of blocks over a partition of the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPattern {
    sizes: [usize; 3],
    blocks: Vec<Mat>,
}

impl BlockPattern {
    pub fn split(m: &LinearMap, sizes: [usize; 3]) -> Result<Self> {
        check_len(sizes.iter().sum(), m.dim())?;
        let starts = [0, sizes[0], sizes[0] + sizes[1]];
        let range = |g: usize| starts[g]..starts[g] + sizes[g];
        let blocks = (0..3)
            .flat_map(|r| (0..3).map(move |c| (r, c)))
            .map(|(r, c)| m.matrix().block(range(r), range(c)))
            .collect();
        Ok(BlockPattern { sizes, blocks })
    }

    pub fn sizes(&self) -> [usize; 3] {
        self.sizes
    }

    /// Block `(row_group, col_group)`, 0-based.
    pub fn block(&self, r: usize, c: usize) -> &Mat {
        &self.blocks[r * 3 + c]
    }

    pub fn reassemble(&self) -> LinearMap {
        let n: usize = self.sizes.iter().sum();
        let starts = [0, self.sizes[0], self.sizes[0] + self.sizes[1]];
        let mut m = LinearMap::zero(n);
        for br in 0..3 {
            for bc in 0..3 {
                let b = self.block(br, bc);
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        m.set(starts[br] + i, starts[bc] + j, b.get(i, j).clone());
                    }
                }
            }
        }
        m
    }

    /// Zero blocks at (1,2), (1,3), (3,1), (3,2) in 1-based block indices,
    /// i.e. the shape `[[*,0,0],[*,*,*],[0,0,*]]`.
    pub fn has_derivation_shape(&self) -> bool {
        [(0, 1), (0, 2), (2, 0), (2, 1)]
            .iter()
            .all(|&(r, c)| self.block(r, c).is_zero())
    }
}

pub fn block_decompose(m: &LinearMap, order: &SchrodingerBasis) -> Result<BlockPattern> {
    BlockPattern::split(m, order.group_sizes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::{build_abelian, build_schrodinger, build_sl2, build_so, direct_sum};

    #[test]
    fn abelian_system_is_zero() {
        let a = build_abelian(3);
        assert!(leibniz_system(&a).is_zero());
        assert_eq!(derivation_space(&a).dim(), 9);
    }

    #[test]
    fn leibniz_kernel_dims() {
        let s1 = build_schrodinger(1).unwrap();
        assert_eq!(crate::exactla::kernel(&leibniz_system(&s1)).dim(), 6);
        assert_eq!(
            crate::exactla::kernel(&leibniz_system(&build_sl2())).dim(),
            3
        );
    }

    #[test]
    fn leibniz_system_shape() {
        let s1 = build_schrodinger(1).unwrap();
        let m = leibniz_system(&s1);
        assert_eq!(m.rows(), 15 * 6);
        assert_eq!(m.cols(), 36);
    }

    #[test]
    fn named_maps() {
        let b = SchrodingerBasis::new(3).unwrap();
        let s = sigma(3).unwrap();
        let s3 = build_schrodinger(3).unwrap();
        assert_eq!(
            s.apply(&s3.basis_vector(b.z())).unwrap(),
            s3.basis_vector(b.z())
        );
        let mut half_u2 = s3.zero_vector();
        half_u2[b.u(2)] = Scalar::frac(1, 2);
        assert_eq!(s.apply(&s3.basis_vector(b.u(2))).unwrap(), half_u2);
        assert_eq!(s.apply(&s3.basis_vector(b.e())).unwrap(), s3.zero_vector());
        assert!(sigma(1).is_err());

        let t = tau();
        let b2 = SchrodingerBasis::new(2).unwrap();
        let (s12, _) = b2.s(1, 2).unwrap();
        for c in 0..b2.dim() {
            let img = t.image_of_basis(c);
            let nonzero: Vec<usize> = (0..b2.dim()).filter(|&r| !img[r].is_zero()).collect();
            if c == s12 {
                assert_eq!(nonzero, vec![b2.z()]);
            } else {
                assert!(nonzero.is_empty());
            }
        }

        let b1 = SchrodingerBasis::new(1).unwrap();
        assert_eq!(sigma1().get(b1.v(1), b1.v(1)), &Scalar::frac(1, 2));
    }

    #[test]
    fn derivation_checks() {
        let s3 = build_schrodinger(3).unwrap();
        let b = SchrodingerBasis::new(3).unwrap();
        assert!(is_derivation(&s3, &s3.ad_basis(b.e())).unwrap().is_pass());
        assert!(is_derivation(&s3, &sigma(3).unwrap()).unwrap().is_pass());
        let id = is_derivation(&s3, &LinearMap::identity(13)).unwrap();
        assert!(!id.is_pass());
        assert!(id.violations.contains(&(b.u(1), b.v(1))));
        assert!(is_derivation(&s3, &LinearMap::identity(3)).is_err());
    }

    #[test]
    fn theorem_dimensions_small() {
        let expect = [(1, 6, 5, 1), (2, 10, 8, 2), (3, 13, 12, 1)];
        for (n, der, inn, outer) in expect {
            let s = build_schrodinger(n).unwrap();
            let r = verify_schrodinger_derivations(&s).unwrap();
            assert_eq!(
                (r.dim_der, r.dim_inn, r.n_outer),
                (der, inn, outer),
                "n = {n}"
            );
            assert!(r.all_checks_pass(), "n = {n}: {r:?}");
        }
        assert!(matches!(
            verify_schrodinger_derivations(&build_sl2()),
            Err(Error::NotSchrodinger)
        ));
    }

    #[test]
    fn semisimple_has_only_inner() {
        let sl2 = build_sl2();
        for alg in [
            sl2.clone(),
            build_so(3).unwrap(),
            direct_sum(&sl2, &build_so(3).unwrap()),
        ] {
            let der = derivation_space(&alg);
            assert_eq!(der.dim(), alg.dim());
            assert_eq!(der.inner().dim(), alg.dim());
            assert!(der.outer_reps().is_empty());
        }
    }

    #[test]
    fn generic_outer_reps_extend_inner() {
        // h_1: Der has dimension 6, Inn dimension 2
        let h1 = crate::liecore::build_heisenberg(1).unwrap();
        let der = derivation_space(&h1);
        let r = decomposition_report(&h1, &der).unwrap();
        assert_eq!((r.dim_der, r.dim_inn, r.n_outer), (6, 2, 4));
        assert!(r.all_checks_pass());
    }

    #[test]
    fn block_shapes() {
        let s3 = build_schrodinger(3).unwrap();
        let b = SchrodingerBasis::new(3).unwrap();
        let der = derivation_space(&s3);
        for m in der.basis_maps() {
            let p = block_decompose(&m, &b).unwrap();
            assert!(p.has_derivation_shape());
            assert_eq!(p.reassemble(), m);
        }
        let zero = block_decompose(&LinearMap::zero(13), &b).unwrap();
        assert!((0..3).all(|r| (0..3).all(|c| zero.block(r, c).is_zero())));

        let p = block_decompose(&sigma(3).unwrap(), &b).unwrap();
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(p.block(r, c).is_zero(), (r, c) != (1, 1));
            }
        }
        let d22 = p.block(1, 1);
        let mut want = Mat::zeros(7, 7);
        want.set(0, 0, Scalar::one());
        for i in 1..7 {
            want.set(i, i, Scalar::frac(1, 2));
        }
        assert_eq!(d22, &want);
        assert!(block_decompose(&LinearMap::zero(5), &b).is_err());
    }

    #[test]
    fn json_form() {
        let m = sigma1();
        let text = serde_json::to_string(&m).unwrap();
        assert!(text.starts_with(r#"{"dim":6,"matrix":[["0","0""#));
        assert!(text.contains(r#""1/2""#));
        let back: LinearMap = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<LinearMap>(r#"{"dim":2,"matrix":[["1"]]}"#).is_err());
    }

    #[test]
    fn coords_round_trip() {
        let s1 = build_schrodinger(1).unwrap();
        let m = s1.ad_basis(4);
        assert_eq!(LinearMap::from_coords(6, m.to_coords()).unwrap(), m);
    }
}
