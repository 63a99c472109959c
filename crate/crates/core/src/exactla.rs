//! Dense exact linear algebra over the rationals.
//!
//! Matrices are dense, but the elimination engine ([`Echelon`]) keeps its
//! pivot rows sparse: the Leibniz systems built by `dercalc` have a handful
//! of nonzeros per row and several thousand rows, and skipping zeros is what
//! keeps those kernels cheap.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};
use crate::scalar::Scalar;

/// Row-major dense matrix of scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds a matrix from its rows. All rows must share one length; an
    /// empty row list gives a `0 × cols` matrix.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            check_len(cols, r.len())?;
            data.extend(r);
        }
        Ok(Mat {
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| Scalar::from_int(x))
            })
            .collect();
        Mat {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        check_len(self.cols, v.len())?;
        Ok(self.row_iter().map(|row| dot(row, v)).collect())
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        check_len(self.cols, other.rows)?;
        let mut out = Mat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, k: &Scalar) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    fn zip_with(&self, other: &Mat, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Mat> {
        check_len(self.rows, other.rows)?;
        check_len(self.cols, other.cols)?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        check_len(self.cols, other.cols)?;
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Sub-matrix over the half-open row and column ranges.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Mat {
        let mut out = Mat::zeros(rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.cols);
        for row in self.row_iter() {
            ech.insert(row.to_vec());
        }
        ech.rank()
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for row in self.row_iter() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Mat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[Scalar]> = self.row_iter().collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<Scalar>> = Vec::deserialize(d)?;
        let cols = rows.first().map_or(0, Vec::len);
        Mat::from_rows(cols, rows).map_err(serde::de::Error::custom)
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

type SparseRow = Vec<(usize, Scalar)>;

/// Incrementally maintained reduced row echelon form.
///
/// Every stored row has a leading 1 in its pivot column, and every pivot
/// column is zero in all other stored rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
            pivot_row: vec![None; cols],
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|&c| self.pivot_row[c].is_some())
            .collect()
    }

    /// Reduces `v` against the stored rows in place; the result is zero iff
    /// `v` lies in the row space.
    pub fn reduce(&self, v: &mut [Scalar]) {
        debug_assert_eq!(v.len(), self.cols);
        for c in 0..self.cols {
            if v[c].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let f = v[c].clone();
                for (j, x) in &self.rows[r] {
                    v[*j] -= &(&f * x);
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Adds a row; returns `true` if it raised the rank.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.cols, "row length mismatch in Echelon::insert");
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        let new_row: SparseRow = v
            .into_iter()
            .enumerate()
            .skip(p)
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x * &inv))
            .collect();
        for row in &mut self.rows {
            if let Ok(k) = row.binary_search_by_key(&p, |(j, _)| *j) {
                let f = row[k].1.clone();
                *row = axpy_sparse(row, &f, &new_row);
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(new_row);
        true
    }

    /// Stored rows sorted by pivot column, as a dense matrix.
    pub fn to_mat(&self) -> Mat {
        let mut m = Mat::zeros(self.rank(), self.cols);
        for (i, c) in self.pivots().into_iter().enumerate() {
            let r = self.pivot_row[c].expect("pivot column");
            for (j, x) in &self.rows[r] {
                m.set(i, *j, x.clone());
            }
        }
        m
    }

    /// Basis of the null space of the stored rows, in canonical form.
    pub fn null_space(&self) -> Subspace {
        let mut ker = Echelon::new(self.cols);
        for f in 0..self.cols {
            if self.pivot_row[f].is_some() {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (c, slot) in self.pivot_row.iter().enumerate() {
                if let Some(r) = slot {
                    if let Ok(k) = self.rows[*r].binary_search_by_key(&f, |(j, _)| *j) {
                        v[c] = -&self.rows[*r][k].1;
                    }
                }
            }
            ker.insert(v);
        }
        ker.into_subspace()
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace {
            ambient_dim: self.cols,
            basis: self.to_mat(),
        }
    }
}

/// `a - f * b` for sparse rows sorted by column.
fn axpy_sparse(a: &SparseRow, f: &Scalar, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0);
        let cb = b.get(j).map(|e| e.0);
        match (ca, cb) {
            (Some(x), Some(y)) if x == y => {
                let v = &a[i].1 - &(f * &b[j].1);
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, -(f * &b[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// A linear subspace of `Q^ambient_dim`, stored as the reduced row echelon
/// basis. Two subspaces are equal iff their representations are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Mat,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Mat::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Mat::identity(ambient_dim),
        }
    }

    /// Span of the given vectors.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut ech = Echelon::new(ambient_dim);
        for v in vectors {
            check_len(ambient_dim, v.len())?;
            ech.insert(v);
        }
        Ok(ech.into_subspace())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = Vec<Scalar>> + '_ {
        self.basis.row_iter().map(<[Scalar]>::to_vec)
    }

    fn echelon(&self) -> Echelon {
        let mut ech = Echelon::new(self.ambient_dim);
        for row in self.basis.row_iter() {
            ech.insert(row.to_vec());
        }
        ech
    }

    fn pivots(&self) -> Vec<usize> {
        self.basis
            .row_iter()
            .map(|r| {
                r.iter()
                    .position(|x| !x.is_zero())
                    .expect("nonzero basis row")
            })
            .collect()
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        check_len(self.ambient_dim, v.len())?;
        Ok(self.coordinates(v).is_some())
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let pivots = self.pivots();
        let coords: Vec<Scalar> = pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (row, c) in self.basis.row_iter().zip(&coords) {
            if c.is_zero() {
                continue;
            }
            for (x, b) in rest.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &(c * b);
                }
            }
        }
        rest.iter().all(Scalar::is_zero).then_some(coords)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        check_len(other.ambient_dim, self.ambient_dim)?;
        let ech = other.echelon();
        Ok(self.basis.row_iter().all(|r| ech.contains(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_len(self.ambient_dim, other.ambient_dim)?;
        Subspace::span(
            self.ambient_dim,
            self.basis_vectors().chain(other.basis_vectors()),
        )
    }

    /// Vectors orthogonal (under the coordinate dot product) to the subspace.
    pub fn annihilator(&self) -> Subspace {
        self.echelon().null_space()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        intersect(self, other)
    }
}

/// Reduced row echelon form; zero rows are kept at the bottom so the shape
/// of `m` is preserved.
pub fn rref(m: &Mat) -> Mat {
    let mut ech = Echelon::new(m.cols());
    for row in m.row_iter() {
        ech.insert(row.to_vec());
    }
    let reduced = ech.to_mat();
    let mut out = Mat::zeros(m.rows(), m.cols());
    for r in 0..reduced.rows() {
        for c in 0..reduced.cols() {
            out.set(r, c, reduced.get(r, c).clone());
        }
    }
    out
}

/// `{v : m v = 0}`.
pub fn kernel(m: &Mat) -> Subspace {
    let mut ech = Echelon::new(m.cols());
    for row in m.row_iter() {
        ech.insert(row.to_vec());
    }
    ech.null_space()
}

/// Column space of `m`.
pub fn image(m: &Mat) -> Subspace {
    let t = m.transpose();
    let mut ech = Echelon::new(m.rows());
    for row in t.row_iter() {
        ech.insert(row.to_vec());
    }
    ech.into_subspace()
}

pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim,
            found: b.ambient_dim,
        });
    }
    // a ∩ b = ann(ann(a) + ann(b))
    let mut ech = Echelon::new(a.ambient_dim);
    for v in a
        .annihilator()
        .basis_vectors()
        .chain(b.annihilator().basis_vectors())
    {
        ech.insert(v);
    }
    Ok(ech.null_space())
}

pub fn contains(s: &Subspace, v: &[Scalar]) -> Result<bool> {
    s.contains(v)
}

/// A solution of `m x = v`, with every free variable set to zero, or `None`
/// if the system is inconsistent.
pub fn solve(m: &Mat, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    check_len(m.rows(), v.len())?;
    let n = m.cols();
    let mut ech = Echelon::new(n + 1);
    for (row, rhs) in m.row_iter().zip(v) {
        let mut aug = row.to_vec();
        aug.push(rhs.clone());
        ech.insert(aug);
    }
    let reduced = ech.to_mat();
    let mut x = vec![Scalar::zero(); n];
    for row in reduced.row_iter() {
        let p = row.iter().position(|e| !e.is_zero()).expect("nonzero row");
        if p == n {
            return Ok(None);
        }
        x[p] = row[n].clone();
    }
    Ok(Some(x))
}
