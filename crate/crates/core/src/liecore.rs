//! Lie algebras given by structure constants, and constructors for
//! `sl_2`, `so_n`, the Heisenberg algebras and the Schrödinger algebras.

use std::collections::{BTreeMap, HashSet};
use std::ops::Range;

use crate::error::{check_len, Error, Result};
use crate::exactla::{Echelon, Subspace};
use crate::scalar::Scalar;
use crate::LinearMap;

/// Sparse linear combination of basis vectors: `(index, coefficient)`.
pub type Terms = Vec<(usize, Scalar)>;

/// A finite-dimensional Lie algebra over Q in a fixed basis.
///
/// Only `[b_i, b_j]` with `i < j` is stored; the rest follows from
/// antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    sc: BTreeMap<(usize, usize), Terms>,
    // dense (i, j) -> [b_i, b_j] lookup, both orders
    table: Vec<Terms>,
}

impl LieAlgebra {
    /// Builds an algebra from its upper-triangular brackets.
    ///
    /// Each entry `(i, j, terms)` must have `i < j`; repeated target indices
    /// within one entry are summed and zero coefficients dropped. Does not run
    /// the Jacobi check.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        brackets: Vec<(usize, usize, Terms)>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidAlgebra(format!("duplicate label {l:?}")));
            }
        }
        let mut sc = BTreeMap::new();
        for (i, j, terms) in brackets {
            if i >= j {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket ({i}, {j}) must satisfy i < j"
                )));
            }
            if j >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket index {j} out of range for dimension {dim}"
                )));
            }
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, c) in terms {
                if k >= dim {
                    return Err(Error::InvalidAlgebra(format!(
                        "bracket ({i}, {j}) targets index {k} out of range"
                    )));
                }
                *acc.entry(k).or_insert_with(Scalar::zero) += &c;
            }
            let terms: Terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if sc.insert((i, j), terms).is_some() {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket ({i}, {j}) given twice"
                )));
            }
        }
        sc.retain(|_, t: &mut Terms| !t.is_empty());

        let mut table = vec![Vec::new(); dim * dim];
        for (&(i, j), terms) in &sc {
            table[i * dim + j] = terms.clone();
            table[j * dim + i] = terms.iter().map(|(k, c)| (*k, -c)).collect();
        }
        Ok(LieAlgebra {
            name: name.into(),
            labels,
            sc,
            table,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Nonzero brackets `[b_i, b_j]`, `i < j`, in lexicographic order.
    pub fn structure_constants(&self) -> impl Iterator<Item = (usize, usize, &Terms)> {
        self.sc.iter().map(|(&(i, j), t)| (i, j, t))
    }

    /// `[b_i, b_j]` as sparse terms.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![Scalar::zero(); self.dim()]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.dim();
        check_len(n, x.len())?;
        check_len(n, y.len())?;
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let terms = self.bracket_basis(i, j);
                if terms.is_empty() {
                    continue;
                }
                let w = xi * yj;
                for (k, c) in terms {
                    out[*k] += &(&w * c);
                }
            }
        }
        Ok(out)
    }

    /// The map `x ↦ [y, x]`.
    pub fn ad(&self, y: &[Scalar]) -> Result<LinearMap> {
        let n = self.dim();
        check_len(n, y.len())?;
        let mut m = LinearMap::zero(n);
        for (i, yi) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for c in 0..n {
                for (k, s) in self.bracket_basis(i, c) {
                    m.add_entry(*k, c, &(yi * s));
                }
            }
        }
        Ok(m)
    }

    pub fn ad_basis(&self, i: usize) -> LinearMap {
        self.ad(&self.basis_vector(i))
            .expect("basis vector has algebra dimension")
    }

    /// Basis triples `i < j < k` whose cyclic Jacobi sum is nonzero.
    pub fn jacobi_check(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut acc = self.zero_vector();
                    self.accumulate_double(&mut acc, i, j, k);
                    self.accumulate_double(&mut acc, j, k, i);
                    self.accumulate_double(&mut acc, k, i, j);
                    if acc.iter().any(|x| !x.is_zero()) {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    // acc += [[b_a, b_b], b_c]
    fn accumulate_double(&self, acc: &mut [Scalar], a: usize, b: usize, c: usize) {
        for (m, s) in self.bracket_basis(a, b) {
            for (k, t) in self.bracket_basis(*m, c) {
                acc[*k] += &(s * t);
            }
        }
    }

    /// `{x : [x, b_i] = 0 for all i}`.
    #[allow(clippy::needless_range_loop)]
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // row (j, k): sum_i x_i c_{ij}^k = 0
        let mut rows = vec![vec![Scalar::zero(); n]; n * n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.bracket_basis(i, j) {
                    rows[j * n + k][i] += c;
                }
            }
        }
        let mut ech = Echelon::new(n);
        for r in rows {
            ech.insert(r);
        }
        ech.null_space()
    }
}

/// Accumulates brackets given in either order and emits them in `i < j` form.
#[derive(Default)]
struct BracketBuilder {
    entries: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>>,
}

impl BracketBuilder {
    fn add(&mut self, a: usize, b: usize, k: usize, c: Scalar) {
        if a == b || c.is_zero() {
            return;
        }
        let (key, c) = if a < b { ((a, b), c) } else { ((b, a), -c) };
        *self
            .entries
            .entry(key)
            .or_default()
            .entry(k)
            .or_insert_with(Scalar::zero) += &c;
    }

    fn add_int(&mut self, a: usize, b: usize, k: usize, c: i64) {
        self.add(a, b, k, Scalar::from_int(c));
    }

    fn finish(self) -> Vec<(usize, usize, Terms)> {
        self.entries
            .into_iter()
            .map(|((i, j), t)| (i, j, t.into_iter().collect()))
            .collect()
    }
}

fn so_label(k: usize, l: usize) -> String {
    if k < 10 && l < 10 {
        format!("s_{k}{l}")
    } else {
        format!("s_{k},{l}")
    }
}

/// Index and sign of `s_{k,l}` (1-based) inside the `so_n` block, using
/// `s_{lk} = -s_{kl}`. `None` for `k == l`.
fn so_index(n: usize, k: usize, l: usize) -> Option<(usize, i64)> {
    if k == l {
        return None;
    }
    let (a, b, sign) = if k < l { (k, l, 1) } else { (l, k, -1) };
    // pairs (1,2),(1,3),..,(1,n),(2,3),..
    let before: usize = (1..a).map(|r| n - r).sum();
    Some((before + (b - a - 1), sign))
}

fn so_brackets(n: usize, offset: usize, bb: &mut BracketBuilder) {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|k| (k + 1..=n).map(move |l| (k, l)))
        .collect();
    let delta = |a: usize, b: usize| a == b;
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            let (p, _) = so_index(n, i, j).unwrap();
            let (q, _) = so_index(n, k, l).unwrap();
            if p >= q {
                continue;
            }
            // [s_ij, s_kl] = δ_kj s_il + δ_il s_jk + δ_lj s_ki + δ_ki s_lj
            let terms = [
                (delta(k, j), (i, l)),
                (delta(i, l), (j, k)),
                (delta(l, j), (k, i)),
                (delta(k, i), (l, j)),
            ];
            for (on, (a, b)) in terms {
                if !on {
                    continue;
                }
                if let Some((idx, sign)) = so_index(n, a, b) {
                    bb.add_int(offset + p, offset + q, offset + idx, sign);
                }
            }
        }
    }
}

fn so_labels(n: usize) -> Vec<String> {
    (1..=n)
        .flat_map(|k| (k + 1..=n).map(move |l| so_label(k, l)))
        .collect()
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `sl_2` in the basis `e, f, h`.
pub fn build_sl2() -> LieAlgebra {
    let mut bb = BracketBuilder::default();
    let (e, f, h) = (0, 1, 2);
    bb.add_int(h, e, e, 2);
    bb.add_int(h, f, f, -2);
    bb.add_int(e, f, h, 1);
    LieAlgebra::new("sl2", vec!["e".into(), "f".into(), "h".into()], bb.finish())
        .expect("sl2 constants are well formed")
}

/// `so_n` in the basis `s_{kl}`, `k < l`, lexicographic. `so_1` is the zero
/// algebra.
pub fn build_so(n: usize) -> Result<LieAlgebra> {
    require_positive(n)?;
    let mut bb = BracketBuilder::default();
    so_brackets(n, 0, &mut bb);
    LieAlgebra::new(format!("so{n}"), so_labels(n), bb.finish())
}

/// Heisenberg algebra in the basis `z, u_1..u_n, v_1..v_n`.
pub fn build_heisenberg(n: usize) -> Result<LieAlgebra> {
    require_positive(n)?;
    let mut labels = vec!["z".to_string()];
    labels.extend((1..=n).map(|i| format!("u_{i}")));
    labels.extend((1..=n).map(|i| format!("v_{i}")));
    let mut bb = BracketBuilder::default();
    for i in 0..n {
        bb.add_int(1 + i, 1 + n + i, 0, 1);
    }
    LieAlgebra::new(format!("h{n}"), labels, bb.finish())
}

/// Abelian algebra of dimension `m` with basis `x_1..x_m`.
pub fn build_abelian(m: usize) -> LieAlgebra {
    let labels = (1..=m).map(|i| format!("x_{i}")).collect();
    LieAlgebra::new(format!("abelian{m}"), labels, Vec::new()).expect("no brackets")
}

/// Index layout of the Schrödinger algebra `s_n`:
/// `e, f, h, z, u_1..u_n, v_1..v_n, s_12, .., s_1n, s_23, .., s_(n-1)n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchrodingerBasis {
    n: usize,
}

impl SchrodingerBasis {
    pub fn new(n: usize) -> Result<Self> {
        require_positive(n)?;
        Ok(SchrodingerBasis { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        4 + 2 * self.n + self.n * (self.n - 1) / 2
    }

    pub fn e(&self) -> usize {
        0
    }
    pub fn f(&self) -> usize {
        1
    }
    pub fn h(&self) -> usize {
        2
    }
    pub fn z(&self) -> usize {
        3
    }

    /// `u_i`, 1-based.
    pub fn u(&self, i: usize) -> usize {
        assert!((1..=self.n).contains(&i), "u index out of range");
        3 + i
    }

    /// `v_i`, 1-based.
    pub fn v(&self, i: usize) -> usize {
        assert!((1..=self.n).contains(&i), "v index out of range");
        3 + self.n + i
    }

    /// Index and sign of `s_{kl}` (1-based, any order); `None` if `k == l`.
    pub fn s(&self, k: usize, l: usize) -> Option<(usize, i64)> {
        assert!(
            k >= 1 && l >= 1 && k <= self.n && l <= self.n,
            "s index out of range"
        );
        so_index(self.n, k, l).map(|(i, sign)| (4 + 2 * self.n + i, sign))
    }

    /// Pairs `(k, l)` with `k < l` in basis order.
    pub fn so_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (1..=n)
            .flat_map(|k| (k + 1..=n).map(move |l| (k, l)))
            .collect()
    }

    /// The partition `G1 = {e,f,h}`, `G2 = {z,u,v}`, `G3 = {s}`.
    pub fn groups(&self) -> [Range<usize>; 3] {
        let g2_end = 4 + 2 * self.n;
        [0..3, 3..g2_end, g2_end..self.dim()]
    }

    pub fn group_sizes(&self) -> [usize; 3] {
        self.groups().map(|r| r.len())
    }

    pub fn labels(&self) -> Vec<String> {
        let n = self.n;
        let mut labels: Vec<String> = ["e", "f", "h", "z"].iter().map(|s| s.to_string()).collect();
        labels.extend((1..=n).map(|i| format!("u_{i}")));
        labels.extend((1..=n).map(|i| format!("v_{i}")));
        labels.extend(so_labels(n));
        labels
    }

    /// Recognizes `s_n` in this exact basis order and bracket convention.
    pub fn detect(alg: &LieAlgebra) -> Option<Self> {
        let n = (1..=64).find(|&n| SchrodingerBasis { n }.dim() == alg.dim())?;
        let reference = build_schrodinger(n).ok()?;
        (reference.labels == alg.labels && reference.sc == alg.sc).then_some(SchrodingerBasis { n })
    }
}

/// The Schrödinger algebra `s_n = (sl_2 ⊕ so_n) ⋉ h_n`.
pub fn build_schrodinger(n: usize) -> Result<LieAlgebra> {
    let b = SchrodingerBasis::new(n)?;
    let mut bb = BracketBuilder::default();
    let (e, f, h, z) = (b.e(), b.f(), b.h(), b.z());

    bb.add_int(h, e, e, 2);
    bb.add_int(h, f, f, -2);
    bb.add_int(e, f, h, 1);
    for i in 1..=n {
        bb.add_int(b.u(i), b.v(i), z, 1);
        bb.add_int(h, b.u(i), b.u(i), 1);
        bb.add_int(h, b.v(i), b.v(i), -1);
        bb.add_int(e, b.v(i), b.u(i), 1);
        bb.add_int(f, b.u(i), b.v(i), 1);
    }
    // [s_kl, u_i] = δ_li u_k − δ_ki u_l, and likewise for v
    for (k, l) in b.so_pairs() {
        let (s, _) = b.s(k, l).unwrap();
        bb.add_int(s, b.u(l), b.u(k), 1);
        bb.add_int(s, b.u(k), b.u(l), -1);
        bb.add_int(s, b.v(l), b.v(k), 1);
        bb.add_int(s, b.v(k), b.v(l), -1);
    }
    so_brackets(n, 4 + 2 * n, &mut bb);

    LieAlgebra::new(format!("s{n}"), b.labels(), bb.finish())
}

/// Direct sum with block-diagonal brackets. Labels of `b` that collide with
/// labels of `a` get a `'` suffix.
pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
    let off = a.dim();
    let mut labels = a.labels.clone();
    for l in &b.labels {
        let mut l = l.clone();
        while labels.contains(&l) {
            l.push('\'');
        }
        labels.push(l);
    }
    let mut brackets: Vec<(usize, usize, Terms)> = a
        .structure_constants()
        .map(|(i, j, t)| (i, j, t.clone()))
        .collect();
    brackets.extend(b.structure_constants().map(|(i, j, t)| {
        (
            i + off,
            j + off,
            t.iter().map(|(k, c)| (k + off, c.clone())).collect(),
        )
    }));
    LieAlgebra::new(format!("{}+{}", a.name, b.name), labels, brackets)
        .expect("direct sum of valid algebras is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(alg: &LieAlgebra, label: &str) -> Vec<Scalar> {
        alg.basis_vector(alg.index_of(label).unwrap())
    }

    fn br(alg: &LieAlgebra, a: &str, b: &str) -> Vec<Scalar> {
        alg.bracket(&basis(alg, a), &basis(alg, b)).unwrap()
    }

    fn scaled(alg: &LieAlgebra, label: &str, c: i64) -> Vec<Scalar> {
        basis(alg, label)
            .iter()
            .map(|x| x * &Scalar::from_int(c))
            .collect()
    }

    #[test]
    fn schrodinger_relations() {
        let s3 = build_schrodinger(3).unwrap();
        assert_eq!(br(&s3, "h", "e"), scaled(&s3, "e", 2));
        assert_eq!(br(&s3, "h", "f"), scaled(&s3, "f", -2));
        assert_eq!(br(&s3, "e", "f"), basis(&s3, "h"));
        assert_eq!(br(&s3, "u_1", "v_1"), basis(&s3, "z"));
        assert_eq!(br(&s3, "v_1", "u_1"), scaled(&s3, "z", -1));
        assert_eq!(br(&s3, "e", "v_2"), basis(&s3, "u_2"));
        assert_eq!(br(&s3, "f", "u_3"), basis(&s3, "v_3"));
        assert_eq!(br(&s3, "s_12", "u_2"), basis(&s3, "u_1"));
        assert_eq!(br(&s3, "s_12", "u_1"), scaled(&s3, "u_2", -1));
        assert_eq!(br(&s3, "s_12", "u_3"), s3.zero_vector());
        assert_eq!(br(&s3, "s_12", "s_23"), basis(&s3, "s_13"));
        assert_eq!(br(&s3, "h", "h"), s3.zero_vector());
    }

    #[test]
    fn dimensions() {
        assert_eq!(build_schrodinger(1).unwrap().dim(), 6);
        assert_eq!(build_schrodinger(3).unwrap().dim(), 13);
        assert_eq!(build_so(4).unwrap().dim(), 6);
        assert_eq!(build_so(1).unwrap().dim(), 0);
        for n in 1..=6 {
            assert_eq!(
                build_schrodinger(n).unwrap().dim(),
                4 + 2 * n + n * (n - 1) / 2
            );
        }
        assert!(build_schrodinger(0).is_err());
        assert!(build_so(0).is_err());
        assert!(build_heisenberg(0).is_err());
    }

    #[test]
    fn ad_h_on_s1_is_diagonal() {
        let s1 = build_schrodinger(1).unwrap();
        let ad = s1.ad(&basis(&s1, "h")).unwrap();
        let expected = [2, -2, 0, 0, 1, -1];
        for (r, &d) in expected.iter().enumerate() {
            for c in 0..6 {
                let want = if r == c {
                    Scalar::from_int(d)
                } else {
                    Scalar::zero()
                };
                assert_eq!(ad.get(r, c), &want);
            }
        }
    }

    #[test]
    fn ad_of_center_and_zero() {
        let s3 = build_schrodinger(3).unwrap();
        assert!(s3.ad(&basis(&s3, "z")).unwrap().is_zero());
        assert!(s3.ad(&s3.zero_vector()).unwrap().is_zero());
        assert!(s3.ad(&[Scalar::one()]).is_err());
    }

    #[test]
    fn jacobi_holds_for_constructors() {
        for n in 1..=4 {
            assert!(build_schrodinger(n).unwrap().jacobi_check().is_empty());
            assert!(build_so(n).unwrap().jacobi_check().is_empty());
            assert!(build_heisenberg(n).unwrap().jacobi_check().is_empty());
        }
        assert!(build_sl2().jacobi_check().is_empty());
        assert!(build_abelian(4).jacobi_check().is_empty());
    }

    #[test]
    fn jacobi_cyclic_sum() {
        let abc = || vec!["a".to_string(), "b".to_string(), "c".to_string()];
        // [a,b] = c, [a,c] = 0, [b,c] = a: every double bracket in the cyclic
        // sum vanishes, so this one is a Lie algebra.
        let ok = LieAlgebra::new(
            "ok",
            abc(),
            vec![
                (0, 1, vec![(2, Scalar::one())]),
                (1, 2, vec![(0, Scalar::one())]),
            ],
        )
        .unwrap();
        assert!(ok.jacobi_check().is_empty());
        // [a,b] = c, [b,c] = b: [[b,c],a] = [b,a] = -c, the other two vanish.
        let bad = LieAlgebra::new(
            "bad",
            abc(),
            vec![
                (0, 1, vec![(2, Scalar::one())]),
                (1, 2, vec![(1, Scalar::one())]),
            ],
        )
        .unwrap();
        assert_eq!(bad.jacobi_check(), vec![(0, 1, 2)]);
    }

    #[test]
    fn center_examples() {
        for n in 1..=4 {
            let s = build_schrodinger(n).unwrap();
            let c = s.center();
            assert_eq!(c.dim(), 1);
            assert!(c.contains(&basis(&s, "z")).unwrap());
        }
        assert_eq!(build_abelian(3).center(), Subspace::full(3));
        assert_eq!(build_sl2().center().dim(), 0);
        let sl2 = build_sl2();
        assert_eq!(direct_sum(&sl2, &sl2).center().dim(), 0);
    }

    #[test]
    fn direct_sum_blocks() {
        let sl2 = build_sl2();
        let so3 = build_so(3).unwrap();
        let sum = direct_sum(&sl2, &so3);
        assert_eq!(sum.dim(), 6);
        for i in 0..3 {
            for j in 3..6 {
                assert!(sum.bracket_basis(i, j).is_empty());
            }
        }
        assert!(sum.jacobi_check().is_empty());
        let zero = build_so(1).unwrap();
        let same = direct_sum(&sl2, &zero);
        assert_eq!(same.labels(), sl2.labels());
        assert_eq!(
            same.structure_constants().count(),
            sl2.structure_constants().count()
        );
        let twice = direct_sum(&sl2, &sl2);
        assert_eq!(twice.labels()[3], "e'");
    }

    #[test]
    fn subalgebras_close() {
        let s4 = build_schrodinger(4).unwrap();
        let b = SchrodingerBasis::new(4).unwrap();
        let [g1, _, g3] = b.groups();
        for i in g1.clone() {
            for j in g1.clone() {
                assert!(s4.bracket_basis(i, j).iter().all(|(k, _)| g1.contains(k)));
            }
        }
        for i in g3.clone() {
            for j in g3.clone() {
                assert!(s4.bracket_basis(i, j).iter().all(|(k, _)| g3.contains(k)));
            }
        }
    }

    #[test]
    fn detect_schrodinger() {
        for n in 1..=4 {
            let s = build_schrodinger(n).unwrap();
            assert_eq!(SchrodingerBasis::detect(&s).map(|b| b.n()), Some(n));
        }
        assert!(SchrodingerBasis::detect(&build_abelian(6)).is_none());
    }

    #[test]
    fn rejects_malformed_input() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert!(LieAlgebra::new("x", labels.clone(), vec![(1, 0, vec![])]).is_err());
        assert!(LieAlgebra::new("x", labels.clone(), vec![(0, 2, vec![])]).is_err());
        assert!(
            LieAlgebra::new("x", labels.clone(), vec![(0, 1, vec![(5, Scalar::one())])]).is_err()
        );
        assert!(LieAlgebra::new("x", vec!["a".into(), "a".into()], vec![]).is_err());
        assert!(LieAlgebra::new("x", labels, vec![(0, 1, vec![]), (0, 1, vec![])]).is_err());
    }
}
