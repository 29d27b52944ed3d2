//! Dense and sparse linear algebra over a [`Field`].
//!
//! Everything here is exact when instantiated with [`Rational`]. The
//! semidefiniteness decision follows the characteristic polynomial: a real
//! symmetric matrix is PSD iff every elementary symmetric function of its
//! eigenvalues (the sum of its principal `i×i` minors) is non-negative. A
//! congruence-based elimination independently produces a witness vector.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{rationalize, Field, Rational};

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for r in 0..self.rows {
            list.entry(&&self.data[r * self.cols..(r + 1) * self.cols]);
        }
        list.finish()
    }
}

impl<S: Field> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let t = out[(i, j)].clone() + a.clone() * b.clone();
                        out[(i, j)] = t;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// `vᵀ M v`.
    pub fn quadratic_form(&self, v: &[S]) -> S {
        self.mul_vec(v).into_iter().zip(v).fold(S::zero(), |acc, (a, b)| acc + a * b.clone())
    }

    /// Submatrix with the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn map<T: Field>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Row echelon form by Gaussian elimination; returns the pivot columns.
    fn echelon_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv();
            for i in r + 1..self.rows {
                if self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone() * inv.clone();
                for j in c..self.cols {
                    let t = self[(i, j)].clone() - f.clone() * self[(r, j)].clone();
                    self[(i, j)] = t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().echelon_in_place().len()
    }

    pub fn determinant(&self) -> S {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = S::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return S::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = det * piv.clone();
            let inv = piv.inv();
            for i in c + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() * inv.clone();
                for j in c..m.cols {
                    let t = m[(i, j)].clone() - f.clone() * m[(c, j)].clone();
                    m[(i, j)] = t;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                S::one()
            } else {
                S::zero()
            }
        });
        for c in 0..n {
            let p = (c..n).find(|&i| !aug[(i, c)].is_zero()).ok_or(Error::SingularMatrix)?;
            aug.swap_rows(c, p);
            let inv = aug[(c, c)].inv();
            for j in 0..2 * n {
                let t = aug[(c, j)].clone() * inv.clone();
                aug[(c, j)] = t;
            }
            for i in 0..n {
                if i == c || aug[(i, c)].is_zero() {
                    continue;
                }
                let f = aug[(i, c)].clone();
                for j in 0..2 * n {
                    let t = aug[(i, j)].clone() - f.clone() * aug[(c, j)].clone();
                    aug[(i, j)] = t;
                }
            }
        }
        Ok(Matrix::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
    }

    /// Coefficients `c_0..c_n` of `det(t·I − M) = Σ c_i t^i`, via reduction to
    /// upper Hessenberg form.
    pub fn char_poly(&self) -> Vec<S> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut h = self.clone();
        // Similarity reduction to upper Hessenberg form.
        for c in 0..n.saturating_sub(2) {
            let Some(p) = (c + 1..n).find(|&i| !h[(i, c)].is_zero()) else {
                continue;
            };
            if p != c + 1 {
                h.swap_rows(p, c + 1);
                for i in 0..n {
                    h.data.swap(i * n + p, i * n + c + 1);
                }
            }
            let inv = h[(c + 1, c)].inv();
            for i in c + 2..n {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let f = h[(i, c)].clone() * inv.clone();
                for j in 0..n {
                    let t = h[(i, j)].clone() - f.clone() * h[(c + 1, j)].clone();
                    h[(i, j)] = t;
                }
                for j in 0..n {
                    let t = h[(j, c + 1)].clone() + f.clone() * h[(j, i)].clone();
                    h[(j, c + 1)] = t;
                }
            }
        }
        // p[m] = char poly of the leading m×m block.
        let mut polys: Vec<Vec<S>> = vec![vec![S::one()]];
        for m in 1..=n {
            let mm = m - 1;
            let prev = &polys[m - 1];
            let mut next = vec![S::zero(); m + 1];
            for (i, c) in prev.iter().enumerate() {
                next[i + 1] = next[i + 1].clone() + c.clone();
                next[i] = next[i].clone() - c.clone() * h[(mm, mm)].clone();
            }
            let mut prod = S::one();
            for i in (0..mm).rev() {
                prod = prod * h[(i + 1, i)].clone();
                if prod.is_zero() {
                    break;
                }
                let coef = h[(i, mm)].clone() * prod.clone();
                if coef.is_zero() {
                    continue;
                }
                for (d, c) in polys[i].iter().enumerate() {
                    next[d] = next[d].clone() - coef.clone() * c.clone();
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

/// Matrix of `k×k` minors, rows and columns indexed by `k`-subsets in
/// lexicographic order.
pub fn compound_matrix<S: Field>(m: &Matrix<S>, k: usize) -> Matrix<S> {
    let rs = subsets(m.rows(), k);
    let cs = subsets(m.cols(), k);
    Matrix::from_fn(rs.len(), cs.len(), |i, j| m.select(&rs[i], &cs[j]).determinant())
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Square matrix with exactly symmetric entries.
#[derive(Clone, PartialEq)]
pub struct SymMatrix<S>(Matrix<S>);

impl<S: fmt::Debug> fmt::Debug for SymMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<S: Field> SymMatrix<S> {
    pub fn new(m: Matrix<S>) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::NotSymmetric);
        }
        for i in 0..m.rows() {
            for j in i + 1..m.cols() {
                if m[(i, j)] != m[(j, i)] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(SymMatrix(m))
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        Self::new(Matrix::from_rows(rows))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix<S> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    /// Elementary symmetric functions `e_0..e_n` of the eigenvalues, i.e.
    /// sums of principal minors; `e_0 = 1`.
    pub fn principal_minor_sums(&self) -> Vec<S> {
        let cp = self.0.char_poly();
        let n = self.dim();
        (0..=n)
            .map(|i| {
                let c = cp[n - i].clone();
                if i % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect()
    }

    /// Numbers of positive, negative and zero eigenvalues (exact for exact
    /// scalars): the characteristic polynomial of a symmetric matrix is
    /// real-rooted, so Descartes' rule of signs counts roots exactly.
    pub fn inertia(&self) -> Inertia {
        let cp = self.0.char_poly();
        let zero = cp.iter().take_while(|c| c.is_zero()).count();
        let changes = |coeffs: &mut dyn Iterator<Item = S>| {
            let mut last: Option<bool> = None;
            let mut count = 0;
            for c in coeffs {
                if c.is_zero() {
                    continue;
                }
                let pos = c.is_positive();
                if last.is_some_and(|l| l != pos) {
                    count += 1;
                }
                last = Some(pos);
            }
            count
        };
        let positive = changes(&mut cp.iter().cloned());
        let negative = changes(&mut cp.iter().enumerate().map(|(i, c)| {
            if i % 2 == 1 {
                -c.clone()
            } else {
                c.clone()
            }
        }));
        Inertia { positive, negative, zero }
    }

    /// Symmetric elimination by congruence. Returns `None` if the matrix is
    /// PSD, otherwise a vector `v` with `vᵀMv < 0`. `negligible` decides zero
    /// tests (exact zero for exact scalars).
    pub fn negative_direction(&self, negligible: impl Fn(&S) -> bool) -> Option<Vec<S>> {
        let n = self.dim();
        let mut a = self.0.clone();
        let mut active: Vec<usize> = (0..n).collect();
        // Each elimination step records (pivot, coefficients used to lift).
        let mut steps: Vec<(usize, Vec<(usize, S)>)> = Vec::new();
        let lift = |mut v: Vec<S>, steps: &[(usize, Vec<(usize, S)>)]| {
            for (p, coeffs) in steps.iter().rev() {
                let mut s = S::zero();
                for (j, c) in coeffs {
                    s = s + c.clone() * v[*j].clone();
                }
                v[*p] = -s;
            }
            v
        };
        loop {
            if let Some(&i) = active.iter().find(|&&i| !negligible(&a[(i, i)]) && a[(i, i)].is_negative()) {
                let mut v = vec![S::zero(); n];
                v[i] = S::one();
                return Some(lift(v, &steps));
            }
            if let Some(&p) = active.iter().find(|&&i| !negligible(&a[(i, i)])) {
                let piv = a[(p, p)].clone();
                let rest: Vec<usize> = active.iter().copied().filter(|&i| i != p).collect();
                let coeffs: Vec<(usize, S)> = rest
                    .iter()
                    .filter(|&&j| !a[(p, j)].is_zero())
                    .map(|&j| (j, a[(p, j)].clone() / piv.clone()))
                    .collect();
                for &(i, ref ci) in &coeffs {
                    for &(j, _) in &coeffs {
                        let t = a[(i, j)].clone() - ci.clone() * a[(p, j)].clone();
                        a[(i, j)] = t;
                    }
                }
                steps.push((p, coeffs));
                active = rest;
                continue;
            }
            // All remaining diagonal entries vanish; any off-diagonal entry
            // yields an indefinite 2×2 principal block.
            for (x, &i) in active.iter().enumerate() {
                for &j in &active[x + 1..] {
                    let m_ij = a[(i, j)].clone();
                    if negligible(&m_ij) {
                        continue;
                    }
                    let m_jj = a[(j, j)].clone().abs();
                    let two = S::one() + S::one();
                    let mag = m_jj / (two * m_ij.abs()) + S::one();
                    let t = if m_ij.is_positive() { -mag } else { mag };
                    let mut v = vec![S::zero(); n];
                    v[i] = t;
                    v[j] = S::one();
                    return Some(lift(v, &steps));
                }
            }
            return None;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn scaled(self, mult: usize) -> Self {
        Inertia { positive: self.positive * mult, negative: self.negative * mult, zero: self.zero * mult }
    }

    pub fn plus(self, other: Self) -> Self {
        Inertia {
            positive: self.positive + other.positive,
            negative: self.negative + other.negative,
            zero: self.zero + other.zero,
        }
    }
}

/// Evidence that a symmetric matrix is not PSD.
#[derive(Clone, Debug, PartialEq)]
pub struct PsdWitness<S> {
    /// `v` with `vᵀMv < 0`.
    pub vector: Vec<S>,
    /// `vᵀMv`.
    pub value: S,
    /// First index `i` with negative principal-minor sum `e_i`, when known.
    pub minor_sum: Option<(usize, S)>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum PsdVerdict<S> {
    Psd,
    NotPsd(PsdWitness<S>),
}

impl<S> PsdVerdict<S> {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdVerdict::Psd)
    }
}

/// Above this dimension a floating-point pre-pass looks for a negative
/// direction before the exact characteristic polynomial is computed.
pub const EXACT_CHARPOLY_MAX_DIM: usize = 24;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Exact PSD decision for a rational symmetric matrix.
pub fn is_psd_exact(m: &SymMatrix<Rational>) -> PsdVerdict<Rational> {
    is_psd_with_tolerance(m, DEFAULT_TOLERANCE)
}

/// Exact PSD decision; `tolerance` only steers the floating-point pre-pass
/// used for large matrices, never the verdict.
pub fn is_psd_with_tolerance(m: &SymMatrix<Rational>, tolerance: f64) -> PsdVerdict<Rational> {
    if m.dim() > EXACT_CHARPOLY_MAX_DIM {
        if let Some(w) = float_prepass(m, tolerance) {
            return PsdVerdict::NotPsd(w);
        }
    }
    let sums = m.principal_minor_sums();
    let first_negative = sums.iter().enumerate().find(|(_, s)| s.is_negative()).map(|(i, s)| (i, s.clone()));
    match first_negative {
        None => PsdVerdict::Psd,
        Some(minor) => {
            let v = m
                .negative_direction(Zero::is_zero)
                .expect("negative principal-minor sum but congruence found no negative direction");
            let value = m.matrix().quadratic_form(&v);
            debug_assert!(value.is_negative());
            PsdVerdict::NotPsd(PsdWitness { vector: v, value, minor_sum: Some(minor) })
        }
    }
}

/// Float elimination; a candidate direction is rationalized and confirmed
/// exactly before it is returned.
fn float_prepass(m: &SymMatrix<Rational>, tolerance: f64) -> Option<PsdWitness<Rational>> {
    let scale = m.matrix().data.iter().map(|x| Field::to_f64(x).abs()).fold(0.0, f64::max).max(1.0);
    let mf = SymMatrix(m.matrix().map(|x| Field::to_f64(x) / scale));
    let v = mf.negative_direction(|x| x.abs() <= tolerance)?;
    let vmax = v.iter().map(|x| x.abs()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    let vr: Vec<Rational> = v.iter().map(|x| rationalize(x / vmax, 1 << 20)).collect();
    let value = m.matrix().quadratic_form(&vr);
    value.is_negative().then_some(PsdWitness { vector: vr, value, minor_sum: None })
}

/// Incrementally maintained echelon basis of sparse row vectors. Each row's
/// pivot is its highest non-zero column, so reducing a vector leaves it
/// supported on the non-pivot columns.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon<S> {
    rows: BTreeMap<usize, BTreeMap<usize, S>>,
}

impl<S: Field> SparseEchelon<S> {
    pub fn new() -> Self {
        SparseEchelon { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Reduces `v` modulo the span; the result vanishes on every pivot.
    pub fn reduce(&self, mut v: BTreeMap<usize, S>) -> BTreeMap<usize, S> {
        let mut cursor = usize::MAX;
        loop {
            let next = v.range(..=cursor).rev().find(|(c, _)| self.rows.contains_key(c)).map(|(c, x)| (*c, x.clone()));
            let Some((c, x)) = next else { break };
            let row = &self.rows[&c];
            let f = x / row[&c].clone();
            for (j, r) in row {
                let e = v.remove(j).unwrap_or_else(S::zero) - f.clone() * r.clone();
                if !e.is_zero() {
                    v.insert(*j, e);
                }
            }
            if c == 0 {
                break;
            }
            cursor = c - 1;
        }
        v
    }

    /// Adds `v` to the span; returns `true` if the rank grew.
    pub fn insert(&mut self, v: BTreeMap<usize, S>) -> bool {
        let r = self.reduce(v);
        match r.keys().next_back().copied() {
            None => false,
            Some(p) => {
                let lead = r[&p].clone();
                let normalized = r.into_iter().map(|(j, x)| (j, x / lead.clone())).collect();
                self.rows.insert(p, normalized);
                true
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use proptest::prelude::*;

    fn sym(rows: Vec<Vec<i64>>) -> SymMatrix<Rational> {
        SymMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect()).unwrap()
    }

    #[test]
    fn psd_examples() {
        assert!(is_psd_exact(&sym(vec![vec![1, 0], vec![0, 0]])).is_psd());
        match is_psd_exact(&sym(vec![vec![0, -1], vec![-1, 0]])) {
            PsdVerdict::NotPsd(w) => {
                assert_eq!(w.vector, vec![int(1), int(1)]);
                assert_eq!(w.value, int(-2));
            }
            PsdVerdict::Psd => panic!("indefinite matrix reported PSD"),
        }
        let m = sym(vec![vec![1, 0, 1], vec![0, 3, 0], vec![1, 0, 1]]);
        assert!(is_psd_exact(&m).is_psd());
        assert_eq!(m.inertia(), Inertia { positive: 2, negative: 0, zero: 1 });
    }

    #[test]
    fn char_poly_of_known_matrix() {
        // eigenvalues 0, 2, 3 -> t^3 - 5t^2 + 6t
        let m = sym(vec![vec![1, 0, 1], vec![0, 3, 0], vec![1, 0, 1]]);
        assert_eq!(m.matrix().char_poly(), vec![int(0), int(6), int(-5), int(1)]);
        let full = Matrix::from_rows(vec![vec![int(2), int(1), int(0)], vec![int(7), int(-1), int(4)], vec![int(3), int(5), int(6)]]);
        let cp = full.char_poly();
        assert_eq!(cp[0], -full.determinant());
        assert_eq!(cp[2], int(-7));
    }

    #[test]
    fn rank_det_inverse() {
        let m = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.determinant(), int(0));
        assert!(m.inverse().is_err());
        let g = Matrix::from_rows(vec![vec![int(2), int(1)], vec![int(1), int(1)]]);
        assert_eq!(g.mul(&g.inverse().unwrap()), Matrix::identity(2));
    }

    #[test]
    fn compound_matrix_is_multiplicative() {
        let a = Matrix::from_rows(vec![
            vec![int(1), int(2), int(0)],
            vec![int(0), int(1), int(3)],
            vec![rat(1, 2), int(0), int(1)],
        ]);
        let b = Matrix::from_rows(vec![
            vec![int(2), int(0), int(1)],
            vec![int(1), int(1), int(0)],
            vec![int(0), int(-1), int(1)],
        ]);
        let lhs = compound_matrix(&a.mul(&b), 2);
        let rhs = compound_matrix(&a, 2).mul(&compound_matrix(&b, 2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn sparse_echelon_reduction() {
        let mut e = SparseEchelon::<Rational>::new();
        let v = |pairs: &[(usize, i64)]| pairs.iter().map(|&(c, x)| (c, int(x))).collect::<BTreeMap<_, _>>();
        assert!(e.insert(v(&[(0, 1), (2, 1)])));
        assert!(e.insert(v(&[(1, 1), (2, 2)])));
        assert!(!e.insert(v(&[(0, 2), (1, 1), (2, 4)])));
        assert_eq!(e.pivots().collect::<Vec<_>>(), vec![1, 2]);
        let r = e.reduce(v(&[(2, 1)]));
        assert!(r.keys().all(|c| !e.is_pivot(*c)));
    }

    #[test]
    fn float_prepass_confirms_exactly() {
        let n = 30;
        let m = Matrix::from_fn(n, n, |i, j| if i == j { int(if i == 17 { -1 } else { 2 }) } else { Rational::zero() });
        let m = SymMatrix::new(m).unwrap();
        match is_psd_exact(&m) {
            PsdVerdict::NotPsd(w) => {
                assert!(w.value.is_negative());
                assert!(w.minor_sum.is_none());
            }
            PsdVerdict::Psd => panic!(),
        }
        let id = SymMatrix::new(Matrix::<Rational>::identity(n)).unwrap();
        assert!(is_psd_exact(&id).is_psd());
    }

    fn small_sym() -> impl Strategy<Value = SymMatrix<Rational>> {
        (1usize..6).prop_flat_map(|n| {
            proptest::collection::vec(-3i64..4, n * (n + 1) / 2).prop_map(move |vals| {
                let mut m = Matrix::zeros(n, n);
                let mut it = vals.into_iter();
                for i in 0..n {
                    for j in i..n {
                        let x = int(it.next().unwrap());
                        m[(i, j)] = x.clone();
                        m[(j, i)] = x;
                    }
                }
                SymMatrix::new(m).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn charpoly_and_congruence_routes_agree(m in small_sym()) {
            let by_minors = m.principal_minor_sums().iter().all(|s| !s.is_negative());
            let direction = m.negative_direction(Zero::is_zero);
            prop_assert_eq!(by_minors, direction.is_none());
            if let Some(v) = direction {
                prop_assert!(m.matrix().quadratic_form(&v).is_negative());
            }
            let inertia = m.inertia();
            prop_assert_eq!(inertia.positive + inertia.negative, m.rank());
            prop_assert_eq!(inertia.negative == 0, by_minors);
        }

        #[test]
        fn gram_matrices_are_psd(vals in proptest::collection::vec(-4i64..5, 6)) {
            let b = Matrix::from_fn(3, 2, |i, j| int(vals[2 * i + j]));
            let g = SymMatrix::new(b.mul(&b.transpose())).unwrap();
            prop_assert!(is_psd_exact(&g).is_psd());
        }
    }
}
