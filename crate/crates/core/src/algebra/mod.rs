//! The symmetric algebra on the divisor classes `θ_i`, `λ_jk` of `A^e`, the
//! `GL(W)` action on it, and (in [`quotient`]) its quotient by the relation
//! ideal.

mod quotient;

pub use quotient::{hodge_dimension, relation_generators, HodgeRing, QuotientSlice};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Field, Rational, Ring};

/// A degree-one generator. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorId {
    Theta(usize),
    Lambda(usize, usize),
}

/// Number of generators `e + e(e−1)/2` for `A^e`.
pub fn generator_count(e: usize) -> usize {
    e + e * (e.saturating_sub(1)) / 2
}

impl GeneratorId {
    pub fn validate(self, e: usize) -> Result<Self> {
        let ok = match self {
            GeneratorId::Theta(i) => (1..=e).contains(&i),
            GeneratorId::Lambda(j, k) => 1 <= j && j < k && k <= e,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidArgument(format!("{self:?} is not a generator for e = {e}")))
        }
    }

    /// Slot in the canonical layout: all `θ` ascending, then `λ_jk`
    /// lexicographically.
    pub fn slot(self, e: usize) -> usize {
        match self {
            GeneratorId::Theta(i) => i - 1,
            GeneratorId::Lambda(j, k) => {
                let (j0, k0) = (j - 1, k - 1);
                e + (0..j0).map(|r| e - 1 - r).sum::<usize>() + (k0 - j0 - 1)
            }
        }
    }

    pub fn from_slot(slot: usize, e: usize) -> Self {
        if slot < e {
            return GeneratorId::Theta(slot + 1);
        }
        let mut rest = slot - e;
        for j in 0..e {
            let row = e - 1 - j;
            if rest < row {
                return GeneratorId::Lambda(j + 1, j + 2 + rest);
            }
            rest -= row;
        }
        panic!("slot {slot} out of range for e = {e}");
    }

    pub fn all(e: usize) -> Vec<GeneratorId> {
        (0..generator_count(e)).map(|s| GeneratorId::from_slot(s, e)).collect()
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorId::Theta(i) => write!(f, "θ{i}"),
            GeneratorId::Lambda(j, k) => write!(f, "λ{j}{k}"),
        }
    }
}

/// Exponent vector over the canonical generator layout.
///
/// `Ord` is the canonical monomial order: by degree, then lexicographically
/// with larger exponents of earlier generators first (`θ1² < θ1θ2 < θ1λ12 <
/// θ2² < …`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(e: usize) -> Self {
        Monomial { exps: vec![0; generator_count(e)] }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn generator(g: GeneratorId, e: usize) -> Self {
        let mut m = Self::one(e);
        m.exps[g.slot(e)] = 1;
        m
    }

    /// For `e = 2`: `θ1^a θ2^b λ^c`.
    pub fn e2(a: u32, b: u32, c: u32) -> Self {
        Monomial { exps: vec![a, b, c] }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, g: GeneratorId, e: usize) -> u32 {
        self.exps[g.slot(e)]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.exps.len(), other.exps.len(), "monomials over different A^e");
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `(generator, exponent)` pairs with non-zero exponent.
    pub fn factors(&self, e: usize) -> impl Iterator<Item = (GeneratorId, u32)> + '_ {
        self.exps.iter().enumerate().filter(|(_, x)| **x > 0).map(move |(s, x)| (GeneratorId::from_slot(s, e), *x))
    }

    /// All monomials of degree `k` in `count` generators, in canonical order.
    pub fn all_of_degree(count: usize, k: u32) -> Vec<Monomial> {
        fn rec(slot: usize, count: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if slot + 1 == count {
                cur.push(left);
                out.push(Monomial { exps: cur.clone() });
                cur.pop();
                return;
            }
            for x in (0..=left).rev() {
                cur.push(x);
                rec(slot + 1, count, left - x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if count == 0 {
            if k == 0 {
                out.push(Monomial { exps: vec![] });
            }
            return out;
        }
        rec(0, count, k, &mut Vec::new(), &mut out);
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multidegree of a class in the Künneth decomposition of `H^•(A^e)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KunnethDegree(pub Vec<u32>);

impl KunnethDegree {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// `θ_i` contributes 2 at slot `i`; `λ_jk` contributes 1 at `j` and at `k`.
pub fn kunneth_degree(m: &Monomial, e: usize) -> KunnethDegree {
    let mut d = vec![0u32; e];
    for (g, x) in m.factors(e) {
        match g {
            GeneratorId::Theta(i) => d[i - 1] += 2 * x,
            GeneratorId::Lambda(j, k) => {
                d[j - 1] += x;
                d[k - 1] += x;
            }
        }
    }
    KunnethDegree(d)
}

/// Homogeneous polynomial in the generators of `A^e`; an element of
/// `Sym^k N¹(A^e)`. Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct ClassPoly<S> {
    e: usize,
    degree: u32,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Ring> ClassPoly<S> {
    pub fn zero(e: usize, degree: u32) -> Self {
        ClassPoly { e, degree, terms: BTreeMap::new() }
    }

    pub fn constant(e: usize, c: S) -> Self {
        Self::monomial(Monomial::one(e), c, e)
    }

    pub fn monomial(m: Monomial, c: S, e: usize) -> Self {
        assert_eq!(m.exps.len(), generator_count(e), "monomial layout does not match e = {e}");
        let degree = m.degree();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ClassPoly { e, degree, terms }
    }

    pub fn generator(g: GeneratorId, e: usize) -> Self {
        Self::monomial(Monomial::generator(g, e), S::one(), e)
    }

    pub fn theta(i: usize, e: usize) -> Self {
        Self::generator(GeneratorId::Theta(i), e)
    }

    pub fn lambda(j: usize, k: usize, e: usize) -> Self {
        Self::generator(GeneratorId::Lambda(j, k), e)
    }

    /// Builds a class from `(monomial, coefficient)` pairs; all monomials must
    /// share the degree `degree`.
    pub fn from_terms(e: usize, degree: u32, terms: impl IntoIterator<Item = (Monomial, S)>) -> Result<Self> {
        let mut p = Self::zero(e, degree);
        for (m, c) in terms {
            if m.exps.len() != generator_count(e) {
                return Err(Error::WrongAmbient { expected: e, reason: format!("monomial {m:?}") });
            }
            if m.degree() != degree {
                return Err(Error::InvalidArgument(format!(
                    "monomial of degree {} in a class of degree {degree}",
                    m.degree()
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// `Σ x_{l1,l2,l3} θ1^l1 θ2^l2 λ^l3` on `A × A`.
    pub fn from_e2(degree: u32, coeffs: impl IntoIterator<Item = ([u32; 3], S)>) -> Result<Self> {
        Self::from_terms(2, degree, coeffs.into_iter().map(|([a, b, c], x)| (Monomial::e2(a, b, c), x)))
    }

    fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// `x_{l1,l2,l3}` for a class on `A × A`.
    pub fn x(&self, l1: u32, l2: u32, l3: u32) -> S {
        debug_assert_eq!(self.e, 2);
        self.coefficient(&Monomial::e2(l1, l2, l3))
    }

    /// Coefficients in the canonical order of all monomials of this degree.
    pub fn coordinates(&self) -> Vec<S> {
        Monomial::all_of_degree(generator_count(self.e), self.degree).iter().map(|m| self.coefficient(m)).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other, true);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c.clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.e, self.degree);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone() * s.clone());
        }
        out
    }

    pub fn map_coeffs<T: Ring>(&self, f: impl Fn(&S) -> T) -> ClassPoly<T> {
        let mut out = ClassPoly::zero(self.e, self.degree);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Product in the symmetric algebra (no reduction modulo relations).
    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other, false);
        let mut out = Self::zero(self.e, self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.e, S::one());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitutes a degree-one class for every generator.
    pub fn substitute(&self, images: &[ClassPoly<S>]) -> Self {
        assert_eq!(images.len(), generator_count(self.e));
        let target_e = images.first().map_or(self.e, |p| p.e);
        let mut out = ClassPoly::zero(target_e, self.degree);
        let powers: Vec<Vec<ClassPoly<S>>> = images
            .iter()
            .enumerate()
            .map(|(s, img)| {
                let max = self.terms.keys().map(|m| m.exps[s]).max().unwrap_or(0);
                let mut v = vec![ClassPoly::constant(target_e, S::one())];
                for _ in 0..max {
                    let next = v.last().unwrap().mul(img);
                    v.push(next);
                }
                v
            })
            .collect();
        for (m, c) in &self.terms {
            let mut t = ClassPoly::constant(target_e, c.clone());
            for (s, &x) in m.exps.iter().enumerate() {
                if x > 0 {
                    t = t.mul(&powers[s][x as usize]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Pullback along the projection `A^e → A^l` onto the first `l` factors.
    pub fn pullback(&self, e: usize) -> Result<Self> {
        if e < self.e {
            return Err(Error::InvalidArgument(format!("cannot pull back from A^{} to A^{e}", self.e)));
        }
        let mut out = ClassPoly::zero(e, self.degree);
        for (m, c) in &self.terms {
            let mut exps = vec![0; generator_count(e)];
            for (g, x) in m.factors(self.e) {
                exps[g.slot(e)] = x;
            }
            out.add_term(Monomial { exps }, c.clone());
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &Self, same_degree: bool) {
        assert_eq!(self.e, other.e, "classes on different A^e");
        if same_degree {
            assert_eq!(self.degree, other.degree, "adding classes of different degree");
        }
    }
}

impl<S: Ring + fmt::Display> fmt::Display for ClassPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let mut coef = c.to_string();
            let plain = !coef[1..].contains(['+', '-', ' ']);
            if n > 0 {
                if plain && coef.starts_with('-') {
                    coef.remove(0);
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
            } else if plain && coef.starts_with('-') && coef != "-1" {
                coef.remove(0);
                write!(f, "-")?;
            }
            let mono: Vec<String> = m
                .factors(self.e)
                .map(|(g, x)| if x == 1 { g.to_string() } else { format!("{g}^{x}") })
                .collect();
            let mono = mono.join("·");
            match (mono.is_empty(), coef.as_str()) {
                (true, _) => write!(f, "{coef}")?,
                (false, "1") => write!(f, "{mono}")?,
                (false, "-1") => write!(f, "-{mono}")?,
                (false, _) if plain => write!(f, "{coef}·{mono}")?,
                (false, _) => write!(f, "({coef})·{mono}")?,
            }
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for ClassPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClassPoly")
            .field("e", &self.e)
            .field("degree", &self.degree)
            .field("terms", &self.terms.iter().map(|(m, c)| (&m.exps, c)).collect::<Vec<_>>())
            .finish()
    }
}

/// Element of `GL_e` acting on `W`, given by its matrix `ρ(g)` in the
/// standard basis.
#[derive(Clone, Debug, PartialEq)]
pub struct GLMatrix<S>(Matrix<S>);

impl<S: Field> GLMatrix<S> {
    pub fn new(m: Matrix<S>) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::InvalidArgument("GL matrix must be square".into()));
        }
        if m.determinant().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(GLMatrix(m))
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        Self::new(Matrix::from_rows(rows))
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.0
    }

    pub fn e(&self) -> usize {
        self.0.rows()
    }

    pub fn determinant(&self) -> S {
        self.0.determinant()
    }

    pub fn compose(&self, other: &Self) -> Self {
        GLMatrix(self.0.mul(&other.0))
    }

    /// `g·θ_i = Σ_j ρ_ji² θ_j + Σ_{j<k} ρ_ji ρ_ki λ_jk`.
    pub fn act_theta(&self, i: usize) -> ClassPoly<S> {
        let e = self.e();
        let r = &self.0;
        let c = i - 1;
        let mut out = ClassPoly::zero(e, 1);
        for j in 0..e {
            out.add_term(Monomial::generator(GeneratorId::Theta(j + 1), e), r[(j, c)].clone() * r[(j, c)].clone());
            for k in j + 1..e {
                out.add_term(
                    Monomial::generator(GeneratorId::Lambda(j + 1, k + 1), e),
                    r[(j, c)].clone() * r[(k, c)].clone(),
                );
            }
        }
        out
    }

    /// `g·λ_jk = 2 Σ_i ρ_ij ρ_ik θ_i + Σ_{u<v} (ρ_vj ρ_uk + ρ_uj ρ_vk) λ_uv`.
    pub fn act_lambda(&self, j: usize, k: usize) -> ClassPoly<S> {
        let e = self.e();
        let r = &self.0;
        let (j0, k0) = (j - 1, k - 1);
        let two = S::one() + S::one();
        let mut out = ClassPoly::zero(e, 1);
        for i in 0..e {
            out.add_term(
                Monomial::generator(GeneratorId::Theta(i + 1), e),
                two.clone() * r[(i, j0)].clone() * r[(i, k0)].clone(),
            );
        }
        for u in 0..e {
            for v in u + 1..e {
                out.add_term(
                    Monomial::generator(GeneratorId::Lambda(u + 1, v + 1), e),
                    r[(v, j0)].clone() * r[(u, k0)].clone() + r[(u, j0)].clone() * r[(v, k0)].clone(),
                );
            }
        }
        out
    }

    pub fn act_generator(&self, g: GeneratorId) -> ClassPoly<S> {
        match g {
            GeneratorId::Theta(i) => self.act_theta(i),
            GeneratorId::Lambda(j, k) => self.act_lambda(j, k),
        }
    }
}

/// The `GL(W)` action, extended multiplicatively from the generators.
pub fn gl_action<S: Field>(g: &GLMatrix<S>, p: &ClassPoly<S>) -> Result<ClassPoly<S>> {
    if g.e() != p.e() {
        return Err(Error::WrongAmbient { expected: p.e(), reason: format!("GL matrix of size {}", g.e()) });
    }
    let images: Vec<ClassPoly<S>> = GeneratorId::all(p.e()).into_iter().map(|id| g.act_generator(id)).collect();
    Ok(p.substitute(&images))
}

/// Divisor class `Σ a_i θ_i + Σ b_jk λ_jk` as the symmetric matrix with
/// diagonal `a` and off-diagonal entries `b` (`N¹ ≅ Symm_e`).
pub fn divisor_matrix<S: Field>(alpha: &ClassPoly<S>) -> Result<Matrix<S>> {
    if alpha.degree() != 1 {
        return Err(Error::InvalidArgument(format!("expected a divisor class, got degree {}", alpha.degree())));
    }
    let e = alpha.e();
    let mut m = Matrix::zeros(e, e);
    for (mono, c) in alpha.terms() {
        let (g, _) = mono.factors(e).next().expect("degree-one monomial");
        match g {
            GeneratorId::Theta(i) => m[(i - 1, i - 1)] = c.clone(),
            GeneratorId::Lambda(j, k) => {
                m[(j - 1, k - 1)] = c.clone();
                m[(k - 1, j - 1)] = c.clone();
            }
        }
    }
    Ok(m)
}

/// Inverse of [`divisor_matrix`] for a symmetric matrix.
pub fn divisor_from_matrix<S: Field>(m: &Matrix<S>) -> ClassPoly<S> {
    let e = m.rows();
    let mut out = ClassPoly::zero(e, 1);
    for i in 0..e {
        out.add_term(Monomial::generator(GeneratorId::Theta(i + 1), e), m[(i, i)].clone());
        for j in i + 1..e {
            out.add_term(Monomial::generator(GeneratorId::Lambda(i + 1, j + 1), e), m[(i, j)].clone());
        }
    }
    out
}

/// The divisor `v vᵀ`, i.e. `g·θ1` for any `g` with first column `v`.
pub fn rank_one_divisor<S: Field>(v: &[S]) -> ClassPoly<S> {
    let e = v.len();
    divisor_from_matrix(&Matrix::from_fn(e, e, |i, j| v[i].clone() * v[j].clone()))
}

/// `β = a θ1 + d θ2 + b λ` for the symmetric matrix `(a b; b d)`.
pub fn e2_divisor<S: Ring>(a: S, b: S, d: S) -> ClassPoly<S> {
    let mut out = ClassPoly::zero(2, 1);
    out.add_term(Monomial::e2(1, 0, 0), a);
    out.add_term(Monomial::e2(0, 1, 0), d);
    out.add_term(Monomial::e2(0, 0, 1), b);
    out
}

/// `μ = 4 θ1 θ2 − λ²` on `A × A`.
pub fn mu_class() -> ClassPoly<Rational> {
    let four = Rational::from_integer(4.into());
    ClassPoly::from_e2(2, [([1, 1, 0], four), ([0, 0, 2], -Rational::one())]).expect("valid μ")
}
