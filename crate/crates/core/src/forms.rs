//! Brute-force oracle: classes as `(k,k)`-forms on `C^{ne}`, exact wedge
//! products, Hermitian coefficient matrices and top-degree pairings.
//!
//! Coordinates `z_{s,r}` (`s` in `1..=n` along `A`, `r` in `1..=e` along the
//! factor) are flattened to the 0-based index `(r−1)·n + (s−1)`. A form is
//! stored as `Σ c_{IJ} dz_I ∧ dz̄_J` with all `dz` before all `dz̄`, both
//! ascending, and `I`, `J` encoded as bitmasks.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::algebra::{generator_count, ClassPoly, GeneratorId, Monomial};
use crate::error::{Error, Result};
use crate::linalg::{subsets, Matrix, SparseEchelon, SymMatrix};
use crate::scalar::{binomial, factorial, int, Field, Rational, Ring};

/// Element of `Q(i)` when `S = Rational`.
pub type Gaussian<S = Rational> = Complex<S>;

/// Most complex dimensions a [`Form`] supports (bitmask width).
pub const MAX_DIM: usize = 32;

/// `(k,k)`-form with coefficients in `S(i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Form<S = Rational> {
    dim: usize,
    k: u32,
    terms: BTreeMap<(u32, u32), Gaussian<S>>,
}

/// Sign of `dz_A ∧ dz_B` relative to `dz_{A∪B}`, or `None` if they overlap.
fn merge_sign(a: u32, b: u32) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let x = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if x >= 31 { 0 } else { !((1u32 << (x + 1)) - 1) };
        inversions += (a & above).count_ones();
    }
    Some(inversions % 2 == 1)
}

fn times_i<S: Field>(z: Gaussian<S>) -> Gaussian<S> {
    Complex::new(-z.im, z.re)
}

fn flat_index(s: usize, r: usize, n: usize) -> usize {
    (r - 1) * n + (s - 1)
}

impl<S: Field> Form<S> {
    pub fn zero(dim: usize, k: u32) -> Self {
        assert!(dim <= MAX_DIM, "forms support at most {MAX_DIM} complex dimensions");
        Form { dim, k, terms: BTreeMap::new() }
    }

    /// The constant function 1.
    pub fn one(dim: usize) -> Self {
        let mut f = Self::zero(dim, 0);
        f.terms.insert((0, 0), Complex::one());
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> u32 {
        self.k
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

    /// Coefficient `c_{IJ}` of `dz_I ∧ dz̄_J`, indices 0-based.
    pub fn coefficient(&self, i: &[usize], j: &[usize]) -> Gaussian<S> {
        let mask = |v: &[usize]| v.iter().fold(0u32, |m, &x| m | (1 << x));
        self.terms.get(&(mask(i), mask(j))).cloned().unwrap_or_else(Complex::zero)
    }

    fn add_term(&mut self, key: (u32, u32), c: Gaussian<S>) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Complex::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.dim, self.k), (other.dim, other.k), "adding incompatible forms");
        let mut out = self.clone();
        for (key, c) in &other.terms {
            out.add_term(*key, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.dim, self.k);
        for (key, c) in &self.terms {
            out.add_term(*key, c.clone() * s.clone());
        }
        out
    }

    /// Exterior product, reordered into canonical form with exact signs.
    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "wedge of forms on different spaces");
        let mut out = Self::zero(self.dim, self.k + other.k);
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                let (Some(si), Some(sj)) = (merge_sign(i1, i2), merge_sign(j1, j2)) else { continue };
                let cross = (j1.count_ones() * i2.count_ones()) % 2 == 1;
                let c = c1.clone() * c2.clone();
                out.add_term((i1 | i2, j1 | j2), if si ^ sj ^ cross { -c } else { c });
            }
        }
        out
    }

    /// `h_{IJ} = c_{IJ} / i^{k²}` for `k`-subsets in lexicographic order.
    pub fn hermitian_matrix(&self) -> Result<SymMatrix<S>> {
        let index: HashMap<u32, usize> = subsets(self.dim, self.k as usize)
            .iter()
            .enumerate()
            .map(|(pos, s)| (s.iter().fold(0u32, |m, &x| m | (1 << x)), pos))
            .collect();
        let size = index.len();
        let mut h = Matrix::zeros(size, size);
        let odd = self.k % 2 == 1;
        for (&(i, j), c) in &self.terms {
            let re = if odd { c.im.clone() } else { c.re.clone() };
            let im = if odd { -c.re.clone() } else { c.im.clone() };
            if !im.is_zero() {
                return Err(Error::NonRealCoefficient { i, j });
            }
            h[(index[&i], index[&j])] = re;
        }
        SymMatrix::new(h).map_err(|_| Error::NotSymmetric)
    }

    /// Real coefficient of the volume form `Π (i dz_a ∧ dz̄_a)`.
    pub fn top_coefficient(&self) -> Result<S> {
        if self.k as usize != self.dim {
            return Err(Error::DegreeMismatch { left: self.k, right: 0, top: self.dim as u32 });
        }
        let h = self.hermitian_matrix()?;
        Ok(h.matrix()[(0, 0)].clone())
    }

    /// Top coefficient of `self ∧ other` without forming the full product.
    pub fn top_pairing(&self, other: &Self) -> Result<S> {
        let top = self.dim as u32;
        if self.k + other.k != top {
            return Err(Error::DegreeMismatch { left: self.k, right: other.k, top });
        }
        let full = if self.dim == 32 { u32::MAX } else { (1u32 << self.dim) - 1 };
        let mut acc = Self::zero(self.dim, top);
        for (&(i1, j1), c1) in &self.terms {
            if let Some(c2) = other.terms.get(&(full & !i1, full & !j1)) {
                let single = Form { dim: self.dim, k: self.k, terms: BTreeMap::from([((i1, j1), c1.clone())]) };
                let other_single = Form { dim: self.dim, k: other.k, terms: BTreeMap::from([((full & !i1, full & !j1), c2.clone())]) };
                acc = acc.add(&single.wedge(&other_single));
            }
        }
        if acc.is_zero() {
            return Ok(S::zero());
        }
        acc.top_coefficient()
    }
}

/// `θ_i = Σ_s i dz_{si} ∧ dz̄_{si}` and
/// `λ_jk = Σ_s i (dz_{sj} ∧ dz̄_{sk} + dz_{sk} ∧ dz̄_{sj})`.
pub fn generator_form<S: Field>(g: GeneratorId, n: usize, e: usize) -> Result<Form<S>> {
    g.validate(e)?;
    let mut f = Form::zero(n * e, 1);
    let i_unit = times_i(Complex::<S>::one());
    for s in 1..=n {
        match g {
            GeneratorId::Theta(r) => {
                let a = 1u32 << flat_index(s, r, n);
                f.add_term((a, a), i_unit.clone());
            }
            GeneratorId::Lambda(j, k) => {
                let a = 1u32 << flat_index(s, j, n);
                let b = 1u32 << flat_index(s, k, n);
                f.add_term((a, b), i_unit.clone());
                f.add_term((b, a), i_unit.clone());
            }
        }
    }
    Ok(f)
}

/// Expands a class into its form by wedging generator forms.
pub fn class_to_form<S: Field>(p: &ClassPoly<S>, n: usize) -> Result<Form<S>> {
    let e = p.e();
    let top = (n * e) as u32;
    if p.degree() > top {
        return Err(Error::DegreeOutOfRange { degree: p.degree(), max: top });
    }
    let gens: Vec<Form<S>> = GeneratorId::all(e).into_iter().map(|g| generator_form(g, n, e)).collect::<Result<_>>()?;
    let mut out = Form::zero(n * e, p.degree());
    for (m, c) in p.terms() {
        let mut f = Form::one(n * e);
        for (slot, &x) in m.exponents().iter().enumerate() {
            for _ in 0..x {
                f = f.wedge(&gens[slot]);
            }
        }
        out = out.add(&f.scale(c));
    }
    Ok(out)
}

/// Memoized rational forms of monomials for a fixed `(n, e)`.
#[derive(Debug)]
pub struct FormOracle {
    n: usize,
    e: usize,
    generators: Vec<Form>,
    cache: Mutex<HashMap<Monomial, Arc<Form>>>,
}

impl FormOracle {
    pub fn new(n: usize, e: usize) -> Result<Self> {
        if n == 0 || e == 0 || n * e > MAX_DIM {
            return Err(Error::InvalidArgument(format!("form oracle needs 1 ≤ n·e ≤ {MAX_DIM}, got n = {n}, e = {e}")));
        }
        let generators = GeneratorId::all(e).into_iter().map(|g| generator_form(g, n, e)).collect::<Result<_>>()?;
        Ok(FormOracle { n, e, generators, cache: Mutex::new(HashMap::new()) })
    }

    /// Process-wide oracle for `(n, e)`.
    pub fn shared(n: usize, e: usize) -> Result<Arc<FormOracle>> {
        static ORACLES: crate::Registry<(usize, usize), FormOracle> = OnceLock::new();
        let mut all = ORACLES.get_or_init(Default::default).lock().expect("oracle registry poisoned");
        if let Some(o) = all.get(&(n, e)) {
            return Ok(o.clone());
        }
        let o = Arc::new(FormOracle::new(n, e)?);
        all.insert((n, e), o.clone());
        Ok(o)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn monomial_form(&self, m: &Monomial) -> Arc<Form> {
        if let Some(f) = self.cache.lock().expect("form cache poisoned").get(m) {
            return f.clone();
        }
        let f = match m.exponents().iter().rposition(|&x| x > 0) {
            None => Arc::new(Form::one(self.n * self.e)),
            Some(slot) => {
                let mut exps = m.exponents().to_vec();
                exps[slot] -= 1;
                let rest = self.monomial_form(&Monomial::from_exponents(exps));
                Arc::new(rest.wedge(&self.generators[slot]))
            }
        };
        self.cache.lock().expect("form cache poisoned").entry(m.clone()).or_insert(f).clone()
    }

    pub fn form(&self, p: &ClassPoly<Rational>) -> Result<Form> {
        self.check(p)?;
        let mut out = Form::zero(self.n * self.e, p.degree());
        for (m, c) in p.terms() {
            out = out.add(&self.monomial_form(m).scale(c));
        }
        Ok(out)
    }

    pub fn hermitian_matrix(&self, p: &ClassPoly<Rational>) -> Result<SymMatrix<Rational>> {
        self.form(p)?.hermitian_matrix()
    }

    /// `∫ p·q`, normalized so that `θ_1^n ⋯ θ_e^n = (n!)^e`.
    pub fn top_pairing(&self, p: &ClassPoly<Rational>, q: &ClassPoly<Rational>) -> Result<Rational> {
        let top = (self.n * self.e) as u32;
        if p.degree() + q.degree() != top {
            return Err(Error::DegreeMismatch { left: p.degree(), right: q.degree(), top });
        }
        self.form(p)?.top_pairing(&self.form(q)?)
    }

    /// Rank of the span of the forms of all degree-`k` monomials: `dim N^k`.
    pub fn rank(&self, k: u32) -> Result<usize> {
        let top = (self.n * self.e) as u32;
        if k > top {
            return Err(Error::DegreeOutOfRange { degree: k, max: top });
        }
        let mut ech = SparseEchelon::<Rational>::new();
        for m in Monomial::all_of_degree(generator_count(self.e), k) {
            let h = self.monomial_form(&m).hermitian_matrix()?;
            let dim = h.dim();
            let row: BTreeMap<usize, Rational> = (0..dim * dim)
                .filter_map(|idx| {
                    let x = &h.matrix()[(idx / dim, idx % dim)];
                    (!x.is_zero()).then(|| (idx, x.clone()))
                })
                .collect();
            ech.insert(row);
        }
        Ok(ech.rank())
    }

    fn check(&self, p: &ClassPoly<Rational>) -> Result<()> {
        if p.e() != self.e {
            return Err(Error::WrongAmbient { expected: self.e, reason: format!("class on A^{}", p.e()) });
        }
        let top = (self.n * self.e) as u32;
        if p.degree() > top {
            return Err(Error::DegreeOutOfRange { degree: p.degree(), max: top });
        }
        Ok(())
    }
}

/// `θ1^a θ2^b λ^c` on `A × A` with `a + b + c = 2n`: zero unless `a = b =
/// n − k` and `c = 2k`, in which case `(−1)^k (2k)! ((n−k)!)² C(n,k)`.
pub fn intersection_number_formula(n: u32, a: u32, b: u32, c: u32) -> Result<Rational> {
    if a + b + c != 2 * n {
        return Err(Error::DegreeMismatch { left: a + b + c, right: 0, top: 2 * n });
    }
    if a != b {
        return Ok(Rational::zero());
    }
    let k = n - a;
    let sign = if k.is_multiple_of(2) { int(1) } else { int(-1) };
    let nk = factorial(n - k);
    Ok(sign * factorial(2 * k) * &nk * &nk * Rational::from_integer(binomial(n as i64, k as i64).into()))
}

/// `∫ μ^n = Σ_k C(n,k)² 4^{n−k} (2k)! ((n−k)!)²` from the binomial expansion
/// of `μ = 4θ1θ2 − λ²`.
pub fn mu_power_expansion(n: u32) -> Rational {
    (0..=n)
        .map(|k| {
            let c = Rational::from_integer(binomial(n as i64, k as i64).into());
            let nk = factorial(n - k);
            &c * &c * Ring::pow(&int(4), n - k) * factorial(2 * k) * &nk * &nk
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// Top intersection numbers via `θ^{x} ↦ (Π x_g!)·[u^x] det(U)^n`, where
/// `U` is the generic symmetric `e×e` matrix with diagonal `θ_i` and
/// off-diagonal entries `λ_jk`. Agrees with [`FormOracle::top_pairing`] and
/// is much faster for large `n·e`.
#[derive(Clone, Debug)]
pub struct IntersectionTable {
    n: u32,
    e: usize,
    values: HashMap<Monomial, Rational>,
}

impl IntersectionTable {
    pub fn new(n: u32, e: usize) -> Self {
        let det = symbolic_det(e);
        let power = det.pow(n);
        let values = power
            .terms()
            .map(|(m, c)| {
                let weight = m.exponents().iter().fold(Rational::one(), |acc, &x| acc * factorial(x));
                (m.clone(), c * weight)
            })
            .collect();
        IntersectionTable { n, e, values }
    }

    pub fn shared(n: u32, e: usize) -> Arc<IntersectionTable> {
        static TABLES: crate::Registry<(u32, usize), IntersectionTable> = OnceLock::new();
        let mut all = TABLES.get_or_init(Default::default).lock().expect("table registry poisoned");
        all.entry((n, e)).or_insert_with(|| Arc::new(IntersectionTable::new(n, e))).clone()
    }

    pub fn top_degree(&self) -> u32 {
        self.n * self.e as u32
    }

    /// Degree of a top-degree class.
    pub fn integrate(&self, p: &ClassPoly<Rational>) -> Result<Rational> {
        if p.e() != self.e {
            return Err(Error::WrongAmbient { expected: self.e, reason: format!("class on A^{}", p.e()) });
        }
        if p.degree() != self.top_degree() {
            return Err(Error::DegreeMismatch { left: p.degree(), right: 0, top: self.top_degree() });
        }
        Ok(p.terms().filter_map(|(m, c)| self.values.get(m).map(|v| c * v)).fold(Rational::zero(), |a, b| a + b))
    }

    pub fn top_pairing(&self, p: &ClassPoly<Rational>, q: &ClassPoly<Rational>) -> Result<Rational> {
        if p.degree() + q.degree() != self.top_degree() {
            return Err(Error::DegreeMismatch { left: p.degree(), right: q.degree(), top: self.top_degree() });
        }
        self.integrate(&p.mul(q))
    }
}

/// `det U` for the generic symmetric matrix, as a class of degree `e`.
fn symbolic_det(e: usize) -> ClassPoly<Rational> {
    let entry = |i: usize, j: usize| -> ClassPoly<Rational> {
        if i == j {
            ClassPoly::theta(i + 1, e)
        } else {
            ClassPoly::lambda(i.min(j) + 1, i.max(j) + 1, e)
        }
    };
    // Laplace expansion along the first row, over column subsets.
    fn minor(rows: &[usize], cols: &[usize], entry: &dyn Fn(usize, usize) -> ClassPoly<Rational>, e: usize) -> ClassPoly<Rational> {
        if rows.is_empty() {
            return ClassPoly::constant(e, Rational::one());
        }
        let mut acc = ClassPoly::zero(e, rows.len() as u32);
        for (pos, &c) in cols.iter().enumerate() {
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry(rows[0], c).mul(&minor(&rows[1..], &rest, entry, e));
            acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
    let idx: Vec<usize> = (0..e).collect();
    minor(&idx, &idx, &entry, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{e2_divisor, mu_class, GLMatrix, gl_action};
    use crate::linalg::compound_matrix;
    use crate::scalar::rat;
    use proptest::prelude::*;

    type P = ClassPoly<Rational>;

    fn h_of(p: &P, n: usize) -> Matrix<Rational> {
        class_to_form(p, n).unwrap().hermitian_matrix().unwrap().into_matrix()
    }

    fn ints(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect())
    }

    #[test]
    fn generator_examples() {
        assert_eq!(h_of(&P::theta(1, 2), 1), ints(vec![vec![1, 0], vec![0, 0]]));
        assert_eq!(h_of(&P::lambda(1, 2, 2), 1), ints(vec![vec![0, 1], vec![1, 0]]));
        let h = h_of(&P::theta(2, 2), 2);
        assert_eq!(h, ints(vec![vec![0, 0, 0, 0], vec![0, 0, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]));
    }

    #[test]
    fn wedge_examples() {
        let t1: Form = generator_form(GeneratorId::Theta(1), 1, 2).unwrap();
        let t2: Form = generator_form(GeneratorId::Theta(2), 1, 2).unwrap();
        assert_eq!(t1.wedge(&Form::one(2)), t1);
        assert!(t1.wedge(&t1).is_zero());
        let p = t1.wedge(&t2);
        assert_eq!(p.hermitian_matrix().unwrap().matrix()[(0, 0)], int(1));
        assert_eq!(p, t2.wedge(&t1));
        let lam = generator_form::<Rational>(GeneratorId::Lambda(1, 2), 1, 2).unwrap();
        assert_eq!(lam.wedge(&lam).top_coefficient().unwrap(), int(-2));
    }

    #[test]
    fn volume_normalization() {
        for (n, e) in [(1usize, 1usize), (2, 1), (2, 2), (3, 2), (1, 3), (2, 3)] {
            let oracle = FormOracle::new(n, e).unwrap();
            let mut p = P::constant(e, int(1));
            for i in 1..=e {
                p = p.mul(&P::theta(i, e).pow(n as u32));
            }
            let want = Ring::pow(&factorial(n as u32), e as u32);
            assert_eq!(oracle.form(&p).unwrap().top_coefficient().unwrap(), want);
        }
    }

    #[test]
    fn printed_intersection_numbers() {
        let oracle = FormOracle::new(2, 2).unwrap();
        let m = |a, b, c| P::from_e2(a + b + c, [([a, b, c], int(1))]).unwrap();
        assert_eq!(oracle.top_pairing(&m(2, 0, 0), &m(0, 2, 0)).unwrap(), int(4));
        assert_eq!(oracle.top_pairing(&m(1, 1, 0), &m(0, 0, 2)).unwrap(), int(-4));
        assert_eq!(oracle.top_pairing(&m(0, 0, 2), &m(0, 0, 2)).unwrap(), int(24));
        let mu = mu_class();
        assert_eq!(oracle.top_pairing(&mu, &mu).unwrap(), int(120));
        assert_eq!(mu_power_expansion(2), int(120));
        assert!(matches!(oracle.top_pairing(&mu, &m(1, 0, 0)), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn formula_matches_oracle_and_table() {
        for n in 1..=3u32 {
            let oracle = FormOracle::new(n as usize, 2).unwrap();
            let table = IntersectionTable::new(n, 2);
            for m in Monomial::all_of_degree(3, 2 * n) {
                let x = m.exponents();
                let p = P::monomial(m.clone(), int(1), 2);
                let formula = intersection_number_formula(n, x[0], x[1], x[2]).unwrap();
                let one = P::constant(2, int(1));
                assert_eq!(oracle.top_pairing(&p, &one).unwrap(), formula, "n={n} {x:?}");
                assert_eq!(table.integrate(&p).unwrap(), formula);
            }
            let mu_n = mu_class().pow(n);
            assert_eq!(table.integrate(&mu_n).unwrap(), mu_power_expansion(n));
        }
        assert_eq!(intersection_number_formula(2, 2, 2, 0).unwrap(), int(4));
        assert_eq!(intersection_number_formula(2, 2, 1, 1).unwrap(), int(0));
        assert_eq!(intersection_number_formula(3, 1, 1, 4).unwrap(), int(72));
    }

    #[test]
    fn table_matches_oracle_for_e3() {
        let oracle = FormOracle::new(1, 3).unwrap();
        let table = IntersectionTable::new(1, 3);
        for m in Monomial::all_of_degree(6, 3) {
            let p = P::monomial(m, int(1), 3);
            assert_eq!(oracle.top_pairing(&p, &P::constant(3, int(1))).unwrap(), table.integrate(&p).unwrap());
        }
    }

    #[test]
    fn oracle_rank_matches_quotient() {
        for n in 1..=3usize {
            let oracle = FormOracle::new(n, 2).unwrap();
            for k in 0..=2 * n as u32 {
                assert_eq!(oracle.rank(k).unwrap() as u128, crate::algebra::hodge_dimension(n as u32, 2, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn realness_on_generator_products() {
        for (n, e) in [(2usize, 3usize), (3, 2), (1, 3)] {
            let oracle = FormOracle::new(n, e).unwrap();
            for k in 0..=((n * e).min(4) as u32) {
                for m in Monomial::all_of_degree(generator_count(e), k) {
                    oracle.monomial_form(&m).hermitian_matrix().unwrap();
                }
            }
        }
    }

    #[test]
    fn psd_forms_wedge_to_psd() {
        let oracle = FormOracle::new(2, 2).unwrap();
        let d1 = e2_divisor(int(1), int(1), int(2));
        let d2 = e2_divisor(int(3), int(-1), int(1));
        let p = d1.pow(2).mul(&d2.pow(2));
        assert!(crate::linalg::is_psd_exact(&oracle.hermitian_matrix(&p).unwrap()).is_psd());
        let q = d1.mul(&d2);
        assert!(crate::linalg::is_psd_exact(&oracle.hermitian_matrix(&q).unwrap()).is_psd());
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-4i64..5, 1i64..4).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        #[test]
        fn powers_of_divisors_are_compounds(a in small_rat(), b in small_rat(), d in small_rat(), n in 1usize..=3, k in 1u32..=3) {
            prop_assume!(k as usize <= 2 * n);
            let beta = e2_divisor(a.clone(), b.clone(), d.clone());
            let g = Matrix::from_rows(vec![vec![a, b.clone()], vec![b, d]]);
            let h_beta = Matrix::from_fn(2 * n, 2 * n, |x, y| if x % n == y % n { g[(x / n, y / n)].clone() } else { int(0) });
            prop_assert_eq!(&h_of(&beta, n), &h_beta);
            let want = compound_matrix(&h_beta, k as usize).scale(&factorial(k));
            prop_assert_eq!(h_of(&beta.pow(k), n), want);
        }

        #[test]
        fn pairing_is_invariant_under_unimodular_g(x in small_rat(), y in small_rat(), flip in proptest::bool::ANY) {
            let oracle = FormOracle::new(2, 2).unwrap();
            let rows = if flip { vec![vec![int(0), int(1)], vec![int(1), x.clone()]] } else { vec![vec![int(1), x.clone()], vec![y.clone(), &x * &y + int(1)]] };
            let g = GLMatrix::from_rows(rows).unwrap();
            let p = P::from_e2(2, [([2, 0, 0], int(1)), ([0, 1, 1], x.clone()), ([1, 1, 0], int(3))]).unwrap();
            let q = P::from_e2(2, [([0, 0, 2], int(1)), ([1, 0, 1], y)]).unwrap();
            let before = oracle.top_pairing(&p, &q).unwrap();
            let after = oracle.top_pairing(&gl_action(&g, &p).unwrap(), &gl_action(&g, &q).unwrap()).unwrap();
            prop_assert_eq!(before, after);
        }
    }
}
