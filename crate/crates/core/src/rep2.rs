//! `GL_2` representation matrices for `A × A` and the linear block maps that
//! split the Hermitian form of a class into irreducible pieces.
//!
//! `Sym^k W` uses the basis `w1^{k−i} w2^i`, `i = 0..=k`, and `g` acts by
//! `g w1 = a w1 + c w2`, `g w2 = b w1 + d w2` for `g = (a b; c d)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use crate::algebra::{ClassPoly, Monomial};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseEchelon, SymMatrix};
use crate::scalar::{binomial, format_rational, int, multinomial, rat, Rational, Ring};
use crate::schur::{wedge_decomposition, IrredLabel};

/// Polynomial in `a, d, b` with rational coefficients; the exponent triple
/// `[l1, l2, l3]` stands for `a^l1 d^l2 b^l3`, matching the layout of
/// `θ1^l1 θ2^l2 λ^l3`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct TriPoly(BTreeMap<[u32; 3], Rational>);

impl TriPoly {
    pub fn var(slot: usize) -> Self {
        let mut e = [0; 3];
        e[slot] = 1;
        TriPoly(BTreeMap::from([(e, Rational::one())]))
    }

    pub fn a() -> Self {
        Self::var(0)
    }

    pub fn d() -> Self {
        Self::var(1)
    }

    pub fn b() -> Self {
        Self::var(2)
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = TriPoly::default();
        if !c.is_zero() {
            p.0.insert([0; 3], c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &Rational)> {
        self.0.iter()
    }

    pub fn coefficient(&self, exps: [u32; 3]) -> Rational {
        self.0.get(&exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, a: &Rational, b: &Rational, d: &Rational) -> Rational {
        self.0
            .iter()
            .map(|([i, j, k], c)| c * Ring::pow(a, *i) * Ring::pow(d, *j) * Ring::pow(b, *k))
            .fold(Rational::zero(), |x, y| x + y)
    }

    fn insert(&mut self, e: [u32; 3], c: Rational) {
        if c.is_zero() {
            return;
        }
        let s = self.0.remove(&e).unwrap_or_else(Rational::zero) + c;
        if !s.is_zero() {
            self.0.insert(e, s);
        }
    }
}

impl Zero for TriPoly {
    fn zero() -> Self {
        TriPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl One for TriPoly {
    fn one() -> Self {
        TriPoly::constant(Rational::one())
    }
}

impl Add for TriPoly {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.0 {
            self.insert(e, c);
        }
        self
    }
}

impl Neg for TriPoly {
    type Output = Self;
    fn neg(self) -> Self {
        TriPoly(self.0.into_iter().map(|(e, c)| (e, -c)).collect())
    }
}

impl Sub for TriPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for TriPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = TriPoly::default();
        for (e1, c1) in &self.0 {
            for (e2, c2) in &rhs.0 {
                out.insert([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1 * c2);
            }
        }
        out
    }
}

/// Product of two binary forms given by their coefficients on `w1^{deg−i} w2^i`.
fn binary_mul<S: Ring>(p: &[S], q: &[S]) -> Vec<S> {
    let mut out = vec![S::zero(); p.len() + q.len() - 1];
    for (i, x) in p.iter().enumerate() {
        for (j, y) in q.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

/// Entries of `ρ_{Sym^k W}(g)` over any commutative ring; entry `(i, j)` is
/// the coefficient of `w1^{k−i} w2^i` in `(a w1 + c w2)^{k−j} (b w1 + d w2)^j`.
pub fn sym_rep_entries<S: Ring>(k: u32, a: &S, b: &S, c: &S, d: &S) -> Vec<Vec<S>> {
    let g1 = [a.clone(), c.clone()];
    let g2 = [b.clone(), d.clone()];
    let pow = |f: &[S; 2], m: u32| (0..m).fold(vec![S::one()], |acc, _| binary_mul(&acc, f));
    let cols: Vec<Vec<S>> = (0..=k).map(|j| binary_mul(&pow(&g1, k - j), &pow(&g2, j))).collect();
    (0..=k as usize).map(|i| (0..=k as usize).map(|j| cols[j][i].clone()).collect()).collect()
}

fn check_2x2(g: &Matrix<Rational>) -> Result<()> {
    if g.rows() != 2 || g.cols() != 2 {
        return Err(Error::InvalidArgument("expected a 2×2 matrix".into()));
    }
    Ok(())
}

/// `ρ_{Sym^k W}(g)`.
pub fn sym_rep_matrix(k: u32, g: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    check_2x2(g)?;
    Ok(Matrix::from_rows(sym_rep_entries(k, &g[(0, 0)], &g[(0, 1)], &g[(1, 0)], &g[(1, 1)])))
}

/// `D = diag(C(k, j))`.
pub fn d_matrix(k: u32) -> Matrix<Rational> {
    Matrix::from_fn(k as usize + 1, k as usize + 1, |i, j| {
        if i == j {
            Rational::from_integer(binomial(k as i64, j as i64).into())
        } else {
            Rational::zero()
        }
    })
}

/// `ρ_{Sym^k W}(g) · D`; symmetric whenever `g` is.
pub fn sym_rep_matrix_with_d(k: u32, g: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    Ok(sym_rep_matrix(k, g)?.mul(&d_matrix(k)))
}

/// `det(g)^l · ρ_{Sym^m W}(g)`.
pub fn irred_rep_matrix(label: IrredLabel, g: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    check_2x2(g)?;
    Ok(sym_rep_matrix(label.m, g)?.scale(&Ring::pow(&g.determinant(), label.l)))
}

/// `det(g)^l ρ_m(g) D_m` for the generic symmetric `g = (a b; b d)`.
pub fn symbolic_block(label: IrredLabel) -> Vec<Vec<TriPoly>> {
    let (a, b, d) = (TriPoly::a(), TriPoly::b(), TriPoly::d());
    let det = Ring::pow(&(a.clone() * d.clone() - b.clone() * b.clone()), label.l);
    let rho = sym_rep_entries(label.m, &a, &b, &b, &d);
    rho.into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .map(|(j, x)| {
                    let dj = Rational::from_integer(binomial(label.m as i64, j as i64).into());
                    det.clone() * x * TriPoly::constant(dj)
                })
                .collect()
        })
        .collect()
}

/// Linear form `Σ c_l x_l` in the coordinates of a degree-`k` class on `A × A`.
pub type LinearForm = BTreeMap<[u32; 3], Rational>;

/// Linear map from the coordinates `x_{l1,l2,l3}` of a degree-`k` class to a
/// symmetric matrix: the restriction of its Hermitian form to one
/// irreducible summand `det^{⊗l} ⊗ Sym^m W`, up to a positive congruence.
///
/// Normalized by `B(β^k) = det(g)^l · ρ_m(g) · D_m` for `β = aθ1 + dθ2 + bλ`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockMap {
    pub k: u32,
    pub label: IrredLabel,
    pub entries: Vec<Vec<LinearForm>>,
}

impl BlockMap {
    fn build(k: u32, label: IrredLabel) -> Result<Self> {
        if label.weight() != k {
            return Err(Error::InvalidArgument(format!("label {label} does not occur in degree {k}")));
        }
        let entries = symbolic_block(label)
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|p| {
                        p.terms()
                            .map(|(l, t)| (*l, t / Rational::from_integer(multinomial(l).into())))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(BlockMap { k, label, entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn apply_coords(&self, x: impl Fn([u32; 3]) -> Rational) -> Matrix<Rational> {
        Matrix::from_fn(self.size(), self.size(), |i, j| {
            self.entries[i][j].iter().map(|(l, c)| c * x(*l)).fold(Rational::zero(), |a, b| a + b)
        })
    }

    pub fn apply(&self, alpha: &ClassPoly<Rational>) -> Result<SymMatrix<Rational>> {
        if alpha.e() != 2 {
            return Err(Error::WrongAmbient { expected: 2, reason: format!("class on A^{}", alpha.e()) });
        }
        if alpha.degree() != self.k {
            return Err(Error::InvalidArgument(format!("class of degree {} for a degree-{} block", alpha.degree(), self.k)));
        }
        SymMatrix::new(self.apply_coords(|[a, b, c]| alpha.x(a, b, c)))
    }

    /// The map as a matrix with one row per entry `(i, j)` (row-major) and
    /// one column per monomial in canonical order.
    pub fn coefficient_matrix(&self) -> Matrix<Rational> {
        let monos = Monomial::all_of_degree(3, self.k);
        let s = self.size();
        Matrix::from_fn(s * s, monos.len(), |r, c| {
            let e = monos[c].exponents();
            self.entries[r / s][r % s].get(&[e[0], e[1], e[2]]).cloned().unwrap_or_else(Rational::zero)
        })
    }

    pub fn scaled(&self, s: &Rational) -> BlockMap {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|f| f.iter().map(|(l, c)| (*l, c * s)).collect()).collect())
            .collect();
        BlockMap { k: self.k, label: self.label, entries }
    }
}

/// Renders `Σ c_l x_l` in canonical monomial order, e.g. `1/2·x110 - x002`.
pub fn format_linear_form(f: &LinearForm) -> String {
    if f.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, ([a, b, c], coef)) in f.iter().rev().enumerate() {
        let neg = coef < &Rational::zero();
        let abs = if neg { -coef.clone() } else { coef.clone() };
        if n == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&format_rational(&abs));
            out.push('·');
        }
        out.push_str(&format!("x{a}{b}{c}"));
    }
    out
}

impl fmt::Display for BlockMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k = {}, block {}:", self.k, self.label)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(format_linear_form).collect();
            writeln!(f, "  [ {} ]", cells.join(" | "))?;
        }
        Ok(())
    }
}

/// Cached block map for `(k, label)`.
pub fn block_map(k: u32, label: IrredLabel) -> Result<Arc<BlockMap>> {
    static CACHE: crate::Registry<(u32, IrredLabel), BlockMap> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().expect("block cache poisoned").get(&(k, label)) {
        return Ok(b.clone());
    }
    let b = Arc::new(BlockMap::build(k, label)?);
    Ok(cache.lock().expect("block cache poisoned").entry((k, label)).or_insert(b).clone())
}

/// Block maps of every irreducible summand of `∧^k W^{⊕n}`, with multiplicities.
pub fn blocks_for(n: u32, k: u32) -> Result<Vec<(Arc<BlockMap>, u128)>> {
    if k > 2 * n {
        return Err(Error::DegreeOutOfRange { degree: k, max: 2 * n });
    }
    wedge_decomposition(n, k).into_iter().map(|(label, mult)| Ok((block_map(k, label)?, mult))).collect()
}

/// The `Sym^k W` block `b′_α`.
pub fn bprime_matrix(alpha: &ClassPoly<Rational>) -> Result<SymMatrix<Rational>> {
    let k = alpha.degree();
    block_map(k, IrredLabel::new(0, k))?.apply(alpha)
}

/// Dimension of the span of `ρ_k(g) D` over symmetric `g`, computed on the
/// grid `g = (1 i; i j)`, `0 ≤ i, j ≤ k`.
pub fn hermite_span_dim(k: u32) -> usize {
    let mut ech = SparseEchelon::<Rational>::new();
    for i in 0..=k as i64 {
        for j in 0..=k as i64 {
            let g = Matrix::from_rows(vec![vec![int(1), int(i)], vec![int(i), int(j)]]);
            let m = sym_rep_matrix_with_d(k, &g).expect("2×2");
            let s = m.rows();
            ech.insert((0..s * s).filter_map(|r| {
                let x = &m[(r / s, r % s)];
                (!x.is_zero()).then(|| (r, x.clone()))
            }).collect());
        }
    }
    ech.rank()
}

/// A block matrix in an externally fixed normalization, as linear forms,
/// together with the positive scalar relating it to [`block_map`].
#[derive(Clone, Debug)]
pub struct ReferenceBlock {
    pub name: &'static str,
    pub k: u32,
    pub label: IrredLabel,
    pub entries: Vec<Vec<LinearForm>>,
    /// `entries = scale · block_map(k, label)`.
    pub scale: Rational,
}

fn lf(terms: &[([u32; 3], Rational)]) -> LinearForm {
    terms.iter().filter(|(_, c)| !c.is_zero()).cloned().collect()
}

/// The reference block matrices for `k = 2, 3, 4` on `A × A`.
pub fn reference_blocks() -> Vec<ReferenceBlock> {
    let x = |a: u32, b: u32, c: u32, p: i64, q: i64| ([a, b, c], rat(p, q));
    vec![
        ReferenceBlock {
            name: "k=2 det",
            k: 2,
            label: IrredLabel::new(1, 0),
            entries: vec![vec![lf(&[x(1, 1, 0, 1, 2), x(0, 0, 2, -1, 1)])]],
            scale: int(1),
        },
        ReferenceBlock {
            name: "k=2 Sym2",
            k: 2,
            label: IrredLabel::new(0, 2),
            entries: vec![
                vec![lf(&[x(2, 0, 0, 1, 1)]), lf(&[x(1, 0, 1, 1, 1)]), lf(&[x(0, 0, 2, 1, 1)])],
                vec![lf(&[x(1, 0, 1, 1, 1)]), lf(&[x(1, 1, 0, 1, 1), x(0, 0, 2, 2, 1)]), lf(&[x(0, 1, 1, 1, 1)])],
                vec![lf(&[x(0, 0, 2, 1, 1)]), lf(&[x(0, 1, 1, 1, 1)]), lf(&[x(0, 2, 0, 1, 1)])],
            ],
            scale: int(1),
        },
        ReferenceBlock {
            name: "k=3 det⊗W",
            k: 3,
            label: IrredLabel::new(1, 1),
            entries: vec![
                vec![lf(&[x(2, 1, 0, 2, 1), x(1, 0, 2, -2, 1)]), lf(&[x(1, 1, 1, 1, 1), x(0, 0, 3, -6, 1)])],
                vec![lf(&[x(1, 1, 1, 1, 1), x(0, 0, 3, -6, 1)]), lf(&[x(1, 2, 0, 2, 1), x(0, 1, 2, -2, 1)])],
            ],
            scale: int(6),
        },
        ReferenceBlock {
            name: "k=3 Sym3",
            k: 3,
            label: IrredLabel::new(0, 3),
            entries: vec![
                vec![lf(&[x(3, 0, 0, 1, 1)]), lf(&[x(2, 0, 1, 1, 1)]), lf(&[x(1, 0, 2, 1, 1)]), lf(&[x(0, 0, 3, 1, 1)])],
                vec![
                    lf(&[x(2, 0, 1, 1, 1)]),
                    lf(&[x(2, 1, 0, 1, 1), x(1, 0, 2, 2, 1)]),
                    lf(&[x(1, 1, 1, 1, 1), x(0, 0, 3, 3, 1)]),
                    lf(&[x(0, 1, 2, 1, 1)]),
                ],
                vec![
                    lf(&[x(1, 0, 2, 1, 1)]),
                    lf(&[x(1, 1, 1, 1, 1), x(0, 0, 3, 3, 1)]),
                    lf(&[x(1, 2, 0, 1, 1), x(0, 1, 2, 2, 1)]),
                    lf(&[x(0, 2, 1, 1, 1)]),
                ],
                vec![lf(&[x(0, 0, 3, 1, 1)]), lf(&[x(0, 1, 2, 1, 1)]), lf(&[x(0, 2, 1, 1, 1)]), lf(&[x(0, 3, 0, 1, 1)])],
            ],
            scale: int(1),
        },
        ReferenceBlock {
            name: "k=4 det2",
            k: 4,
            label: IrredLabel::new(2, 0),
            entries: vec![vec![lf(&[x(2, 2, 0, 1, 1), x(1, 1, 2, -1, 1), x(0, 0, 4, 6, 1)])]],
            scale: int(6),
        },
        ReferenceBlock {
            name: "k=4 det⊗Sym2",
            k: 4,
            label: IrredLabel::new(1, 2),
            entries: vec![
                vec![
                    lf(&[x(3, 1, 0, 3, 1), x(2, 0, 2, -2, 1)]),
                    lf(&[x(2, 1, 1, 2, 1), x(1, 0, 3, -6, 1)]),
                    lf(&[x(1, 1, 2, 1, 1), x(0, 0, 4, -12, 1)]),
                ],
                vec![
                    lf(&[x(2, 1, 1, 2, 1), x(1, 0, 3, -6, 1)]),
                    lf(&[x(2, 2, 0, 4, 1), x(0, 0, 4, -24, 1)]),
                    lf(&[x(1, 2, 1, 2, 1), x(0, 1, 3, -6, 1)]),
                ],
                vec![
                    lf(&[x(1, 1, 2, 1, 1), x(0, 0, 4, -12, 1)]),
                    lf(&[x(1, 2, 1, 2, 1), x(0, 1, 3, -6, 1)]),
                    lf(&[x(1, 3, 0, 3, 1), x(0, 2, 2, -2, 1)]),
                ],
            ],
            scale: int(12),
        },
    ]
}

impl ReferenceBlock {
    /// `true` when the entries equal `scale · block_map(k, label)` exactly.
    pub fn matches(&self) -> Result<bool> {
        let ours = block_map(self.k, self.label)?.scaled(&self.scale);
        Ok(self.scale > Rational::zero() && ours.entries == self.entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{e2_divisor, HodgeRing, relation_generators};
    use proptest::prelude::*;

    type P = ClassPoly<Rational>;

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Matrix<Rational> {
        Matrix::from_rows(vec![vec![int(a), int(b)], vec![int(c), int(d)]])
    }

    #[test]
    fn sym_rep_examples() {
        let g = m2(2, 3, 5, 7);
        assert_eq!(sym_rep_matrix(1, &g).unwrap(), g);
        let (a, b, c, d) = (2, 3, 5, 7);
        let want = Matrix::from_rows(
            [[a * a, a * b, b * b], [2 * a * c, a * d + b * c, 2 * b * d], [c * c, c * d, d * d]]
                .iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        );
        assert_eq!(sym_rep_matrix(2, &g).unwrap(), want);
        let s = m2(a, b, b, d);
        let want = Matrix::from_rows(
            [[a * a, 2 * a * b, b * b], [2 * a * b, 2 * (a * d + b * b), 2 * b * d], [b * b, 2 * b * d, d * d]]
                .iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        );
        assert_eq!(sym_rep_matrix_with_d(2, &s).unwrap(), want);
    }

    #[test]
    fn irred_rep_examples() {
        let g = m2(2, 3, 5, 7);
        assert_eq!(irred_rep_matrix(IrredLabel::new(1, 0), &g).unwrap(), Matrix::from_rows(vec![vec![int(-1)]]));
        assert_eq!(irred_rep_matrix(IrredLabel::new(0, 0), &g).unwrap(), Matrix::from_rows(vec![vec![int(1)]]));
        let s = m2(2, 3, 3, 7);
        assert_eq!(irred_rep_matrix(IrredLabel::new(1, 1), &s).unwrap(), s.scale(&int(5)));
    }

    #[test]
    fn reference_blocks_match() {
        for r in reference_blocks() {
            assert!(r.matches().unwrap(), "{}", r.name);
        }
        let k2 = block_map(2, IrredLabel::new(1, 0)).unwrap();
        assert_eq!(format_linear_form(&k2.entries[0][0]), "1/2·x110 - x002");
    }

    #[test]
    fn bprime_examples() {
        let alpha = P::from_e2(2, [([2, 0, 0], int(1)), ([1, 1, 0], int(1)), ([0, 2, 0], int(1)), ([0, 0, 2], int(1))]).unwrap();
        let want = Matrix::from_rows(vec![
            vec![int(1), int(0), int(1)],
            vec![int(0), int(3), int(0)],
            vec![int(1), int(0), int(1)],
        ]);
        assert_eq!(bprime_matrix(&alpha).unwrap().into_matrix(), want);

        let t1 = P::theta(1, 2);
        let outer = bprime_matrix(&t1.mul(&alpha)).unwrap().into_matrix();
        assert_eq!(outer.select(&[0, 1, 2], &[0, 1, 2]), want);
        assert!((0..4).all(|i| outer[(3, i)].is_zero() && outer[(i, 3)].is_zero()));
    }

    #[test]
    fn hermite_span() {
        for k in 0..=6u32 {
            assert_eq!(hermite_span_dim(k) as u32, (k + 1) * (k + 2) / 2);
        }
    }

    #[test]
    fn sym_block_is_an_isomorphism() {
        for k in 0..=5u32 {
            let b = block_map(k, IrredLabel::new(0, k)).unwrap();
            assert_eq!(b.coefficient_matrix().rank() as u32, (k + 1) * (k + 2) / 2);
        }
    }

    #[test]
    fn blocks_vanish_on_ideal_slice() {
        for n in 1..=3u32 {
            for k in n + 1..=2 * n {
                let multipliers = Monomial::all_of_degree(3, k - n - 1);
                for (b, _) in blocks_for(n, k).unwrap() {
                    for r in relation_generators(n, 2) {
                        for m in &multipliers {
                            let p = r.mul(&P::monomial(m.clone(), int(1), 2));
                            assert!(b.apply(&p).unwrap().matrix().is_zero(), "n={n} k={k} {}", b.label);
                        }
                    }
                }
                let ring = HodgeRing::new(n, 2).unwrap();
                assert_eq!(ring.slice(k).unwrap().dim() as u128, crate::algebra::hodge_dimension(n, 2, k));
            }
        }
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-5i64..6, 1i64..4).prop_map(|(p, q)| rat(p, q))
    }

    fn mat2() -> impl Strategy<Value = Matrix<Rational>> {
        proptest::collection::vec(small_rat(), 4).prop_map(|v| Matrix::from_rows(vec![v[..2].to_vec(), v[2..].to_vec()]))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        #[test]
        fn sym_rep_is_multiplicative(g in mat2(), h in mat2(), k in 0u32..5) {
            let lhs = sym_rep_matrix(k, &g.mul(&h)).unwrap();
            let rhs = sym_rep_matrix(k, &g).unwrap().mul(&sym_rep_matrix(k, &h).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn with_d_is_symmetric(a in small_rat(), b in small_rat(), d in small_rat(), k in 0u32..6) {
            let g = Matrix::from_rows(vec![vec![a, b.clone()], vec![b, d]]);
            let m = sym_rep_matrix_with_d(k, &g).unwrap();
            prop_assert_eq!(m.transpose(), m);
        }

        #[test]
        fn blocks_of_divisor_powers(a in small_rat(), b in small_rat(), d in small_rat()) {
            let g = Matrix::from_rows(vec![vec![a.clone(), b.clone()], vec![b.clone(), d.clone()]]);
            let beta = e2_divisor(a, b, d);
            for k in 0..=4u32 {
                for l in 0..=k / 2 {
                    let label = IrredLabel::new(l, k - 2 * l);
                    let got = block_map(k, label).unwrap().apply(&beta.pow(k)).unwrap().into_matrix();
                    let want = irred_rep_matrix(label, &g).unwrap().mul(&d_matrix(label.m));
                    prop_assert_eq!(got, want);
                }
            }
        }
    }
}
