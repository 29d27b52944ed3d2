//! Positivity cones: semipositivity certificates, extremal rays of
//! `Sym^k Psef¹`, the degree-4 decomposition on `A × A` for `n = 3`, and a
//! sampled falsifier for nefness.

mod semi4;

pub use semi4::{semi4_delta, semi4_extremal_decompose, QuadraticData, RankOneFactor, Semi4Decomposition, Semi4Outcome, Semi4Pattern};

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{divisor_matrix, rank_one_divisor, ClassPoly, GLMatrix};
use crate::error::{Error, Result};
use crate::forms::{FormOracle, IntersectionTable};
use crate::linalg::{is_psd_exact, is_psd_with_tolerance, Matrix, PsdVerdict, SymMatrix, DEFAULT_TOLERANCE};
use crate::rep2::{block_map, blocks_for, bprime_matrix, BlockMap};
use crate::scalar::{binomial, int, rat, Rational};
use crate::schur::IrredLabel;

/// Nef divisors are exactly the PSD matrices under `N¹ ≅ Symm_e`.
pub fn divisor_is_nef(alpha: &ClassPoly<Rational>) -> Result<bool> {
    let m = SymMatrix::new(divisor_matrix(alpha)?)?;
    Ok(is_psd_exact(&m).is_psd())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Semipositive,
    NotSemipositive,
}

/// Which quadratic form a check refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlockId {
    /// An irreducible summand `det^{⊗l} ⊗ Sym^m W` (only for `e = 2`).
    Irreducible { l: u32, m: u32 },
    /// The full Hermitian matrix of the form oracle.
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlockCheck {
    pub block: BlockId,
    pub multiplicity: u128,
    pub size: usize,
    pub rank: usize,
    pub psd: bool,
}

/// `vᵀ b v < 0` for one block `b`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NegativeWitness {
    pub block: BlockId,
    #[serde(serialize_with = "crate::serial::serialize_rational_vec")]
    pub vector: Vec<Rational>,
    #[serde(serialize_with = "crate::serial::serialize_rational")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SemiCertificate {
    pub verdict: Verdict,
    pub n: u32,
    pub checks: Vec<BlockCheck>,
    pub witness: Option<NegativeWitness>,
}

impl SemiCertificate {
    pub fn is_semipositive(&self) -> bool {
        self.verdict == Verdict::Semipositive
    }

    /// Recomputes every block and the witness value from scratch.
    pub fn verify(&self, alpha: &ClassPoly<Rational>) -> Result<bool> {
        for check in &self.checks {
            let m = block_matrix(alpha, self.n, check.block)?;
            if is_psd_exact(&m).is_psd() != check.psd || m.rank() != check.rank {
                return Ok(false);
            }
        }
        let all_psd = self.checks.iter().all(|c| c.psd);
        match (&self.witness, self.verdict) {
            (None, Verdict::Semipositive) => Ok(all_psd),
            (Some(w), Verdict::NotSemipositive) => {
                let m = block_matrix(alpha, self.n, w.block)?;
                let value = m.matrix().quadratic_form(&w.vector);
                Ok(value == w.value && value.is_negative())
            }
            _ => Ok(false),
        }
    }
}

fn block_matrix(alpha: &ClassPoly<Rational>, n: u32, block: BlockId) -> Result<SymMatrix<Rational>> {
    match block {
        BlockId::Irreducible { l, m } => block_map(alpha.degree(), IrredLabel::new(l, m))?.apply(alpha),
        BlockId::Oracle => FormOracle::shared(n as usize, alpha.e())?.hermitian_matrix(alpha),
    }
}

fn check_degree(alpha: &ClassPoly<Rational>, n: u32) -> Result<()> {
    let top = n * alpha.e() as u32;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if alpha.degree() > top {
        return Err(Error::DegreeOutOfRange { degree: alpha.degree(), max: top });
    }
    Ok(())
}

fn certificate(n: u32, checked: Vec<(BlockId, u128, SymMatrix<Rational>)>, tolerance: f64) -> SemiCertificate {
    let mut checks = Vec::new();
    let mut witness = None;
    for (block, multiplicity, m) in checked {
        let verdict = is_psd_with_tolerance(&m, tolerance);
        let psd = verdict.is_psd();
        if let PsdVerdict::NotPsd(w) = verdict {
            if witness.is_none() {
                witness = Some(NegativeWitness { block, vector: w.vector, value: w.value });
            }
        }
        checks.push(BlockCheck { block, multiplicity, size: m.dim(), rank: m.rank(), psd });
    }
    let verdict = if witness.is_none() { Verdict::Semipositive } else { Verdict::NotSemipositive };
    SemiCertificate { verdict, n, checks, witness }
}

/// How [`semi_membership_with`] obtains the quadratic forms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SemiRoute {
    /// Blocks for `e = 2`, the form oracle otherwise.
    #[default]
    Auto,
    Blocks,
    Oracle,
}

/// Semipositivity on `A × A` through the irreducible blocks of `∧^k W^{⊕n}`.
pub fn semi_via_blocks(alpha: &ClassPoly<Rational>, n: u32) -> Result<SemiCertificate> {
    semi_membership_with(alpha, n, SemiRoute::Blocks, DEFAULT_TOLERANCE)
}

/// Semipositivity through the full Hermitian matrix of the form oracle.
pub fn semi_via_oracle(alpha: &ClassPoly<Rational>, n: u32) -> Result<SemiCertificate> {
    semi_membership_with(alpha, n, SemiRoute::Oracle, DEFAULT_TOLERANCE)
}

pub fn semi_membership(alpha: &ClassPoly<Rational>, n: u32) -> Result<SemiCertificate> {
    semi_membership_with(alpha, n, SemiRoute::Auto, DEFAULT_TOLERANCE)
}

/// `tolerance` steers only the floating-point pre-pass on large matrices;
/// verdicts and witnesses are exact.
pub fn semi_membership_with(alpha: &ClassPoly<Rational>, n: u32, route: SemiRoute, tolerance: f64) -> Result<SemiCertificate> {
    check_degree(alpha, n)?;
    let blocks = match route {
        SemiRoute::Auto => alpha.e() == 2,
        SemiRoute::Blocks => true,
        SemiRoute::Oracle => false,
    };
    if !blocks {
        let h = FormOracle::shared(n as usize, alpha.e())?.hermitian_matrix(alpha)?;
        return Ok(certificate(n, vec![(BlockId::Oracle, 1, h)], tolerance));
    }
    if alpha.e() != 2 {
        return Err(Error::WrongAmbient { expected: 2, reason: format!("class on A^{}", alpha.e()) });
    }
    let checked = blocks_for(n, alpha.degree())?
        .into_iter()
        .map(|(b, mult)| Ok((BlockId::Irreducible { l: b.label.l, m: b.label.m }, mult, b.apply(alpha)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(certificate(n, checked, tolerance))
}

/// Distinct block maps whose PSD conditions cut out `Semi^k(A × A)`.
pub fn semi_inequalities(n: u32, k: u32) -> Result<Vec<Arc<BlockMap>>> {
    Ok(blocks_for(n, k)?.into_iter().map(|(b, _)| b).collect())
}

/// A product `g_1θ_1 ⋯ g_kθ_1` of nef rank-one divisors `v_i v_iᵀ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RaySample {
    /// First columns `v_i` of the `g_i`.
    #[serde(serialize_with = "crate::serial::serialize_rational_vecs")]
    pub vectors: Vec<Vec<Rational>>,
    #[serde(skip)]
    pub class: ClassPoly<Rational>,
}

impl RaySample {
    pub fn from_vectors(vectors: Vec<Vec<Rational>>, e: usize) -> Self {
        let class = vectors.iter().fold(ClassPoly::constant(e, Rational::one()), |acc, v| acc.mul(&rank_one_divisor(v)));
        RaySample { vectors, class }
    }

    pub fn degree(&self) -> u32 {
        self.vectors.len() as u32
    }

    /// Invertible `g_i` with first column `v_i`, completed by standard basis vectors.
    pub fn matrices(&self) -> Vec<GLMatrix<Rational>> {
        self.vectors
            .iter()
            .map(|v| {
                let e = v.len();
                let pivot = v.iter().position(|x| !x.is_zero()).expect("non-zero sample vector");
                let others: Vec<usize> = (0..e).filter(|&i| i != pivot).collect();
                let m = Matrix::from_fn(e, e, |i, j| match j {
                    0 => v[i].clone(),
                    _ => {
                        if i == others[j - 1] {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    }
                });
                GLMatrix::new(m).expect("completion is invertible")
            })
            .collect()
    }
}

const GRID: i64 = 12;

fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-GRID..=GRID), rng.gen_range(1..=GRID))
}

/// Rational point on the unit sphere in `Q^e` (inverse stereographic
/// projection), or a coordinate axis with probability 1/8.
fn sample_direction<R: Rng>(rng: &mut R, e: usize) -> Vec<Rational> {
    if rng.gen_range(0..8) == 0 {
        let i = rng.gen_range(0..e);
        return (0..e).map(|j| if i == j { int(1) } else { int(0) }).collect();
    }
    let t: Vec<Rational> = (0..e - 1).map(|_| random_rational(rng)).collect();
    let norm2 = t.iter().fold(Rational::zero(), |a, x| a + x * x);
    let den = &norm2 + int(1);
    let mut v: Vec<Rational> = t.iter().map(|x| int(2) * x / &den).collect();
    v.push((int(1) - &norm2) / &den);
    v
}

fn task_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// `count` elements of `E_k` on `A^e`; sample `i` depends only on `(seed, i)`.
pub fn sample_ek(k: u32, e: usize, count: usize, seed: u64) -> Vec<RaySample> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = task_rng(seed, i as u64);
            let vectors = (0..k).map(|_| sample_direction(&mut rng, e)).collect();
            RaySample::from_vectors(vectors, e)
        })
        .collect()
}

/// Rank of `b′` for a class on `A × A` of degree `k ≤ n`.
pub fn extremality_rank(alpha: &ClassPoly<Rational>, n: u32) -> Result<usize> {
    if alpha.degree() > n {
        return Err(Error::DegreeOutOfRange { degree: alpha.degree(), max: n });
    }
    Ok(bprime_matrix(alpha)?.rank())
}

/// The `det^{⊗k}` block of a degree-`2k` class on `A × A`, scaled so that
/// `θ1^k θ2^k ↦ 1`.
pub fn mu_top_coefficient(alpha: &ClassPoly<Rational>, n: u32) -> Result<Rational> {
    if alpha.e() != 2 {
        return Err(Error::WrongAmbient { expected: 2, reason: format!("class on A^{}", alpha.e()) });
    }
    let d = alpha.degree();
    if d % 2 == 1 {
        return Err(Error::InvalidArgument(format!("degree {d} is odd")));
    }
    if d > 2 * n {
        return Err(Error::DegreeOutOfRange { degree: d, max: 2 * n });
    }
    let k = d / 2;
    let b = block_map(d, IrredLabel::new(k, 0))?;
    let value = b.apply(alpha)?.matrix()[(0, 0)].clone();
    Ok(value * Rational::from_integer(binomial(d as i64, k as i64).into()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NefViolation {
    pub index: usize,
    pub sample: RaySample,
    #[serde(serialize_with = "crate::serial::serialize_rational")]
    pub value: Rational,
}

/// Outcome of [`nef_sampled_check`]. Absence of a violation proves nothing.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NefReport {
    pub necessary_condition_only: bool,
    pub samples: usize,
    pub seed: u64,
    #[serde(serialize_with = "crate::serial::serialize_opt_rational")]
    pub min_value: Option<Rational>,
    pub violation: Option<NefViolation>,
}

impl NefReport {
    pub fn has_violation(&self) -> bool {
        self.violation.is_some()
    }
}

/// Pairs `α` with `samples` products of `ne − k` nef rank-one divisors; a
/// negative value disproves nefness. Reports the lowest-index violation.
pub fn nef_sampled_check(alpha: &ClassPoly<Rational>, n: u32, samples: usize, seed: u64) -> Result<NefReport> {
    check_degree(alpha, n)?;
    let e = alpha.e();
    let table = IntersectionTable::shared(n, e);
    let codim = n * e as u32 - alpha.degree();
    let draws = sample_ek(codim, e, samples, seed);
    let values: Vec<Rational> = draws.par_iter().map(|s| table.top_pairing(alpha, &s.class)).collect::<Result<_>>()?;
    let min_value = values.iter().min().cloned();
    let violation = values
        .iter()
        .position(|v| v.is_negative())
        .map(|index| NefViolation { index, sample: draws[index].clone(), value: values[index].clone() });
    Ok(NefReport { necessary_condition_only: true, samples, seed, min_value, violation })
}

/// Labels of the blocks cutting out `Semi^k` for `n`, as a set.
pub fn semi_labels(n: u32, k: u32) -> Result<BTreeSet<IrredLabel>> {
    Ok(semi_inequalities(n, k)?.iter().map(|b| b.label).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{e2_divisor, gl_action, mu_class};
    use crate::linalg::Inertia;
    use proptest::prelude::*;

    type P = ClassPoly<Rational>;

    fn alpha0() -> P {
        P::from_e2(2, [([2, 0, 0], int(1)), ([1, 1, 0], int(1)), ([0, 2, 0], int(1)), ([0, 0, 2], int(1))]).unwrap()
    }

    #[test]
    fn divisor_nef_examples() {
        assert!(divisor_is_nef(&P::theta(1, 2).add(&P::theta(2, 2))).unwrap());
        assert!(!divisor_is_nef(&P::lambda(1, 2, 2)).unwrap());
        assert!(divisor_is_nef(&e2_divisor(int(1), int(1), int(1))).unwrap());
    }

    #[test]
    fn witness_battery() {
        for n in 2..=4 {
            let c = semi_membership(&alpha0(), n).unwrap();
            let w = c.witness.clone().unwrap();
            assert_eq!(w.block, BlockId::Irreducible { l: 1, m: 0 });
            assert_eq!(w.value, rat(-1, 2));
            assert!(c.verify(&alpha0()).unwrap());
        }
        let c = semi_membership(&mu_class(), 3).unwrap();
        let w = c.witness.unwrap();
        assert_eq!(w.block, BlockId::Irreducible { l: 0, m: 2 });
        assert_eq!(w.vector, vec![int(1), int(0), int(1)]);
        assert_eq!(w.value, int(-2));

        let t1mu = P::theta(1, 2).mul(&mu_class());
        let c = semi_membership(&t1mu, 3).unwrap();
        let w = c.witness.unwrap();
        assert_eq!(w.block, BlockId::Irreducible { l: 0, m: 3 });
        assert_eq!(w.vector, vec![int(1), int(0), int(1), int(0)]);
        assert_eq!(w.value, int(-2));

        let c = semi_membership(&P::theta(1, 2).mul(&alpha0()), 3).unwrap();
        assert!(c.is_semipositive());
        assert!(c.verify(&P::theta(1, 2).mul(&alpha0())).unwrap());
    }

    #[test]
    fn routes_agree_on_examples() {
        let cases = [
            (alpha0(), 2),
            (alpha0(), 3),
            (mu_class(), 2),
            (P::theta(1, 2).mul(&mu_class()), 3),
            (P::theta(1, 2).mul(&alpha0()), 3),
            (P::theta(2, 2).mul(&P::theta(1, 2)).mul(&mu_class()), 3),
        ];
        for (a, n) in cases {
            let b = semi_via_blocks(&a, n).unwrap();
            let o = semi_via_oracle(&a, n).unwrap();
            assert_eq!(b.verdict, o.verdict, "{a} n={n}");
            assert!(o.verify(&a).unwrap());
        }
    }

    fn blocks_inertia(a: &P, n: u32) -> Inertia {
        blocks_for(n, a.degree())
            .unwrap()
            .into_iter()
            .map(|(b, mult)| b.apply(a).unwrap().inertia().scaled(mult as usize))
            .fold(Inertia { positive: 0, negative: 0, zero: 0 }, Inertia::plus)
    }

    #[test]
    fn block_inertia_matches_oracle() {
        let a = P::theta(2, 2).mul(&P::theta(1, 2)).mul(&mu_class());
        let o = FormOracle::shared(3, 2).unwrap().hermitian_matrix(&a).unwrap().inertia();
        assert_eq!(blocks_inertia(&a, 3), o);
    }

    #[test]
    fn sampling_is_deterministic_and_extremal() {
        let a = sample_ek(3, 2, 20, 7);
        let b = sample_ek(3, 2, 20, 7);
        assert_eq!(a, b);
        assert_ne!(a, sample_ek(3, 2, 20, 8));
        for s in &a {
            let via_g = s
                .matrices()
                .iter()
                .fold(P::constant(2, int(1)), |acc, g| acc.mul(&gl_action(g, &P::theta(1, 2)).unwrap()));
            assert_eq!(via_g, s.class);
            assert_eq!(extremality_rank(&s.class, 3).unwrap(), 1);
        }
        let control = P::theta(1, 2).add(&P::theta(2, 2)).mul(&P::theta(1, 2).pow(2));
        assert_eq!(extremality_rank(&control, 3).unwrap(), 2);
        assert_eq!(extremality_rank(&P::theta(1, 2).pow(3), 3).unwrap(), 1);
    }

    #[test]
    fn mu_top_examples() {
        assert_eq!(mu_top_coefficient(&mu_class().pow(2), 3).unwrap(), int(30));
        let t = P::from_e2(4, [([2, 2, 0], int(1))]).unwrap();
        assert_eq!(mu_top_coefficient(&t, 3).unwrap(), int(1));
        assert!(mu_top_coefficient(&mu_class(), 1).unwrap() > Rational::zero());
    }

    #[test]
    fn mu_scales_by_det_squared() {
        let g = GLMatrix::from_rows(vec![vec![int(3), rat(1, 2)], vec![int(-2), int(5)]]).unwrap();
        let det = g.determinant();
        assert_eq!(gl_action(&g, &mu_class()).unwrap(), mu_class().scale(&(&det * &det)));
    }

    #[test]
    fn nef_sampling_examples() {
        let r = nef_sampled_check(&mu_class(), 2, 300, 1).unwrap();
        assert!(r.necessary_condition_only);
        assert!(!r.has_violation());
        let r = nef_sampled_check(&P::theta(1, 2).mul(&mu_class()), 3, 300, 1).unwrap();
        assert!(!r.has_violation());
        let neg = P::theta(1, 2).pow(2).neg();
        let r = nef_sampled_check(&neg, 2, 50, 3).unwrap();
        let v = r.violation.unwrap();
        let table = IntersectionTable::new(2, 2);
        assert_eq!(v.value, -table.top_pairing(&P::theta(1, 2).pow(2), &v.sample.class).unwrap());
    }

    #[test]
    fn dimension_independence() {
        for k in 1..=3 {
            assert_eq!(semi_labels(k, k).unwrap(), semi_labels(k + 1, k).unwrap());
        }
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-3i64..4, 1i64..3).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn pullback_preserves_semipositivity(cs in proptest::collection::vec(small_rat(), 6)) {
            let a = P::from_terms(2, 2, crate::algebra::Monomial::all_of_degree(3, 2).into_iter().zip(cs)).unwrap();
            let up = a.pullback(3).unwrap();
            let lo = semi_via_blocks(&a, 2).unwrap();
            let hi = semi_via_oracle(&up, 2).unwrap();
            prop_assert_eq!(lo.verdict, hi.verdict);
        }
    }
}
