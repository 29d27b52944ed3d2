use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{generator_count, kunneth_degree, ClassPoly, KunnethDegree, Monomial};
use crate::error::{Error, Result};
use crate::linalg::SparseEchelon;
use crate::scalar::{multinomial, Rational};
use crate::schur;

/// Generators of the relation ideal in degree `n + 1`: the Künneth-graded
/// pieces of `(Σ θ_i + Σ λ_jk)^{n+1}`.
///
/// Each generator is scaled to a primitive integer polynomial whose leading
/// monomial (first in canonical order) has a positive coefficient. The list
/// is sorted by Künneth degree, largest first.
pub fn relation_generators(n: u32, e: usize) -> Vec<ClassPoly<Rational>> {
    let count = generator_count(e);
    let mut groups: BTreeMap<KunnethDegree, Vec<(Monomial, Rational)>> = BTreeMap::new();
    for m in Monomial::all_of_degree(count, n + 1) {
        let c = Rational::from_integer(multinomial(m.exponents()).into());
        groups.entry(kunneth_degree(&m, e)).or_default().push((m, c));
    }
    groups
        .into_iter()
        .rev()
        .map(|(_, terms)| {
            let p = ClassPoly::from_terms(e, n + 1, terms).expect("homogeneous by construction");
            primitive(&p)
        })
        .collect()
}

/// Rescales to a primitive integer polynomial with positive leading
/// coefficient.
fn primitive(p: &ClassPoly<Rational>) -> ClassPoly<Rational> {
    let Some((_, lead)) = p.terms().next() else { return p.clone() };
    let lcm = p.terms().fold(num_bigint::BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let gcd = p.terms().fold(num_bigint::BigInt::zero(), |acc, (_, c)| {
        acc.gcd(&(c.numer() * &lcm / c.denom()))
    });
    let mut s = Rational::new(lcm, gcd);
    if lead.is_negative() {
        s = -s;
    }
    p.scale(&s)
}

/// The degree-`k` piece of `N^•(A^e) = Sym^• N¹ / I`: the ideal slice in
/// echelon form together with the monomial basis of the quotient.
#[derive(Debug)]
pub struct QuotientSlice {
    k: u32,
    e: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    echelon: SparseEchelon<Rational>,
    basis: Vec<usize>,
}

impl QuotientSlice {
    fn build(n: u32, e: usize, k: u32) -> Self {
        let monomials = Monomial::all_of_degree(generator_count(e), k);
        let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut echelon = SparseEchelon::new();
        if k > n {
            let multipliers = Monomial::all_of_degree(generator_count(e), k - n - 1);
            for r in relation_generators(n, e) {
                for m in &multipliers {
                    let row: BTreeMap<usize, Rational> = r.terms().map(|(rm, c)| (index[&rm.mul(m)], c.clone())).collect();
                    echelon.insert(row);
                }
            }
        }
        let basis = (0..monomials.len()).filter(|c| !echelon.is_pivot(*c)).collect();
        QuotientSlice { k, e, monomials, index, echelon, basis }
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Dimension of `N^k(A^e)`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Rank of the ideal slice `I_k`.
    pub fn ideal_rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Monomials whose classes form the quotient basis, in canonical order.
    pub fn basis(&self) -> Vec<&Monomial> {
        self.basis.iter().map(|&c| &self.monomials[c]).collect()
    }

    /// Coordinates of `p` in the quotient basis.
    pub fn normal_form(&self, p: &ClassPoly<Rational>) -> Result<Vec<Rational>> {
        if p.e() != self.e {
            return Err(Error::WrongAmbient { expected: self.e, reason: format!("class on A^{}", p.e()) });
        }
        if p.degree() != self.k {
            return Err(Error::InvalidArgument(format!("class of degree {} in slice of degree {}", p.degree(), self.k)));
        }
        let v: BTreeMap<usize, Rational> = p.terms().map(|(m, c)| (self.index[m], c.clone())).collect();
        let r = self.echelon.reduce(v);
        Ok(self.basis.iter().map(|c| r.get(c).cloned().unwrap_or_else(Rational::zero)).collect())
    }

    /// Representative of `p` supported on basis monomials.
    pub fn reduce(&self, p: &ClassPoly<Rational>) -> Result<ClassPoly<Rational>> {
        let coords = self.normal_form(p)?;
        ClassPoly::from_terms(self.e, self.k, self.basis.iter().map(|&c| self.monomials[c].clone()).zip(coords))
    }
}

/// `N^•(A^e)` for a given `n = dim A`, with lazily built, cached ideal slices.
#[derive(Debug)]
pub struct HodgeRing {
    n: u32,
    e: usize,
    slices: Mutex<HashMap<u32, Arc<QuotientSlice>>>,
}

impl HodgeRing {
    pub fn new(n: u32, e: usize) -> Result<Self> {
        if n == 0 || e == 0 {
            return Err(Error::InvalidArgument(format!("need n ≥ 1 and e ≥ 1, got n = {n}, e = {e}")));
        }
        Ok(HodgeRing { n, e, slices: Mutex::new(HashMap::new()) })
    }

    /// Process-wide instance for `(n, e)`, so that slices are shared.
    pub fn shared(n: u32, e: usize) -> Result<Arc<HodgeRing>> {
        static RINGS: crate::Registry<(u32, usize), HodgeRing> = OnceLock::new();
        let mut rings = RINGS.get_or_init(Default::default).lock().expect("ring registry poisoned");
        if let Some(r) = rings.get(&(n, e)) {
            return Ok(r.clone());
        }
        let r = Arc::new(HodgeRing::new(n, e)?);
        rings.insert((n, e), r.clone());
        Ok(r)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn e(&self) -> usize {
        self.e
    }

    /// Top degree `n·e`.
    pub fn top_degree(&self) -> u32 {
        self.n * self.e as u32
    }

    pub fn slice(&self, k: u32) -> Result<Arc<QuotientSlice>> {
        if k > self.top_degree() {
            return Err(Error::DegreeOutOfRange { degree: k, max: self.top_degree() });
        }
        if let Some(s) = self.slices.lock().expect("slice cache poisoned").get(&k) {
            return Ok(s.clone());
        }
        // Built outside the lock; a concurrent duplicate build yields the same slice.
        let built = Arc::new(QuotientSlice::build(self.n, self.e, k));
        let mut cache = self.slices.lock().expect("slice cache poisoned");
        Ok(cache.entry(k).or_insert(built).clone())
    }

    pub fn normal_form(&self, p: &ClassPoly<Rational>) -> Result<Vec<Rational>> {
        self.slice(p.degree())?.normal_form(p)
    }

    pub fn is_zero(&self, p: &ClassPoly<Rational>) -> Result<bool> {
        Ok(self.normal_form(p)?.iter().all(Zero::is_zero))
    }

    pub fn equal(&self, p: &ClassPoly<Rational>, q: &ClassPoly<Rational>) -> Result<bool> {
        self.is_zero(&p.sub(q))
    }

    /// Dimension of `N^k(A^e)` as the rank of the quotient.
    pub fn quotient_rank(&self, k: u32) -> Result<usize> {
        Ok(self.slice(k)?.dim())
    }
}

/// `dim N^k(A^e)` from the Young-diagram description.
pub fn hodge_dimension(n: u32, e: usize, k: u32) -> u128 {
    schur::enumerate_hodge_diagrams(n, e, k).iter().map(|d| schur::schur_dim(d, e)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GeneratorId;
    use crate::scalar::{binomial, int};

    type P = ClassPoly<Rational>;

    fn e2(terms: &[([u32; 3], i64)], deg: u32) -> P {
        P::from_e2(deg, terms.iter().map(|(m, c)| (*m, int(*c)))).unwrap()
    }

    #[test]
    fn relations_n2_e2() {
        let want = vec![
            e2(&[([3, 0, 0], 1)], 3),
            e2(&[([2, 0, 1], 1)], 3),
            e2(&[([2, 1, 0], 1), ([1, 0, 2], 1)], 3),
            e2(&[([1, 1, 1], 6), ([0, 0, 3], 1)], 3),
            e2(&[([1, 2, 0], 1), ([0, 1, 2], 1)], 3),
            e2(&[([0, 2, 1], 1)], 3),
            e2(&[([0, 3, 0], 1)], 3),
        ];
        assert_eq!(relation_generators(2, 2), want);
    }

    #[test]
    fn relation_counts() {
        for (n, e) in [(1u32, 2usize), (2, 2), (3, 2), (2, 3), (1, 3), (2, 4)] {
            let rels = relation_generators(n, e);
            assert_eq!(rels.len() as u128, binomial(2 * n as i64 + 1 + e as i64, 2 * n as i64 + 2), "n={n} e={e}");
            let mut degrees: Vec<_> = rels.iter().map(|r| kunneth_degree(r.terms().next().unwrap().0, e)).collect();
            degrees.dedup();
            assert_eq!(degrees.len(), rels.len());
            let mut ech = SparseEchelon::new();
            let idx: HashMap<Monomial, usize> =
                Monomial::all_of_degree(generator_count(e), n + 1).into_iter().enumerate().map(|(i, m)| (m, i)).collect();
            for r in &rels {
                assert!(ech.insert(r.terms().map(|(m, c)| (idx[m], c.clone())).collect()));
            }
        }
    }

    #[test]
    fn lambda_cubed_reduces() {
        let ring = HodgeRing::new(2, 2).unwrap();
        let l3 = e2(&[([0, 0, 3], 1)], 3);
        let t = e2(&[([1, 1, 1], -6)], 3);
        assert_eq!(ring.normal_form(&l3).unwrap(), ring.normal_form(&t).unwrap());
        assert!(!ring.is_zero(&t).unwrap());
        assert!(ring.is_zero(&e2(&[([3, 0, 1], 1)], 4)).unwrap());
        assert!(matches!(ring.normal_form(&e2(&[([3, 1, 1], 1)], 5)), Err(Error::DegreeOutOfRange { .. })));
    }

    #[test]
    fn low_degree_is_free() {
        let ring = HodgeRing::new(3, 2).unwrap();
        for k in 0..=3 {
            let slice = ring.slice(k).unwrap();
            assert_eq!(slice.ideal_rank(), 0);
            let p = e2(&[([k, 0, 0], 2)], k);
            let mut want = vec![int(0); slice.dim()];
            want[0] = int(2);
            assert_eq!(slice.normal_form(&p).unwrap(), want);
        }
        assert!(matches!(ring.slice(7), Err(Error::DegreeOutOfRange { degree: 7, max: 6 })));
    }

    #[test]
    fn ideal_absorbs_relations() {
        for (n, e) in [(2u32, 2usize), (1, 3)] {
            let ring = HodgeRing::new(n, e).unwrap();
            for r in relation_generators(n, e) {
                for d in 0..=(n * e as u32 - n - 1) {
                    for m in Monomial::all_of_degree(generator_count(e), d) {
                        assert!(ring.is_zero(&r.mul(&P::monomial(m, int(1), e))).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn dimensions_agree() {
        for n in 1..=3u32 {
            for e in 1..=3usize {
                let ring = HodgeRing::new(n, e).unwrap();
                for k in 0..=n * e as u32 {
                    assert_eq!(ring.quotient_rank(k).unwrap() as u128, hodge_dimension(n, e, k), "n={n} e={e} k={k}");
                }
                assert_eq!(hodge_dimension(n, e, n * e as u32), 1);
            }
        }
        for e in 1..=5usize {
            assert_eq!(hodge_dimension(3, e, 1), binomial(e as i64 + 1, 2));
        }
        assert_eq!(hodge_dimension(2, 2, 2), 6);
    }

    #[test]
    fn theta_multiplication_is_injective_below_n() {
        let (n, e) = (3u32, 2usize);
        let ring = HodgeRing::new(n, e).unwrap();
        let t1 = P::generator(GeneratorId::Theta(1), e);
        for k in 0..n - 1 {
            let src = ring.slice(k).unwrap();
            let dst = ring.slice(k + 1).unwrap();
            let mut ech = SparseEchelon::new();
            for m in src.basis() {
                let img = dst.normal_form(&P::monomial(m.clone(), int(1), e).mul(&t1)).unwrap();
                ech.insert(img.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect());
            }
            assert_eq!(ech.rank(), src.dim());
        }
    }

    #[test]
    fn shared_ring_is_cached() {
        let a = HodgeRing::shared(2, 2).unwrap();
        let b = HodgeRing::shared(2, 2).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        let s1 = a.slice(3).unwrap();
        let s2 = b.slice(3).unwrap();
        assert!(Arc::ptr_eq(&s1, &s2));
    }
}
