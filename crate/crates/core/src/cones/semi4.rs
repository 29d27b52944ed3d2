//! Extremal rays of `Semi⁴(A × A)` for `n = 3`.
//!
//! Under `α ↦ b′_α` the cone is the PSD cone of `Symm_3` cut by one
//! half-space `Δ ≥ 0`, where `Δ = x220 − x112 + 6 x004`. Its extremal rays are
//! the rank-one points, i.e. the `GL_2`-translates of `θ1²θ2²` (`Δ > 0`) and of
//! `θ1³θ2` (`Δ = 0`).

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{e2_divisor, gl_action, ClassPoly, GLMatrix, HodgeRing};
use crate::error::{Error, Result};
use crate::linalg::SymMatrix;
use crate::rep2::block_map;
use crate::schur::IrredLabel;
use crate::scalar::{int, rat, rational_sqrt, QuadSurd, Rational};

use super::{semi_via_blocks, NegativeWitness};

const N: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Semi4Pattern {
    /// `t · D_a² · D_b²` with `D_a ≠ D_b`.
    TwoTwo,
    /// `t · D_a³ · D_b`.
    ThreeOne,
}

/// The nef divisor `x²θ1 + y²θ2 + xyλ` of `v = (x, y)`, raised to `exponent`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankOneFactor {
    #[serde(serialize_with = "serialize_surds")]
    pub vector: [QuadSurd; 2],
    pub exponent: u32,
}

fn serialize_surds<S: serde::Serializer>(v: &[QuadSurd; 2], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(2))?;
    for x in v {
        seq.serialize_element(&crate::serial::surd_string(x))?;
    }
    seq.end()
}

impl RankOneFactor {
    fn divisor(&self) -> ClassPoly<QuadSurd> {
        let [x, y] = &self.vector;
        e2_divisor(x.clone() * x.clone(), x.clone() * y.clone(), y.clone() * y.clone())
    }
}

/// `α = scale · Π factorᵉ` in `N⁴(A × A)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Semi4Decomposition {
    pub pattern: Semi4Pattern,
    #[serde(serialize_with = "crate::serial::serialize_rational")]
    pub scale: Rational,
    pub factors: Vec<RankOneFactor>,
    #[serde(serialize_with = "crate::serial::serialize_rational")]
    pub delta: Rational,
    /// Radicand of the field of definition of the factors, if irrational.
    #[serde(serialize_with = "crate::serial::serialize_opt_rational")]
    pub radicand: Option<Rational>,
    /// `y² − p y + q` whose roots give the factors, in the chart used.
    pub quadratic: Option<QuadraticData>,
    /// Whether the chart swapped `θ1` and `θ2`.
    pub swapped: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadraticData {
    #[serde(serialize_with = "crate::serial::serialize_rational")]
    pub p: Rational,
    #[serde(serialize_with = "crate::serial::serialize_rational")]
    pub q: Rational,
    #[serde(serialize_with = "crate::serial::serialize_rational")]
    pub discriminant: Rational,
}

impl Semi4Decomposition {
    /// The product of the factors over `Q(√d)`, times `scale`.
    pub fn product(&self) -> ClassPoly<QuadSurd> {
        self.factors
            .iter()
            .fold(ClassPoly::constant(2, QuadSurd::rational(self.scale.clone())), |acc, f| acc.mul(&f.divisor().pow(f.exponent)))
    }

    /// The product as a rational class; fails if a coefficient is irrational.
    pub fn recompose(&self) -> Result<ClassPoly<Rational>> {
        let p = self.product();
        let terms = p
            .terms()
            .map(|(m, c)| {
                c.as_rational()
                    .map(|r| (m.clone(), r))
                    .ok_or_else(|| Error::InvalidArgument("irrational coefficient in recomposed class".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        ClassPoly::from_terms(2, 4, terms)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Semi4Outcome {
    Extremal(Box<Semi4Decomposition>),
    NotExtremal { rank: usize },
    NotInCone { witness: NegativeWitness },
}

fn delta(alpha: &ClassPoly<Rational>) -> Rational {
    alpha.x(2, 2, 0) - alpha.x(1, 1, 2) + int(6) * alpha.x(0, 0, 4)
}

/// The `det ⊗ Sym² W` block.
fn block12(alpha: &ClassPoly<Rational>) -> Result<SymMatrix<Rational>> {
    block_map(4, IrredLabel::new(1, 2))?.apply(alpha)
}

fn swap() -> GLMatrix<Rational> {
    GLMatrix::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]]).expect("swap is invertible")
}

fn surd(r: Rational) -> QuadSurd {
    QuadSurd::rational(r)
}

/// `θ1² + (p²−2q)θ1θ2 + pθ1λ + q²θ2² + pqθ2λ + qλ²`, the product of the
/// divisors of `(1, a)` and `(1, b)` for `a + b = p`, `ab = q`.
fn q_class(p: &Rational, q: &Rational) -> ClassPoly<Rational> {
    ClassPoly::from_e2(
        2,
        [
            ([2, 0, 0], int(1)),
            ([1, 1, 0], p * p - int(2) * q),
            ([1, 0, 1], p.clone()),
            ([0, 2, 0], q * q),
            ([0, 1, 1], p * q),
            ([0, 0, 2], q.clone()),
        ],
    )
    .expect("valid degree-2 class")
}

/// Splits a rank-one `α` as `t · C` with `C` rational, checked modulo the ideal.
fn scale_against(ring: &HodgeRing, alpha: &ClassPoly<Rational>, c: &ClassPoly<Rational>) -> Result<Rational> {
    let a = ring.normal_form(alpha)?;
    let b = ring.normal_form(c)?;
    let i = b.iter().position(|x| !x.is_zero()).ok_or_else(|| Error::InvalidArgument("candidate vanishes".into()))?;
    let t = &a[i] / &b[i];
    if a.iter().zip(&b).any(|(x, y)| x != &(&t * y)) {
        return Err(Error::InvalidArgument("rank-one class is not a multiple of its candidate".into()));
    }
    Ok(t)
}

fn decompose_chart(ring: &HodgeRing, alpha: &ClassPoly<Rational>) -> Result<Option<Semi4Decomposition>> {
    let b = block12(alpha)?;
    let b = b.matrix();
    if b[(0, 0)].is_zero() {
        return Ok(None);
    }
    let p = &b[(0, 1)] / &b[(0, 0)];
    let q = &b[(0, 2)] / &b[(0, 0)];
    let disc = &p * &p - int(4) * &q;
    let half = rat(1, 2);
    let (pattern, candidate, factors, radicand) = if disc.is_zero() {
        let a = &p * &half;
        let d = e2_divisor(int(1), a.clone(), &a * &a);
        let candidate = d.pow(3).mul(&ClassPoly::theta(2, 2));
        let factors = vec![
            RankOneFactor { vector: [surd(int(1)), surd(a)], exponent: 3 },
            RankOneFactor { vector: [surd(int(0)), surd(int(1))], exponent: 1 },
        ];
        (Semi4Pattern::ThreeOne, candidate, factors, None)
    } else if disc.is_positive() {
        let (root, radicand) = match rational_sqrt(&disc) {
            Some(s) => (surd(s), None),
            None => (QuadSurd::new(Rational::zero(), Rational::one(), disc.clone()), Some(disc.clone())),
        };
        let mid = surd(&p * &half);
        let off = root * surd(half);
        let factors = vec![
            RankOneFactor { vector: [surd(int(1)), mid.clone() + off.clone()], exponent: 2 },
            RankOneFactor { vector: [surd(int(1)), mid - off], exponent: 2 },
        ];
        (Semi4Pattern::TwoTwo, q_class(&p, &q).pow(2), factors, radicand)
    } else {
        return Err(Error::InvalidArgument("rank-one block with negative discriminant".into()));
    };
    let scale = scale_against(ring, alpha, &candidate)?;
    let quadratic = Some(QuadraticData { p, q, discriminant: disc });
    let dec = Semi4Decomposition { pattern, scale, factors, delta: delta(alpha), radicand, quadratic, swapped: false };
    if dec.product() != candidate.scale(&dec.scale).map_coeffs(|c| surd(c.clone())) {
        return Err(Error::InvalidArgument("factors do not multiply to the candidate".into()));
    }
    Ok(Some(dec))
}

/// Classifies a degree-4 class on `A × A` (`n = 3`) against `Semi⁴` and, for
/// extremal classes, writes it as a product of nef rank-one divisors.
pub fn semi4_extremal_decompose(alpha: &ClassPoly<Rational>) -> Result<Semi4Outcome> {
    if alpha.e() != 2 {
        return Err(Error::WrongAmbient { expected: 2, reason: format!("class on A^{}", alpha.e()) });
    }
    if alpha.degree() != 4 {
        return Err(Error::InvalidArgument(format!("expected a degree-4 class, got degree {}", alpha.degree())));
    }
    let cert = semi_via_blocks(alpha, N)?;
    if let Some(witness) = cert.witness {
        return Ok(Semi4Outcome::NotInCone { witness });
    }
    let rank = block12(alpha)?.rank();
    if rank != 1 {
        return Ok(Semi4Outcome::NotExtremal { rank });
    }
    let ring = HodgeRing::shared(N, 2)?;
    if let Some(dec) = decompose_chart(&ring, alpha)? {
        return Ok(Semi4Outcome::Extremal(Box::new(dec)));
    }
    let swapped = gl_action(&swap(), alpha)?;
    if let Some(mut dec) = decompose_chart(&ring, &swapped)? {
        for f in &mut dec.factors {
            f.vector.swap(0, 1);
        }
        dec.delta = delta(alpha);
        dec.swapped = true;
        return Ok(Semi4Outcome::Extremal(Box::new(dec)));
    }
    let candidate = ClassPoly::from_e2(4, [([2, 2, 0], int(1))])?;
    let scale = scale_against(&ring, alpha, &candidate)?;
    let factors = vec![
        RankOneFactor { vector: [surd(int(1)), surd(int(0))], exponent: 2 },
        RankOneFactor { vector: [surd(int(0)), surd(int(1))], exponent: 2 },
    ];
    Ok(Semi4Outcome::Extremal(Box::new(Semi4Decomposition {
        pattern: Semi4Pattern::TwoTwo,
        scale,
        factors,
        delta: delta(alpha),
        radicand: None,
        quadratic: None,
        swapped: false,
    })))
}

/// `Δ` of a degree-4 class on `A × A`.
pub fn semi4_delta(alpha: &ClassPoly<Rational>) -> Rational {
    delta(alpha)
}
