//! Scalar abstractions shared by every module.
//!
//! Polynomial code only needs a commutative [`Ring`]; linear algebra needs a
//! [`Field`] with an ordering. Exact work is done over [`Rational`]; `f64` is
//! an instance too, used only by the optional floating-point pre-pass.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number; the default scalar of the crate.
pub type Rational = BigRational;

/// Commutative ring with unit.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// Image of an integer under the canonical map `Z -> R`.
    fn from_int(n: i64) -> Self {
        let mut acc = Self::zero();
        let mut base = Self::one();
        let mut m = n.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc + base.clone();
            }
            base = base.clone() + base;
            m >>= 1;
        }
        if n < 0 {
            -acc
        } else {
            acc
        }
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + Send
        + Sync
{
}

/// Ordered field containing the rationals.
pub trait Field: Ring + Num + Div<Output = Self> + PartialOrd + Signed {
    /// `true` when arithmetic is exact and zero tests are decisive.
    const EXACT: bool;

    fn from_rational(r: &Rational) -> Self;

    fn to_f64(&self) -> f64;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for Rational {
    const EXACT: bool = true;

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Field for f64 {
    const EXACT: bool = false;

    fn from_rational(r: &Rational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

/// `p/q` as a [`Rational`]. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as a [`Rational`].
pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Factorial as a [`Rational`].
pub fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, i| acc * int(i))
}

/// Binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Multinomial coefficient `(sum parts)! / prod(parts!)`.
pub fn multinomial(parts: &[u32]) -> u128 {
    let mut total = 0i64;
    let mut acc: u128 = 1;
    for &p in parts {
        total += p as i64;
        acc *= binomial(total, p as i64);
    }
    acc
}

/// Renders a rational as `"p"` or `"p/q"` in lowest terms.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses `"p"` or `"p/q"` (no decimal point, no exponent).
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational literal: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// Closest simple rational to `x` with denominator at most `max_den`
/// (continued-fraction convergents).
pub fn rationalize(x: f64, max_den: i64) -> Rational {
    if !x.is_finite() {
        return Rational::zero();
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > max_den as i128 {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let frac = v - a;
        if frac.abs() < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    if k1 == 0 {
        return Rational::from_f64(x).unwrap_or_else(Rational::zero);
    }
    Rational::new(BigInt::from(h1), BigInt::from(k1))
}

/// Exact square root of a non-negative rational, when it exists.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Element `a + b·√d` of the quadratic field `Q(√d)`.
///
/// The radicand travels with each value. Elements built from
/// [`Zero::zero`]/[`One::one`] carry `d = 0` and adopt the radicand of the
/// first operand that has one; mixing two different radicands panics.
#[derive(Clone, Debug)]
pub struct QuadSurd {
    pub a: Rational,
    pub b: Rational,
    pub d: Rational,
}

impl QuadSurd {
    pub fn new(a: Rational, b: Rational, d: Rational) -> Self {
        QuadSurd { a, b, d }
    }

    pub fn rational(a: Rational) -> Self {
        QuadSurd { a, b: Rational::zero(), d: Rational::zero() }
    }

    /// The rational value, if the irrational part vanishes.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.b.is_zero() || self.d.is_zero() {
            Some(self.a.clone())
        } else {
            None
        }
    }

    /// Galois conjugate `a − b·√d`.
    pub fn conjugate(&self) -> Self {
        QuadSurd { a: self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }

    fn radicand(x: &Self, y: &Self) -> Rational {
        match (x.d.is_zero(), y.d.is_zero()) {
            (true, _) => y.d.clone(),
            (_, true) => x.d.clone(),
            _ => {
                assert_eq!(x.d, y.d, "mixed radicands in QuadSurd arithmetic");
                x.d.clone()
            }
        }
    }

    pub fn approx(&self) -> f64 {
        Field::to_f64(&self.a) + Field::to_f64(&self.b) * Field::to_f64(&self.d).max(0.0).sqrt()
    }
}

impl PartialEq for QuadSurd {
    fn eq(&self, other: &Self) -> bool {
        let irrational = |x: &Self| if x.d.is_zero() { Rational::zero() } else { x.b.clone() };
        self.a == other.a && irrational(self) == irrational(other)
    }
}

impl Zero for QuadSurd {
    fn zero() -> Self {
        QuadSurd::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && (self.b.is_zero() || self.d.is_zero())
    }
}

impl One for QuadSurd {
    fn one() -> Self {
        QuadSurd::rational(Rational::one())
    }
}

impl Add for QuadSurd {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = Self::radicand(&self, &rhs);
        QuadSurd { a: self.a + rhs.a, b: self.b + rhs.b, d }
    }
}

impl Sub for QuadSurd {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let d = Self::radicand(&self, &rhs);
        QuadSurd { a: self.a - rhs.a, b: self.b - rhs.b, d }
    }
}

impl Mul for QuadSurd {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = Self::radicand(&self, &rhs);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * &d;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadSurd { a, b, d }
    }
}

impl Neg for QuadSurd {
    type Output = Self;
    fn neg(self) -> Self {
        QuadSurd { a: -self.a, b: -self.b, d: self.d }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "24", "-1/2", "7/3"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn combinatorics() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(multinomial(&[2, 1, 1]), 12);
        assert_eq!(factorial(4), int(24));
        assert_eq!(<Rational as Ring>::from_int(-7), int(-7));
        assert_eq!(Ring::pow(&rat(2, 3), 3), rat(8, 27));
    }

    #[test]
    fn sqrt_and_rationalize() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rationalize(0.333333333333, 100), rat(1, 3));
        assert_eq!(rationalize(-2.5, 10), rat(-5, 2));
    }

    #[test]
    fn surd_arithmetic() {
        let r2 = QuadSurd::new(int(0), int(1), int(2));
        let sq = r2.clone() * r2.clone();
        assert_eq!(sq.as_rational(), Some(int(2)));
        let x = QuadSurd::one() + r2.clone();
        let prod = x.clone() * x.conjugate();
        assert_eq!(prod.as_rational(), Some(int(-1)));
        assert!((x.approx() - (1.0 + 2f64.sqrt())).abs() < 1e-12);
    }
}
