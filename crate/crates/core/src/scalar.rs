//! Exact arithmetic in the field Q(i, √2).
//!
//! An element is stored as `p + q·i + r·√2 + s·i·√2` with four arbitrary
//! precision rationals. `BigRational` keeps every component in lowest terms
//! with a positive denominator, so structural equality is field equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    p: BigRational,
    q: BigRational,
    r: BigRational,
    s: BigRational,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Gaussian-rational product `(a + b i)(c + d i)`.
fn gauss_mul(a: &BigRational, b: &BigRational, c: &BigRational, d: &BigRational) -> (BigRational, BigRational) {
    (a * c - b * d, a * d + b * c)
}

impl ExactScalar {
    pub fn new(p: BigRational, q: BigRational, r: BigRational, s: BigRational) -> Self {
        ExactScalar { p, q, r, s }
    }

    /// Builds `p + q i + r √2 + s i √2` from integer components.
    pub fn from_ints(p: i64, q: i64, r: i64, s: i64) -> Self {
        ExactScalar::new(rat(p), rat(q), rat(r), rat(s))
    }

    pub fn zero() -> Self {
        ExactScalar::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        ExactScalar::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        ExactScalar::from_ints(0, 1, 0, 0)
    }

    pub fn sqrt2() -> Self {
        ExactScalar::from_ints(0, 0, 1, 0)
    }

    /// `1/√2 = √2/2`.
    pub fn inv_sqrt2() -> Self {
        ExactScalar::new(rat(0), rat(0), BigRational::new(1.into(), 2.into()), rat(0))
    }

    pub fn integer(n: i64) -> Self {
        ExactScalar::from_ints(n, 0, 0, 0)
    }

    /// The Gaussian integer `re + im·i`.
    pub fn gaussian(re: i64, im: i64) -> Self {
        ExactScalar::from_ints(re, im, 0, 0)
    }

    pub fn rational(num: i64, den: i64) -> Self {
        ExactScalar::new(BigRational::new(num.into(), den.into()), rat(0), rat(0), rat(0))
    }

    pub fn components(&self) -> [&BigRational; 4] {
        [&self.p, &self.q, &self.r, &self.s]
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero() && self.r.is_zero() && self.s.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.p.is_one() && self.q.is_zero() && self.r.is_zero() && self.s.is_zero()
    }

    /// True when the imaginary part `q + s√2` vanishes.
    pub fn is_real(&self) -> bool {
        self.q.is_zero() && self.s.is_zero()
    }

    /// True when the real part `p + r√2` vanishes.
    pub fn is_imaginary(&self) -> bool {
        self.p.is_zero() && self.r.is_zero()
    }

    /// Complex conjugation: `i ↦ −i`, `√2` fixed.
    pub fn conjugate(&self) -> Self {
        ExactScalar::new(self.p.clone(), -&self.q, self.r.clone(), -&self.s)
    }

    /// Field automorphism `√2 ↦ −√2`, `i` fixed.
    fn sqrt2_conjugate(&self) -> Self {
        ExactScalar::new(self.p.clone(), self.q.clone(), -&self.r, -&self.s)
    }

    pub fn mul_ref(&self, other: &ExactScalar) -> ExactScalar {
        // Split as a + b√2 with Gaussian rationals a = p + q i, b = r + s i.
        let (aa_re, aa_im) = gauss_mul(&self.p, &self.q, &other.p, &other.q);
        let (bb_re, bb_im) = gauss_mul(&self.r, &self.s, &other.r, &other.s);
        let (ab_re, ab_im) = gauss_mul(&self.p, &self.q, &other.r, &other.s);
        let (ba_re, ba_im) = gauss_mul(&self.r, &self.s, &other.p, &other.q);
        let two = rat(2);
        ExactScalar::new(aa_re + &two * bb_re, aa_im + &two * bb_im, ab_re + ba_re, ab_im + ba_im)
    }

    pub fn add_ref(&self, other: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.p + &other.p, &self.q + &other.q, &self.r + &other.r, &self.s + &other.s)
    }

    pub fn sub_ref(&self, other: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.p - &other.p, &self.q - &other.q, &self.r - &other.r, &self.s - &other.s)
    }

    /// Multiplicative inverse.
    ///
    /// Rationalizes against the `√2`-conjugate first, which leaves a Gaussian
    /// rational `N = x·x̃`, then divides by `N` through its complex conjugate.
    pub fn inverse(&self) -> Result<ExactScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let tilde = self.sqrt2_conjugate();
        let norm = self.mul_ref(&tilde);
        debug_assert!(norm.r.is_zero() && norm.s.is_zero());
        let modulus = &norm.p * &norm.p + &norm.q * &norm.q;
        let inv_norm = ExactScalar::new(&norm.p / &modulus, -&norm.q / &modulus, rat(0), rat(0));
        Ok(tilde.mul_ref(&inv_norm))
    }

    pub fn div_ref(&self, other: &ExactScalar) -> Result<ExactScalar> {
        Ok(self.mul_ref(&other.inverse()?))
    }

    /// Component strings `[p, q, r, s]` as used in JSON reports.
    pub fn to_strings(&self) -> [String; 4] {
        [self.p.to_string(), self.q.to_string(), self.r.to_string(), self.s.to_string()]
    }

    pub fn from_strings(parts: &[String; 4]) -> Result<ExactScalar> {
        let parse = |s: &String| s.parse::<BigRational>().map_err(|_| Error::Parse(format!("not a rational: {s}")));
        Ok(ExactScalar::new(parse(&parts[0])?, parse(&parts[1])?, parse(&parts[2])?, parse(&parts[3])?))
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        ExactScalar::zero()
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: ExactScalar) -> ExactScalar {
        self.add_ref(&rhs)
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        self.add_ref(rhs)
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: ExactScalar) -> ExactScalar {
        self.sub_ref(&rhs)
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        self.sub_ref(rhs)
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        self.mul_ref(rhs)
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(-self.p, -self.q, -self.r, -self.s)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(-&self.p, -&self.q, -&self.r, -&self.s)
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = <[String; 4]>::deserialize(deserializer)?;
        ExactScalar::from_strings(&parts).map_err(serde::de::Error::custom)
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, coeff: &BigRational, unit: &str, first: &mut bool) -> fmt::Result {
    if coeff.is_zero() {
        return Ok(());
    }
    let negative = coeff.is_negative();
    let magnitude = coeff.abs();
    if *first {
        if negative {
            write!(f, "-")?;
        }
    } else {
        write!(f, "{}", if negative { " - " } else { " + " })?;
    }
    *first = false;
    if unit.is_empty() {
        write!(f, "{magnitude}")
    } else if magnitude.is_one() {
        write!(f, "{unit}")
    } else {
        write!(f, "{magnitude}{unit}")
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        fmt_term(f, &self.p, "", &mut first)?;
        fmt_term(f, &self.q, "i", &mut first)?;
        fmt_term(f, &self.r, "√2", &mut first)?;
        fmt_term(f, &self.s, "i√2", &mut first)
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half_sqrt2() -> ExactScalar {
        ExactScalar::inv_sqrt2()
    }

    #[test]
    fn addition_examples() {
        assert!((ExactScalar::one() + ExactScalar::integer(-1)).is_zero());
        assert_eq!(ExactScalar::i() + ExactScalar::i(), ExactScalar::gaussian(0, 2));
        assert_eq!(half_sqrt2() + half_sqrt2(), ExactScalar::sqrt2());
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(ExactScalar::i() * ExactScalar::i(), ExactScalar::integer(-1));
        assert_eq!(half_sqrt2() * ExactScalar::sqrt2(), ExactScalar::one());
        let i_sqrt2 = ExactScalar::from_ints(0, 0, 0, 1);
        assert_eq!(&i_sqrt2 * &i_sqrt2, ExactScalar::integer(-2));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(ExactScalar::i().conjugate(), ExactScalar::gaussian(0, -1));
        let three_halves = ExactScalar::rational(3, 2);
        assert_eq!(three_halves.conjugate(), three_halves);
        let i_sqrt2 = ExactScalar::from_ints(0, 0, 0, 1);
        assert_eq!(i_sqrt2.conjugate(), ExactScalar::from_ints(0, 0, 0, -1));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(ExactScalar::i().inverse().unwrap(), ExactScalar::gaussian(0, -1));
        assert_eq!(ExactScalar::sqrt2().inverse().unwrap(), half_sqrt2());
        let one_plus_i = ExactScalar::gaussian(1, 1);
        let expected = ExactScalar::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::new((-1).into(), 2.into()),
            rat(0),
            rat(0),
        );
        let inv = one_plus_i.inverse().unwrap();
        assert_eq!(inv, expected);
        assert!((&one_plus_i * &inv).is_one());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(matches!(ExactScalar::zero().inverse(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn mixed_element_inverse() {
        // 1 + i + √2 + i√2 has a nontrivial √2 norm
        let x = ExactScalar::from_ints(1, 1, 1, 1);
        assert!((&x * &x.inverse().unwrap()).is_one());
    }

    #[test]
    fn json_components() {
        let x = ExactScalar::new(
            BigRational::new(1.into(), 2.into()),
            rat(-3),
            rat(0),
            BigRational::new(7.into(), 4.into()),
        );
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"["1/2","-3","0","7/4"]"#);
        let back: ExactScalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn display() {
        assert_eq!(ExactScalar::from_ints(1, -1, 0, 2).to_string(), "1 - i + 2i√2");
        assert_eq!(ExactScalar::gaussian(0, -1).to_string(), "-i");
        assert_eq!(ExactScalar::zero().to_string(), "0");
    }
}
