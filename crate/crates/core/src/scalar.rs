//! Exact scalars of the form `q · (√2)^t · (√π)^h · i^k`.
//!
//! Every constant in the exact modules (Fourier multipliers of Riesz kernels,
//! fundamental-solution normalizations, Bessel coefficients) is a rational
//! multiple of a power of `√π`, a power of `i`, and sometimes an odd power of
//! `√2`. [`SymScalar`] stores that product exactly; [`SymSum`] is a formal sum
//! over distinct bases, compared componentwise (the bases are linearly
//! independent over ℚ because π is transcendental).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `num / 2`, the half-integers that appear as Gamma arguments.
pub fn half(num: i64) -> Rational {
    rat(num, 2)
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn factorial_q(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

/// Falling factorial `a (a-1) ... (a-m+1)`.
pub fn falling(a: &Rational, m: u32) -> Rational {
    let mut acc = Rational::one();
    let mut x = a.clone();
    for _ in 0..m {
        acc *= &x;
        x -= Rational::one();
    }
    acc
}

/// Generalized binomial coefficient `a (a-1) ... (a-m+1) / m!`.
pub fn gen_binom(a: &Rational, m: u32) -> Rational {
    falling(a, m) / factorial_q(m)
}

/// Binomial coefficient with a signed lower index; zero when `m < 0`.
pub fn binom(a: &Rational, m: i64) -> Rational {
    if m < 0 {
        Rational::zero()
    } else {
        gen_binom(a, m as u32)
    }
}

pub fn pow2(e: i64) -> Rational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

pub fn pow_q(x: &Rational, e: u32) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * x)
}

/// Exact number `q · (√2)^t · (√π)^h · i^k`.
///
/// Canonical form: `q > 0` (signs are absorbed into `i²`), `t ∈ {0, 1}`
/// (even powers of `√2` are absorbed into `q`), `k ∈ {0,1,2,3}`, and the zero
/// value has `t = h = k = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymScalar {
    q: Rational,
    t: u8,
    h: i32,
    k: u8,
}

impl SymScalar {
    fn normalize(q: Rational, t: i64, h: i64, k: i64) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let mut q = q * pow2(t.div_euclid(2));
        let mut k = k.rem_euclid(4);
        if q.is_negative() {
            q = -q;
            k = (k + 2) % 4;
        }
        SymScalar { q, t: t.rem_euclid(2) as u8, h: h as i32, k: k as u8 }
    }

    /// `q · (√π)^h · i^k`.
    pub fn new(q: Rational, h: i32, k: i32) -> Self {
        Self::normalize(q, 0, h as i64, k as i64)
    }

    /// `q · (√2)^t · (√π)^h · i^k`.
    pub fn with_sqrt2(q: Rational, t: i32, h: i32, k: i32) -> Self {
        Self::normalize(q, t as i64, h as i64, k as i64)
    }

    pub fn zero() -> Self {
        SymScalar { q: Rational::zero(), t: 0, h: 0, k: 0 }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::normalize(q, 0, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn i() -> Self {
        Self::new(Rational::one(), 0, 1)
    }

    pub fn sqrt_pi() -> Self {
        Self::new(Rational::one(), 1, 0)
    }

    pub fn pi() -> Self {
        Self::new(Rational::one(), 2, 0)
    }

    /// `(√2)^e`, so `pow_sqrt2(-1) = 1/√2` and `pow_sqrt2(2q)` is `2^q`.
    pub fn pow_sqrt2(e: i64) -> Self {
        Self::normalize(Rational::one(), e, 0, 0)
    }

    /// `π^{e/2}` for any integer `e`.
    pub fn pow_sqrt_pi(e: i32) -> Self {
        Self::new(Rational::one(), e, 0)
    }

    /// Rational magnitude `q > 0` (zero for the zero value).
    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn sqrt2_power(&self) -> u8 {
        self.t
    }

    pub fn sqrt_pi_power(&self) -> i32 {
        self.h
    }

    pub fn i_power(&self) -> u8 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    /// True for real values (`k` even), including zero.
    pub fn is_real(&self) -> bool {
        self.k.is_multiple_of(2)
    }

    /// True for nonzero purely imaginary values (`k` odd).
    pub fn is_imaginary(&self) -> bool {
        self.k % 2 == 1
    }

    /// The value as a signed rational when no `√2`, `√π` or `i` factor remains.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        match (self.t, self.h, self.k) {
            (0, 0, 0) => Some(self.q.clone()),
            (0, 0, 2) => Some(-self.q.clone()),
            _ => None,
        }
    }

    /// Same `√2`, `√π` powers and `i`-parity: the two values are rational multiples.
    pub fn same_basis(&self, other: &Self) -> bool {
        self.t == other.t && self.h == other.h && self.k % 2 == other.k % 2
    }

    fn signed_q(&self) -> Rational {
        if self.k >= 2 {
            -self.q.clone()
        } else {
            self.q.clone()
        }
    }

    /// Sum of two values sharing a basis; `None` if the bases differ.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        if !self.same_basis(other) {
            return None;
        }
        Some(Self::normalize(self.signed_q() + other.signed_q(), self.t as i64, self.h as i64, (self.k % 2) as i64))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.q.recip(), -(self.t as i64), -(self.h as i64), -(self.k as i64)))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        Ok((0..e.unsigned_abs()).fold(Self::one(), |acc, _| &acc * &base))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::normalize(&self.q * c, self.t as i64, self.h as i64, self.k as i64)
    }

    /// Complex value in double precision.
    pub fn to_complex(&self) -> Complex64 {
        let mag = self.q.to_f64().unwrap_or(f64::NAN)
            * std::f64::consts::SQRT_2.powi(self.t as i32)
            * std::f64::consts::PI.sqrt().powi(self.h);
        match self.k {
            0 => Complex64::new(mag, 0.0),
            1 => Complex64::new(0.0, mag),
            2 => Complex64::new(-mag, 0.0),
            _ => Complex64::new(0.0, -mag),
        }
    }
}

impl Default for SymScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for SymScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sign = if self.k >= 2 { "-" } else { "" };
        write!(f, "{sign}{}", self.q)?;
        if self.t == 1 {
            write!(f, "·√2")?;
        }
        match self.h {
            0 => {}
            1 => write!(f, "·√π")?,
            h => write!(f, "·√π^{h}")?,
        }
        if self.k % 2 == 1 {
            write!(f, "·i")?;
        }
        Ok(())
    }
}

impl Mul<&SymScalar> for &SymScalar {
    type Output = SymScalar;
    fn mul(self, rhs: &SymScalar) -> SymScalar {
        SymScalar::normalize(
            &self.q * &rhs.q,
            self.t as i64 + rhs.t as i64,
            self.h as i64 + rhs.h as i64,
            self.k as i64 + rhs.k as i64,
        )
    }
}

impl Mul for SymScalar {
    type Output = SymScalar;
    fn mul(self, rhs: SymScalar) -> SymScalar {
        &self * &rhs
    }
}

impl Mul<&Rational> for &SymScalar {
    type Output = SymScalar;
    fn mul(self, rhs: &Rational) -> SymScalar {
        self.scale(rhs)
    }
}

/// Panics on division by zero, like integer division.
impl Div<&SymScalar> for &SymScalar {
    type Output = SymScalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &SymScalar) -> SymScalar {
        self * &rhs.recip().expect("SymScalar division by zero")
    }
}

impl Div for SymScalar {
    type Output = SymScalar;
    fn div(self, rhs: SymScalar) -> SymScalar {
        &self / &rhs
    }
}

impl Neg for SymScalar {
    type Output = SymScalar;
    fn neg(self) -> SymScalar {
        let k = self.k as i64 + 2;
        SymScalar::normalize(self.q, self.t as i64, self.h as i64, k)
    }
}

impl Neg for &SymScalar {
    type Output = SymScalar;
    fn neg(self) -> SymScalar {
        -self.clone()
    }
}

/// Basis key of a [`SymSum`] term: (`√2` power, `√π` power, `i` power mod 2).
type BasisKey = (u8, i32, u8);

/// Finite formal sum of [`SymScalar`] values over distinct bases.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymSum {
    terms: BTreeMap<BasisKey, Rational>,
}

impl SymSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_scalar(&mut self, s: &SymScalar) {
        if s.is_zero() {
            return;
        }
        let key = (s.t, s.h, s.k % 2);
        let c = s.signed_q();
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = SymScalar> + '_ {
        self.terms.iter().map(|(&(t, h, k), c)| SymScalar::normalize(c.clone(), t as i64, h as i64, k as i64))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single term, if the sum has at most one basis.
    pub fn as_scalar(&self) -> Option<SymScalar> {
        match self.terms.len() {
            0 => Some(SymScalar::zero()),
            1 => self.terms().next(),
            _ => None,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        self.terms().map(|s| s.to_complex()).sum()
    }

    pub fn abs_f64(&self) -> f64 {
        self.to_complex().norm()
    }
}

impl From<SymScalar> for SymSum {
    fn from(s: SymScalar) -> Self {
        let mut out = SymSum::zero();
        out.add_scalar(&s);
        out
    }
}

impl fmt::Display for SymSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl AddAssign<&SymScalar> for SymSum {
    fn add_assign(&mut self, rhs: &SymScalar) {
        self.add_scalar(rhs);
    }
}

impl AddAssign<&SymSum> for SymSum {
    fn add_assign(&mut self, rhs: &SymSum) {
        for s in rhs.terms() {
            self.add_scalar(&s);
        }
    }
}

impl Add<&SymSum> for &SymSum {
    type Output = SymSum;
    fn add(self, rhs: &SymSum) -> SymSum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &SymSum {
    type Output = SymSum;
    fn neg(self) -> SymSum {
        let mut out = SymSum::zero();
        for s in self.terms() {
            out.add_scalar(&-s);
        }
        out
    }
}

impl Sub<&SymSum> for &SymSum {
    type Output = SymSum;
    fn sub(self, rhs: &SymSum) -> SymSum {
        self + &(-rhs)
    }
}

impl Mul<&SymScalar> for &SymSum {
    type Output = SymSum;
    fn mul(self, rhs: &SymScalar) -> SymSum {
        let mut out = SymSum::zero();
        for s in self.terms() {
            out.add_scalar(&(&s * rhs));
        }
        out
    }
}

impl Mul<&SymSum> for &SymSum {
    type Output = SymSum;
    fn mul(self, rhs: &SymSum) -> SymSum {
        let mut out = SymSum::zero();
        for a in self.terms() {
            for b in rhs.terms() {
                out.add_scalar(&(&a * &b));
            }
        }
        out
    }
}

/// `Γ(a)` for `a > 0` with `2a` an integer.
pub fn gamma_exact(a: &Rational) -> Result<SymScalar> {
    let two_a = a * int(2);
    if !a.is_positive() || !two_a.is_integer() {
        return Err(Error::GammaArgument(a.clone()));
    }
    let two_a = two_a.to_integer();
    if two_a.is_even() {
        let m = (two_a / 2u32).to_u32().ok_or_else(|| Error::GammaArgument(a.clone()))?;
        return Ok(SymScalar::from_rational(factorial_q(m - 1)));
    }
    // Γ(m + 1/2) = √π · (1/2)(3/2)...(m - 1/2)
    let m = ((two_a - 1u32) / 2u32).to_u32().ok_or_else(|| Error::GammaArgument(a.clone()))?;
    let q = (0..m).fold(Rational::one(), |acc, i| acc * half(2 * i as i64 + 1));
    Ok(SymScalar::new(q, 1, 0))
}

fn gamma_half(num: i64) -> SymScalar {
    gamma_exact(&half(num)).expect("positive half-integer")
}

/// Fourier multiplier `γ_j = i^{-j} π^{n/2} Γ(j/2) / Γ((n+j)/2)` of the
/// degree-`j` Riesz kernel `P(x)/|x|^{n+j}`.
pub fn gamma_j(j: u32, n: u32) -> SymScalar {
    assert!(j >= 1 && n >= 2, "gamma_j needs j >= 1 and n >= 2");
    let unit = SymScalar::new(Rational::one(), n as i32, -(j as i32));
    &(&unit * &gamma_half(j as i64)) / &gamma_half((n + j) as i64)
}

/// `c_n = Γ((n-1)/2) / (2 π^{n/2} Γ(1/2))`.
pub fn c_n(n: u32) -> SymScalar {
    assert!(n >= 2, "c_n needs n >= 2");
    let den = SymScalar::new(int(2), n as i32 + 1, 0);
    &gamma_half(n as i64 - 1) / &den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_values() {
        assert_eq!(gamma_exact(&half(1)).unwrap(), SymScalar::sqrt_pi());
        assert_eq!(gamma_exact(&int(3)).unwrap(), SymScalar::from_int(2));
        assert_eq!(gamma_exact(&half(5)).unwrap(), SymScalar::new(rat(3, 4), 1, 0));
        assert!(gamma_exact(&int(0)).is_err());
        assert!(gamma_exact(&rat(1, 3)).is_err());
        assert!(gamma_exact(&half(-1)).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(gen_binom(&half(-1), 2), rat(3, 8));
        assert_eq!(gen_binom(&int(5), 2), int(10));
        assert_eq!(gen_binom(&int(2), 5), int(0));
        assert_eq!(gen_binom(&half(7), 0), int(1));
        assert_eq!(binom(&int(4), -1), int(0));
    }

    #[test]
    fn riesz_multipliers_in_the_plane() {
        assert_eq!(gamma_j(1, 2), SymScalar::new(int(2), 2, 3));
        assert_eq!(gamma_j(2, 2), SymScalar::new(int(1), 2, 2));
        let z = gamma_j(1, 2).to_complex();
        assert!((z.re).abs() < 1e-15 && (z.im + 2.0 * std::f64::consts::PI).abs() < 1e-13);
    }

    #[test]
    fn c_n_values() {
        assert_eq!(c_n(2), SymScalar::new(rat(1, 2), -2, 0));
        assert_eq!(c_n(3), SymScalar::new(rat(1, 2), -4, 0));
        assert_eq!(c_n(5), SymScalar::new(rat(1, 2), -6, 0));
        let v = c_n(2).to_complex().re;
        assert!((v - 1.0 / (2.0 * std::f64::consts::PI)).abs() < 1e-16);
    }

    #[test]
    fn canonical_form() {
        let a = SymScalar::new(int(-3), 1, 0);
        assert_eq!(a.q(), &int(3));
        assert_eq!(a.i_power(), 2);
        assert_eq!(SymScalar::new(int(0), 5, 3), SymScalar::zero());
        assert_eq!(SymScalar::pow_sqrt2(2), SymScalar::from_int(2));
        assert_eq!(SymScalar::pow_sqrt2(-3), SymScalar::with_sqrt2(rat(1, 2), -1, 0, 0));
        assert_eq!((SymScalar::i() * SymScalar::i()), SymScalar::from_int(-1));
    }

    #[test]
    fn addition_only_within_a_basis() {
        let a = SymScalar::new(int(1), 1, 1);
        let b = SymScalar::new(int(-3), 1, 3);
        assert_eq!(a.checked_add(&b).unwrap(), SymScalar::new(int(4), 1, 1));
        assert!(a.checked_add(&SymScalar::new(int(1), 2, 1)).is_none());
        assert!(a.checked_add(&SymScalar::new(int(1), 1, 0)).is_none());
        assert_eq!(a.checked_add(&-a.clone()).unwrap(), SymScalar::zero());
    }

    #[test]
    fn symsum_componentwise() {
        let mut s = SymSum::from(SymScalar::pi());
        s += &SymScalar::one();
        s += &-SymScalar::pi();
        assert_eq!(s, SymSum::from(SymScalar::one()));
        let d = &s - &s;
        assert!(d.is_zero());
    }
}
