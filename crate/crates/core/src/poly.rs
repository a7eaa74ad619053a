//! Sparse multivariate polynomials over ℚ.
//!
//! Terms are keyed by dense exponent vectors and ordered graded-lexicographically,
//! so the last entry of the term map is the leading term used by exact division.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{gamma_exact, half, int, Rational, SymScalar};

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn over(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `n` variables with rational coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        MultiPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(n, vec![0; n], c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    /// `c · x^exps`; panics if `exps.len() != n`.
    pub fn monomial(n: usize, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), n, "exponent vector length");
        let mut p = Self::zero(n);
        p.add_term(Monomial(exps), c);
        p
    }

    /// The coordinate `x_{i+1}` (zero-based `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(n, e, Rational::one())
    }

    /// `|x|^2 = x_1^2 + ... + x_n^2`.
    pub fn norm_sq(n: usize) -> Self {
        let mut p = Self::zero(n);
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 2;
            p.add_term(Monomial(e), Rational::one());
        }
        p
    }

    /// `|x|^{2k}`.
    pub fn norm_pow(n: usize, k: u32) -> Self {
        Self::norm_sq(n).pow(k)
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: e.len() });
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// True for the zero polynomial and for polynomials whose terms share one degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_homogeneous() {
            self.degree()
        } else {
            None
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        MultiPoly { n: self.n, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.n), |acc, _| &acc * self)
    }

    /// Partial derivative in `x_{i+1}`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut d = m.0.clone();
            d[i] -= 1;
            out.add_term(Monomial(d), c * int(e as i64));
        }
        out
    }

    /// Mixed partial `∂^α`.
    pub fn partial(&self, alpha: &[u32]) -> Self {
        let mut out = self.clone();
        for (i, &a) in alpha.iter().enumerate() {
            for _ in 0..a {
                out = out.derivative(i);
                if out.is_zero() {
                    return out;
                }
            }
        }
        out
    }

    pub fn laplacian(&self) -> Self {
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            out = &out + &self.derivative(i).derivative(i);
        }
        out
    }

    pub fn laplacian_pow(&self, j: u32) -> Self {
        (0..j).fold(self.clone(), |acc, _| acc.laplacian())
    }

    pub fn is_harmonic(&self) -> bool {
        self.laplacian().is_zero()
    }

    pub fn eval_q(&self, x: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| m.0.iter().zip(x).fold(c.clone(), |acc, (&e, xi)| acc * crate::scalar::pow_q(xi, e)))
            .sum()
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.to_float().eval(x)
    }

    pub fn to_float(&self) -> FloatPoly {
        FloatPoly { terms: self.terms.iter().map(|(m, c)| (c.to_f64().unwrap_or(f64::NAN), m.0.clone())).collect() }
    }

    /// Sum of absolute values of the coefficients.
    pub fn coeff_abs_sum(&self) -> Rational {
        self.terms.values().map(|c| c.abs()).sum()
    }

    /// Parse the text format: one term per line, `coef num/den e1 ... en`.
    /// The `coef` keyword is optional and integer coefficients are accepted.
    /// Blank lines and `#` comments are ignored. `n` fixes the number of
    /// variables; otherwise it is taken from the first term.
    pub fn parse_text(text: &str, n: Option<usize>) -> std::result::Result<Self, (usize, String)> {
        let mut nv = n;
        let mut terms = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (c, exps) = parse_term_line(line).map_err(|e| (lineno + 1, e))?;
            match nv {
                None => nv = Some(exps.len()),
                Some(k) if k != exps.len() => {
                    return Err((lineno + 1, format!("expected {k} exponents, found {}", exps.len())))
                }
                _ => {}
            }
            terms.push((exps, c));
        }
        let nv = nv.ok_or((0, "no terms and no dimension given".to_string()))?;
        MultiPoly::from_terms(nv, terms).map_err(|e| (0, e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            out.push_str(&format!("coef {}/{}", c.numer(), c.denom()));
            for e in &m.0 {
                out.push_str(&format!(" {e}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn read_file(path: &Path, n: Option<usize>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse_text(&text, n).map_err(|(line, msg)| Error::Parse { path: path.to_path_buf(), line, msg })
    }
}

pub(crate) fn parse_term_line(line: &str) -> std::result::Result<(Rational, Vec<u32>), String> {
    let mut toks = line.split_whitespace().peekable();
    if toks.peek() == Some(&"coef") {
        toks.next();
    }
    let ctok = toks.next().ok_or("missing coefficient")?;
    let c = parse_rational(ctok)?;
    let exps = toks
        .map(|t| t.parse::<u32>().map_err(|_| format!("bad exponent `{t}`")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if exps.is_empty() {
        return Err("missing exponents".into());
    }
    Ok((c, exps))
}

pub(crate) fn parse_rational(tok: &str) -> std::result::Result<Rational, String> {
    let bad = || format!("bad coefficient `{tok}`");
    match tok.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.parse().map_err(|_| bad())?;
            let b: BigInt = b.parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(a, b))
        }
        None => Ok(Rational::from_integer(tok.parse().map_err(|_| bad())?)),
    }
}

fn var_name(i: usize) -> String {
    format!("x{}", i + 1)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { var_name(i) } else { format!("{}^{}", var_name(i), e) })
                    .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = MultiPoly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Polynomial with `f64` coefficients for fast repeated evaluation.
#[derive(Clone, Debug)]
pub struct FloatPoly {
    terms: Vec<(f64, Vec<u32>)>,
}

impl FloatPoly {
    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms.iter().map(|(c, e)| e.iter().zip(x).fold(*c, |acc, (&k, &xi)| acc * xi.powi(k as i32))).sum()
    }
}

/// `P(∂) Q`: every monomial `x^α` of `P` becomes the mixed partial `∂^α`.
pub fn apply_diffop(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(q.n);
    for (m, c) in &p.terms {
        out = &out + &q.partial(&m.0).scale(c);
    }
    out
}

/// Exact quotient `P / D`, or `None` when `D` does not divide `P`.
///
/// Grlex long division by the single divisor; a nonzero remainder appears as
/// soon as a leading term is not divisible by the divisor's leading monomial.
/// The quotient is verified by multiplication before it is returned.
pub fn divide_exact(p: &MultiPoly, d: &MultiPoly) -> Result<Option<MultiPoly>> {
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if p.n != d.n {
        return Err(Error::DimensionMismatch { expected: d.n, found: p.n });
    }
    let (dm, dc) = d.leading_term().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");
    let mut rem = p.clone();
    let mut quot = MultiPoly::zero(p.n);
    while let Some((m, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        if !dm.divides(&m) {
            return Ok(None);
        }
        let t = MultiPoly { n: p.n, terms: BTreeMap::from([(m.over(&dm), c / &dc)]) };
        rem = &rem - &(&t * d);
        quot = &quot + &t;
    }
    debug_assert_eq!(&quot * d, *p);
    if &quot * d != *p {
        return Ok(None);
    }
    Ok(Some(quot))
}

/// Homogeneous harmonic polynomial of a fixed degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HarmonicComponent {
    degree: u32,
    poly: MultiPoly,
}

impl HarmonicComponent {
    /// Validates homogeneity and harmonicity; the zero polynomial is rejected.
    pub fn new(poly: MultiPoly) -> Result<Self> {
        let degree =
            poly.homogeneous_degree().ok_or_else(|| Error::NotHarmonic("zero or inhomogeneous polynomial".into()))?;
        if !poly.is_harmonic() {
            return Err(Error::NotHarmonic(poly.to_string()));
        }
        Ok(HarmonicComponent { degree, poly })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly {
        self.poly
    }
}

impl fmt::Display for HarmonicComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Harmonic projection of a homogeneous polynomial of degree `d`:
/// `H = Σ_j (-1)^j |x|^{2j} Δ^j P / (2^j j! Π_{i=1..j} (n + 2d - 2 - 2i))`.
pub fn harmonic_projection(p: &MultiPoly) -> Result<MultiPoly> {
    let Some(d) = p.degree() else { return Ok(p.clone()) };
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = p.n as i64;
    let r2 = MultiPoly::norm_sq(p.n);
    let mut out = p.clone();
    let mut lap = p.clone();
    let mut radial = MultiPoly::one(p.n);
    let mut den = Rational::one();
    for j in 1..=(d / 2) as i64 {
        lap = lap.laplacian();
        if lap.is_zero() {
            break;
        }
        radial = &radial * &r2;
        den *= int(-2 * j * (n + 2 * d as i64 - 2 - 2 * j));
        out = &out + &(&radial * &lap).scale(&den.recip());
    }
    Ok(out)
}

/// Decomposition `P = Σ_k H_{d-2k} |x|^{2k}` into harmonic components.
///
/// Returns the nonzero components as `(k, H)` pairs in increasing `k`; the zero
/// polynomial decomposes into the empty list.
pub fn harmonic_decompose(p: &MultiPoly) -> Result<Vec<(u32, HarmonicComponent)>> {
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let r2 = MultiPoly::norm_sq(p.n);
    let mut out = Vec::new();
    let mut rest = p.clone();
    let mut k = 0;
    while !rest.is_zero() {
        let h = harmonic_projection(&rest)?;
        let residual = &rest - &h;
        if !h.is_zero() {
            out.push((k, HarmonicComponent::new(h)?));
        }
        rest = divide_exact(&residual, &r2)?
            .expect("the non-harmonic remainder of a homogeneous polynomial is divisible by |x|^2");
        k += 1;
    }
    Ok(out)
}

/// Recombine `Σ_k H_k |x|^{2k}`.
pub fn recombine(n: usize, parts: &[(u32, HarmonicComponent)]) -> MultiPoly {
    parts.iter().fold(MultiPoly::zero(n), |acc, (k, h)| &acc + &(&MultiPoly::norm_pow(n, *k) * h.poly()))
}

/// `∫_{S^{n-1}} x^α dσ` for the normalized surface measure.
pub fn sphere_monomial_integral(alpha: &[u32], n: usize) -> Result<SymScalar> {
    if alpha.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: alpha.len() });
    }
    if alpha.iter().any(|a| a % 2 == 1) {
        return Ok(SymScalar::zero());
    }
    let total: u32 = alpha.iter().sum();
    let mut v = &gamma_exact(&half(n as i64))? / &SymScalar::pow_sqrt_pi(n as i32);
    for &a in alpha {
        v = &v * &gamma_exact(&half(a as i64 + 1))?;
    }
    Ok(&v / &gamma_exact(&half((total + n as u32) as i64))?)
}

/// Mean of `P` over the unit sphere with the normalized surface measure.
pub fn sphere_mean(p: &MultiPoly) -> Rational {
    p.terms
        .iter()
        .map(|(m, c)| {
            let v = sphere_monomial_integral(&m.0, p.n).expect("matching dimension");
            c * v.to_rational().expect("even monomial integrals are rational")
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    fn c(n: usize, v: Rational) -> MultiPoly {
        MultiPoly::constant(n, v)
    }

    #[test]
    fn laplacian_examples() {
        assert_eq!(MultiPoly::norm_sq(2).laplacian(), c(2, int(4)));
        for n in 2..7 {
            assert_eq!(MultiPoly::norm_sq(n).laplacian(), c(n, int(2 * n as i64)));
        }
        let h3 = &x(2, 0).pow(3) - &(&x(2, 0) * &x(2, 1).pow(2)).scale(&int(3));
        assert!(h3.laplacian().is_zero());
    }

    #[test]
    fn diffop_examples() {
        let n = 3;
        assert_eq!(apply_diffop(&x(n, 0), &MultiPoly::norm_sq(n)), x(n, 0).scale(&int(2)));
        assert!(apply_diffop(&x(n, 0), &MultiPoly::one(n)).is_zero());
        let p = &x(2, 0) * &x(2, 1);
        let q = &x(2, 0).pow(2) * &x(2, 1).pow(2);
        assert_eq!(apply_diffop(&p, &q), p.scale(&int(4)));
    }

    #[test]
    fn decompose_cube() {
        for n in 2..6 {
            let p = x(n, 0).pow(3);
            let parts = harmonic_decompose(&p).unwrap();
            assert_eq!(parts.len(), 2);
            let corr = rat(3, n as i64 + 2);
            let expect_h3 = &p - &(&x(n, 0) * &MultiPoly::norm_sq(n)).scale(&corr);
            assert_eq!(parts[0].0, 0);
            assert_eq!(parts[0].1.poly(), &expect_h3);
            assert_eq!(parts[1].0, 1);
            assert_eq!(parts[1].1.poly(), &x(n, 0).scale(&corr));
            assert_eq!(recombine(n, &parts), p);
        }
    }

    #[test]
    fn decompose_trivial_cases() {
        let h3 = &x(2, 0).pow(3) - &(&x(2, 0) * &x(2, 1).pow(2)).scale(&int(3));
        let parts = harmonic_decompose(&h3).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].1.poly(), &h3);
        let parts = harmonic_decompose(&MultiPoly::norm_sq(3)).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].0, 1);
        assert_eq!(parts[0].1.poly(), &MultiPoly::one(3));
        assert!(harmonic_decompose(&MultiPoly::zero(3)).unwrap().is_empty());
        assert!(harmonic_decompose(&(&x(2, 0) + &MultiPoly::one(2))).is_err());
    }

    #[test]
    fn division_examples() {
        let h3 = &x(2, 0).pow(3) - &(&x(2, 0) * &x(2, 1).pow(2)).scale(&int(3));
        let q = divide_exact(&h3, &x(2, 0)).unwrap().unwrap();
        assert_eq!(q, &x(2, 0).pow(2) - &x(2, 1).pow(2).scale(&int(3)));
        assert!(divide_exact(&x(2, 1).pow(2), &x(2, 0)).unwrap().is_none());
        assert!(divide_exact(&MultiPoly::zero(2), &x(2, 0)).unwrap().unwrap().is_zero());
        assert!(divide_exact(&x(2, 0), &MultiPoly::zero(2)).is_err());
    }

    #[test]
    fn sphere_integrals() {
        assert!(sphere_monomial_integral(&[1, 0], 2).unwrap().is_zero());
        for n in 1..7 {
            assert_eq!(sphere_monomial_integral(&vec![0; n], n).unwrap(), SymScalar::one());
        }
        assert_eq!(sphere_monomial_integral(&[2, 0], 2).unwrap(), SymScalar::from_rational(rat(1, 2)));
        for n in 2..7 {
            let mut a = vec![0; n];
            a[0] = 2;
            assert_eq!(sphere_monomial_integral(&a, n).unwrap().to_rational().unwrap(), rat(1, n as i64));
        }
        // |x|^4 has mean 1 on the sphere.
        assert_eq!(sphere_mean(&MultiPoly::norm_pow(4, 2)), int(1));
    }

    #[test]
    fn text_round_trip() {
        let p = &x(3, 0).pow(3).scale(&rat(-2, 7)) + &(&x(3, 1) * &x(3, 2)).scale(&int(5));
        let t = p.to_text();
        assert!(t.lines().all(|l| l.starts_with("coef ")));
        assert_eq!(MultiPoly::parse_text(&t, None).unwrap(), p);
        let q = MultiPoly::parse_text("# comment\n\n3 1 0\n-1/2 0 1 # trailing\n", None).unwrap();
        assert_eq!(q, &x(2, 0).scale(&int(3)) - &x(2, 1).scale(&rat(1, 2)));
        assert!(MultiPoly::parse_text("coef 1 1 0\ncoef 1 1\n", None).is_err());
        assert!(MultiPoly::parse_text("coef 1/0 1\n", None).is_err());
    }

    #[test]
    fn grlex_leading_term() {
        let p = &x(2, 1).pow(2) + &x(2, 0);
        assert_eq!(p.leading_term().unwrap().0.exps(), &[0, 2]);
        let q = &(&x(2, 0) * &x(2, 1)) + &x(2, 1).pow(2);
        assert_eq!(q.leading_term().unwrap().0.exps(), &[1, 1]);
    }
}
