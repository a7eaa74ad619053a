//! Smooth homogeneous Calderón–Zygmund kernels `K(x) = Ω(x)/|x|^n` with polynomial `Ω`.
//!
//! A kernel is stored as its finite spherical-harmonics expansion `Ω = Σ_j P_j`
//! on the unit sphere. The numerator file format is a `dim n` line followed by
//! the polynomial text format of [`MultiPoly::parse_text`].

use std::fmt;
use std::path::Path;

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{harmonic_decompose, sphere_mean, HarmonicComponent, MultiPoly};
use crate::scalar::{gamma_j, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
    Mixed,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
            Parity::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Finite harmonic expansion of a kernel numerator, sorted by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelSpec {
    n: usize,
    components: Vec<HarmonicComponent>,
}

impl KernelSpec {
    /// Build from harmonic components; components of equal degree are merged.
    pub fn from_components(n: usize, components: Vec<HarmonicComponent>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Dimension { min: 2, got: n as u32 });
        }
        let mut merged: Vec<(u32, MultiPoly)> = Vec::new();
        for c in components {
            if c.poly().nvars() != n {
                return Err(Error::DimensionMismatch { expected: n, found: c.poly().nvars() });
            }
            if c.degree() == 0 {
                return Err(Error::DegreeZeroComponent);
            }
            match merged.iter_mut().find(|(d, _)| *d == c.degree()) {
                Some((_, p)) => *p = &*p + c.poly(),
                None => merged.push((c.degree(), c.into_poly())),
            }
        }
        merged.sort_by_key(|(d, _)| *d);
        let components = merged
            .into_iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|(_, p)| HarmonicComponent::new(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(KernelSpec { n, components })
    }

    /// Kernel whose numerator agrees with the homogeneous polynomial `w` on the sphere.
    ///
    /// Rejects a nonzero spherical mean (reporting the exact value), which is
    /// the same as a nonzero degree-0 harmonic component.
    pub fn from_polynomial(n: usize, w: &MultiPoly) -> Result<Self> {
        if w.nvars() != n {
            return Err(Error::DimensionMismatch { expected: n, found: w.nvars() });
        }
        if !w.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let mean = sphere_mean(w);
        if !mean.is_zero() {
            return Err(Error::NonzeroMean(mean));
        }
        let parts = harmonic_decompose(w)?;
        Self::from_components(n, parts.into_iter().map(|(_, h)| h).collect())
    }

    /// Numerator `x_1 + λ (n+1)(x_1^3 - 3 x_1 x_2^2)` on the sphere.
    pub fn odd_pair_family(n: usize, lambda: &Rational) -> Result<Self> {
        let x1 = MultiPoly::var(n, 0);
        let x2 = MultiPoly::var(n, 1);
        let p3 = &x1.pow(3) - &(&x1 * &x2.pow(2)).scale(&int(3));
        let mut comps = vec![HarmonicComponent::new(x1)?];
        if !lambda.is_zero() {
            comps.push(HarmonicComponent::new(p3.scale(&(lambda * int(n as i64 + 1))))?);
        }
        Self::from_components(n, comps)
    }

    /// Single-component kernel `P(x)/|x|^{n+d}` for a harmonic `P` of degree `d`.
    pub fn riesz(p: MultiPoly) -> Result<Self> {
        let n = p.nvars();
        Self::from_components(n, vec![HarmonicComponent::new(p)?])
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let (n, w) =
            parse_kernel_text(&text).map_err(|(line, msg)| Error::Parse { path: path.to_path_buf(), line, msg })?;
        Self::from_polynomial(n, &w)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[HarmonicComponent] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Component of the given degree, if present.
    pub fn component(&self, degree: u32) -> Option<&HarmonicComponent> {
        self.components.iter().find(|c| c.degree() == degree)
    }

    pub fn parity(&self) -> Parity {
        let odd = self.components.iter().all(|c| c.degree() % 2 == 1);
        let even = self.components.iter().all(|c| c.degree() % 2 == 0);
        match (odd, even) {
            (true, _) => Parity::Odd,
            (_, true) => Parity::Even,
            _ => Parity::Mixed,
        }
    }

    /// Homogeneous numerator `Σ_j P_j |x|^{D - j}` of the top degree `D`, equal to `Ω`
    /// on the sphere. Mixed parity admits no such form and yields the plain sum `Σ_j P_j`.
    pub fn homogenized(&self) -> MultiPoly {
        let top = self.components.last().map_or(0, |c| c.degree());
        let mixed = self.parity() == Parity::Mixed;
        self.components.iter().fold(MultiPoly::zero(self.n), |acc, c| {
            let term =
                if mixed { c.poly().clone() } else { &MultiPoly::norm_pow(self.n, (top - c.degree()) / 2) * c.poly() };
            &acc + &term
        })
    }

    /// `Ω(x) = Σ_j P_j(x)` at a point of the sphere.
    pub fn omega(&self, x: &[f64]) -> f64 {
        self.components.iter().map(|c| c.poly().eval(x)).sum()
    }

    /// Fourier multiplier `Σ_j γ_j P_j(ξ/|ξ|)`.
    pub fn multiplier(&self, xi: &[f64]) -> Result<Complex64> {
        if xi.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: xi.len() });
        }
        let norm = xi.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::ZeroFrequency);
        }
        let u: Vec<f64> = xi.iter().map(|v| v / norm).collect();
        Ok(self.components.iter().map(|c| gamma_j(c.degree(), self.n as u32).to_complex() * c.poly().eval(&u)).sum())
    }

    /// Kernel file text: `dim n` then the numerator in polynomial text format.
    pub fn to_text(&self) -> String {
        format!("dim {}\n{}", self.n, self.homogenized().to_text())
    }
}

/// Parse `dim n` followed by polynomial lines.
pub fn parse_kernel_text(text: &str) -> std::result::Result<(usize, MultiPoly), (usize, String)> {
    let mut dim = None;
    let mut body = String::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if dim.is_none() && !line.is_empty() {
            let mut toks = line.split_whitespace();
            if toks.next() != Some("dim") {
                return Err((i + 1, "expected `dim n` header".into()));
            }
            let n = toks.next().and_then(|t| t.parse::<usize>().ok()).ok_or((i + 1, "bad dimension".to_string()))?;
            dim = Some(n);
            body.push('\n');
            continue;
        }
        body.push_str(raw);
        body.push('\n');
    }
    let n = dim.ok_or((0, "missing `dim n` header".to_string()))?;
    let p = MultiPoly::parse_text(&body, Some(n))?;
    Ok((n, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn riesz_first_order() {
        let k = KernelSpec::from_polynomial(2, &MultiPoly::var(2, 0)).unwrap();
        assert_eq!(k.components().len(), 1);
        assert_eq!(k.components()[0].poly(), &MultiPoly::var(2, 0));
        assert_eq!(k.parity(), Parity::Odd);
        let m = k.multiplier(&[1.0, 0.0]).unwrap();
        assert!(m.re.abs() < 1e-15 && (m.im + 2.0 * std::f64::consts::PI).abs() < 1e-13);
    }

    #[test]
    fn odd_pair_from_homogeneous_numerator() {
        for n in 2..5usize {
            let x1 = MultiPoly::var(n, 0);
            let x2 = MultiPoly::var(n, 1);
            let p3 = &x1.pow(3) - &(&x1 * &x2.pow(2)).scale(&int(3));
            let w = &(&MultiPoly::norm_sq(n) * &x1) + &p3.scale(&int(n as i64 + 1));
            let k = KernelSpec::from_polynomial(n, &w).unwrap();
            assert_eq!(k.components().len(), 2);
            assert_eq!(k.components()[0].degree(), 1);
            assert_eq!(k.components()[1].degree(), 3);
            // Degree-3 part of W is already harmonic.
            assert_eq!(k.components()[1].poly(), &p3.scale(&int(n as i64 + 1)));
            assert_eq!(k.components()[0].poly(), &x1);
            assert_eq!(k, KernelSpec::odd_pair_family(n, &int(1)).unwrap());
        }
    }

    #[test]
    fn nonzero_mean_rejected_with_value() {
        for n in 2..5usize {
            match KernelSpec::from_polynomial(n, &MultiPoly::var(n, 0).pow(2)) {
                Err(Error::NonzeroMean(v)) => assert_eq!(v, rat(1, n as i64)),
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn degree_zero_component_rejected() {
        let c = HarmonicComponent::new(MultiPoly::one(2)).unwrap();
        assert!(matches!(KernelSpec::from_components(2, vec![c]), Err(Error::DegreeZeroComponent)));
    }

    #[test]
    fn multiplier_vanishes_at_pole_for_unit_lambda() {
        for n in 2..6usize {
            let k = KernelSpec::odd_pair_family(n, &int(1)).unwrap();
            let mut xi = vec![0.0; n];
            xi[0] = 1.0;
            assert!(k.multiplier(&xi).unwrap().norm() < 1e-12);
        }
    }

    #[test]
    fn kernel_file_round_trip() {
        let k = KernelSpec::odd_pair_family(3, &rat(1, 2)).unwrap();
        let (n, w) = parse_kernel_text(&k.to_text()).unwrap();
        assert_eq!(n, 3);
        assert_eq!(KernelSpec::from_polynomial(n, &w).unwrap(), k);
        assert!(parse_kernel_text("coef 1 1 0\n").is_err());
        assert!(KernelSpec::from_polynomial(2, &MultiPoly::var(2, 0)).unwrap().multiplier(&[0.0, 0.0]).is_err());
    }
}
