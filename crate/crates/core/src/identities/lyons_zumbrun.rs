//! Homogeneous differential operators applied to radial functions:
//! `L(∂) f(r) = Σ_ν 1/(2^ν ν!) Δ^ν L(x) · ((1/r d/dr)^{d-ν} f)(r)` for `L` of degree `d`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::{factorial_q, int, pow2, Rational};

/// Radial functions closed under `(1/r) d/dr`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadialFamily {
    /// `r^{2k}`.
    Power(u32),
    /// `G_q(r)` with `(1/r d/dr) G_q = -G_{q+1}`.
    Bessel(Rational),
}

impl RadialFamily {
    /// `G_q` for `q > 0` with `2q` an integer.
    pub fn bessel(q: Rational) -> Result<Self> {
        if !q.is_positive() || !(&q * int(2)).is_integer() {
            return Err(Error::OutOfRange(format!("G_q needs a positive half-integer order, got {q}")));
        }
        Ok(RadialFamily::Bessel(q))
    }

    /// Parse `r^<2k>` (even exponent) or `G_<q>`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(e) = s.strip_prefix("r^") {
            let e: u32 = e.parse().map_err(|_| Error::OutOfRange(format!("bad exponent in `{s}`")))?;
            if e % 2 == 1 {
                return Err(Error::OutOfRange(format!("`{s}` is outside the family r^(2k)")));
            }
            return Ok(RadialFamily::Power(e / 2));
        }
        if let Some(q) = s.strip_prefix("G_") {
            let q = crate::poly::parse_rational(q).map_err(Error::OutOfRange)?;
            return Self::bessel(q);
        }
        Err(Error::OutOfRange(format!("`{s}` is not r^(2k) or G_q")))
    }

    /// `(1/r d/dr)^m` applied once to the family member; `None` when it vanishes.
    fn reduce(&self, m: u32) -> Option<(Rational, RadialFamily)> {
        match self {
            RadialFamily::Power(k) => {
                if m > *k {
                    return None;
                }
                let c = pow2(m as i64) * factorial_q(*k) / factorial_q(k - m);
                Some((c, RadialFamily::Power(k - m)))
            }
            RadialFamily::Bessel(q) => {
                let sign = if m.is_multiple_of(2) { 1 } else { -1 };
                Some((int(sign), RadialFamily::Bessel(q + int(m as i64))))
            }
        }
    }
}

impl fmt::Display for RadialFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadialFamily::Power(k) => write!(f, "r^{}", 2 * k),
            RadialFamily::Bessel(q) => write!(f, "G_{q}"),
        }
    }
}

/// `Σ_i poly_i(x) · f_i(|x|)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LzExpansion {
    pub n: usize,
    pub terms: Vec<(MultiPoly, RadialFamily)>,
}

impl LzExpansion {
    /// The expansion as a polynomial when every radial factor is a power `r^{2k}`.
    pub fn to_polynomial(&self) -> Option<MultiPoly> {
        let mut out = MultiPoly::zero(self.n);
        for (p, f) in &self.terms {
            match f {
                RadialFamily::Power(k) => out = &out + &(p * &MultiPoly::norm_pow(self.n, *k)),
                RadialFamily::Bessel(_) => return None,
            }
        }
        Some(out)
    }
}

impl fmt::Display for LzExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, g)| format!("({p})·{g}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn lyons_zumbrun_apply(l: &MultiPoly, f: &RadialFamily) -> Result<LzExpansion> {
    let d = l.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let n = l.nvars();
    let mut terms = Vec::new();
    let mut lap = l.clone();
    for nu in 0..=d / 2 {
        if nu > 0 {
            lap = lap.laplacian();
        }
        if lap.is_zero() {
            break;
        }
        if let Some((c, g)) = f.reduce(d - nu) {
            let w = c / (pow2(nu as i64) * factorial_q(nu));
            if !w.is_zero() {
                terms.push((lap.scale(&w), g));
            }
        }
    }
    Ok(LzExpansion { n, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::apply_diffop;
    use crate::scalar::rat;

    #[test]
    fn agrees_with_direct_differentiation() {
        let n = 3;
        let x1 = MultiPoly::var(n, 0);
        let e = lyons_zumbrun_apply(&x1, &RadialFamily::Power(1)).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.to_polynomial().unwrap(), x1.scale(&int(2)));
        let r2 = MultiPoly::norm_sq(n);
        let e = lyons_zumbrun_apply(&r2, &RadialFamily::Power(1)).unwrap();
        assert_eq!(e.to_polynomial().unwrap(), apply_diffop(&r2, &r2));
        assert_eq!(e.to_polynomial().unwrap(), MultiPoly::constant(n, int(6)));
    }

    #[test]
    fn bessel_family_shifts_order() {
        let x1 = MultiPoly::var(2, 0);
        let e = lyons_zumbrun_apply(&x1, &RadialFamily::bessel(rat(1, 2)).unwrap()).unwrap();
        assert_eq!(e.terms, vec![(x1.scale(&int(-1)), RadialFamily::Bessel(rat(3, 2)))]);
    }

    #[test]
    fn parsing_and_rejection() {
        assert_eq!(RadialFamily::parse("r^4").unwrap(), RadialFamily::Power(2));
        assert_eq!(RadialFamily::parse("G_3/2").unwrap(), RadialFamily::Bessel(rat(3, 2)));
        assert!(RadialFamily::parse("r^3").is_err());
        assert!(RadialFamily::parse("G_0").is_err());
        assert!(RadialFamily::parse("sin(r)").is_err());
    }
}
