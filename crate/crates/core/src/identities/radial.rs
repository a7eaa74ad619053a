use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{int, Rational, SymScalar, SymSum};

/// Finite sum `Σ s_i · r^{a_i} · (log r)^{e_i}` with `e_i ∈ {0, 1}`.
///
/// The same type serves as a function of `t` when differentiated with
/// [`RadialExpr::derivative`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RadialExpr {
    terms: BTreeMap<(Rational, u8), SymSum>,
}

impl RadialExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `s · r^a · (log r)^e`.
    pub fn term(s: &SymScalar, a: Rational, e: u8) -> Self {
        assert!(e <= 1, "only first powers of log are supported");
        let mut out = Self::zero();
        out.push(a, e, SymSum::from(s.clone()));
        out
    }

    fn push(&mut self, a: Rational, e: u8, c: SymSum) {
        if c.is_zero() {
            return;
        }
        let key = (a, e);
        let entry = self.terms.entry(key.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, u8, &SymSum)> {
        self.terms.iter().map(|((a, e), c)| (a, *e, c))
    }

    pub fn scale(&self, s: &SymScalar) -> Self {
        let mut out = Self::zero();
        for ((a, e), c) in &self.terms {
            out.push(a.clone(), *e, c * s);
        }
        out
    }

    /// Laplacian of the radial function in `R^n`:
    /// `Δ r^a = a(a+n-2) r^{a-2}` and
    /// `Δ(r^a log r) = a(a+n-2) r^{a-2} log r + (2a+n-2) r^{a-2}`.
    pub fn laplacian(&self, n: u32) -> Self {
        let n = int(n as i64);
        let two = int(2);
        let mut out = Self::zero();
        for ((a, e), c) in &self.terms {
            let a2 = a - &two;
            let f = a * &(a + &n - &two);
            out.push(a2.clone(), *e, c * &SymScalar::from_rational(f));
            if *e == 1 {
                let g = a * &two + &n - &two;
                out.push(a2, 0, c * &SymScalar::from_rational(g));
            }
        }
        out
    }

    pub fn laplacian_pow(&self, n: u32, k: u32) -> Self {
        (0..k).fold(self.clone(), |acc, _| acc.laplacian(n))
    }

    /// Ordinary derivative: `(t^a)' = a t^{a-1}`, `(t^a log t)' = a t^{a-1} log t + t^{a-1}`.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for ((a, e), c) in &self.terms {
            let a1 = a - Rational::one();
            out.push(a1.clone(), *e, c * &SymScalar::from_rational(a.clone()));
            if *e == 1 {
                out.push(a1, 0, c.clone());
            }
        }
        out
    }

    /// Value at `r = 1`, where every `log` factor vanishes.
    pub fn value_at_one(&self) -> SymSum {
        let mut out = SymSum::zero();
        for ((_, e), c) in &self.terms {
            if *e == 0 {
                out += c;
            }
        }
        out
    }
}

impl Add<&RadialExpr> for &RadialExpr {
    type Output = RadialExpr;
    fn add(self, rhs: &RadialExpr) -> RadialExpr {
        let mut out = self.clone();
        for ((a, e), c) in &rhs.terms {
            out.push(a.clone(), *e, c.clone());
        }
        out
    }
}

impl Neg for &RadialExpr {
    type Output = RadialExpr;
    fn neg(self) -> RadialExpr {
        self.scale(&SymScalar::from_int(-1))
    }
}

impl Sub<&RadialExpr> for &RadialExpr {
    type Output = RadialExpr;
    fn sub(self, rhs: &RadialExpr) -> RadialExpr {
        self + &(-rhs)
    }
}

impl fmt::Display for RadialExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, e), c)| {
                let lg = if *e == 1 { "·log r" } else { "" };
                if a.is_zero() {
                    format!("({c}){lg}")
                } else {
                    format!("({c})·r^{a}{lg}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn laplacian_rules() {
        let one = SymScalar::one();
        // Δ r^2 = 2n
        for n in 2..7u32 {
            let e = RadialExpr::term(&one, int(2), 0).laplacian(n);
            assert_eq!(e, RadialExpr::term(&SymScalar::from_int(2 * n as i64), int(0), 0));
        }
        // r^{2-n} is harmonic away from the origin.
        assert!(RadialExpr::term(&one, int(-1), 0).laplacian(3).is_zero());
        // log r is harmonic in the plane.
        assert!(RadialExpr::term(&one, int(0), 1).laplacian(2).is_zero());
    }

    #[test]
    fn derivative_rules() {
        let one = SymScalar::one();
        let d = RadialExpr::term(&one, rat(1, 2), 1).derivative();
        let expect = &RadialExpr::term(&SymScalar::from_rational(rat(1, 2)), rat(-1, 2), 1)
            + &RadialExpr::term(&one, rat(-1, 2), 0);
        assert_eq!(d, expect);
        assert_eq!(d.value_at_one(), SymSum::from(one));
    }
}
