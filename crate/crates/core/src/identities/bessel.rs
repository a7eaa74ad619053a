//! Bessel-type series `G_q(r) = Σ_i (-1)^i r^{2i} / (i! Γ(q+i+1) 2^{2i+q})` and the
//! expansion coefficients `a^N_{2p+1}` built from them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::fundamental::c_ljk;
use crate::scalar::{c_n, factorial_q, gamma_exact, gen_binom, half, int, pow2, rat, Rational, SymScalar, SymSum};

/// Coefficient of `r^{2i}` in `G_q`: `(-1)^i / (i! Γ(q+i+1) 2^{2i+q})`.
pub fn bessel_g_coeff(q: &Rational, i: u32) -> SymScalar {
    let sign = if i.is_multiple_of(2) { 1 } else { -1 };
    let g = gamma_exact(&(q + int(i as i64 + 1))).expect("q + i + 1 is a positive half-integer");
    let two_q = (q * int(2)).to_integer();
    let p2 = SymScalar::pow_sqrt2(i64::try_from(two_q).expect("small order"));
    let den = &(&g * &p2).scale(&(factorial_q(i) * pow2(2 * i as i64)));
    &SymScalar::from_int(sign) / den
}

/// `G_q(r)` summed over the first `terms` coefficients in double precision.
pub fn bessel_g_series(q: &Rational, r: f64, terms: u32) -> f64 {
    let r2 = r * r;
    let mut pow = 1.0;
    let mut acc = 0.0;
    for i in 0..terms {
        acc += bessel_g_coeff(q, i).to_complex().re * pow;
        pow *= r2;
    }
    acc
}

/// Value linear in the formal symbols `P_{2j+1}(ξ₀)`: the map `j ↦ coefficient`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalCoefficientVector {
    entries: BTreeMap<u32, SymSum>,
}

impl FormalCoefficientVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_to(&mut self, j: u32, v: &SymSum) {
        let e = self.entries.entry(j).or_default();
        *e += v;
        if e.is_zero() {
            self.entries.remove(&j);
        }
    }

    pub fn get(&self, j: u32) -> SymSum {
        self.entries.get(&j).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, &SymSum)> {
        self.entries.iter().map(|(j, v)| (*j, v))
    }

    /// Value at concrete component values `values[j] = P_{2j+1}(ξ₀)`.
    pub fn evaluate(&self, values: &[f64]) -> Complex64 {
        self.entries.iter().map(|(j, v)| v.to_complex() * values.get(*j as usize).copied().unwrap_or(0.0)).sum()
    }
}

impl Add<&FormalCoefficientVector> for &FormalCoefficientVector {
    type Output = FormalCoefficientVector;
    fn add(self, rhs: &FormalCoefficientVector) -> FormalCoefficientVector {
        let mut out = self.clone();
        for (j, v) in rhs.entries() {
            out.add_to(j, v);
        }
        out
    }
}

impl fmt::Display for FormalCoefficientVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.entries.iter().map(|(j, v)| format!("({v})·P{}", 2 * j + 1)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `a^N_{2p+1}` from the triple sum
/// `Σ_{j<N} Σ_{s=j+1}^{N} Σ_{k=0}^{s-j-1} c_{N+s,j,k} · [r^{2i}] G_{n/2+2s-1-k}`, `i = p+1-s+k ≥ 0`.
pub fn compute_a_coeff(n: u32, big_n: u32, p: u32) -> FormalCoefficientVector {
    let h = half(n as i64);
    let mut out = FormalCoefficientVector::zero();
    for j in 0..big_n {
        let mut tot = SymSum::zero();
        for s in j + 1..=big_n {
            for k in 0..s - j {
                let i = p as i64 + 1 - s as i64 + k as i64;
                if i < 0 {
                    continue;
                }
                let q = &h + int(2 * s as i64 - 1 - k as i64);
                let term = &c_ljk(n, big_n, big_n + s, j, k) * &bessel_g_coeff(&q, i as u32);
                tot += &term;
            }
        }
        out.add_to(j, &tot);
    }
    out
}

/// `N`-independent closed form of `a_{2p+1}` for `p ≤ N-1`:
/// `(n-1) c_n Γ(1/2) (π/2)^{n/2} / (2^{2p+1} Γ(n/2+1/2) Γ(p+3/2))
///  · Σ_{j≤p} (-1)^j Γ(j+1/2)/Γ(n/2+j+1/2)
///  · Σ_{i=0}^{p-j} (-1)^i Γ(n/2+p-i+1/2) / (i! (p-i-j)! Γ(n/2+p-i+j+1))`.
pub fn a_coeff_closed_form(n: u32, p: u32) -> FormalCoefficientVector {
    let h = half(n as i64);
    let g = |a: Rational| gamma_exact(&a).expect("positive Gamma argument");
    let pi_half = &SymScalar::pow_sqrt_pi(n as i32) * &SymScalar::pow_sqrt2(-(n as i64));
    let pre = (&(&c_n(n) * &g(rat(1, 2))) * &pi_half).scale(&(int(n as i64 - 1) / pow2(2 * p as i64 + 1)));
    let pre = &(&pre / &g(&h + rat(1, 2))) / &g(int(p as i64) + rat(3, 2));
    let mut out = FormalCoefficientVector::zero();
    for j in 0..=p {
        let mut inner = SymSum::zero();
        for i in 0..=p - j {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let num = g(&h + int((p - i) as i64) + rat(1, 2));
            let den = g(&h + int((p - i + j) as i64 + 1)).scale(&(factorial_q(i) * factorial_q(p - i - j)));
            inner += &(&num / &den).scale(&int(sign));
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let outer = (&g(int(j as i64) + rat(1, 2)) / &g(&h + int(j as i64) + rat(1, 2))).scale(&int(sign));
        out.add_to(j, &(&inner * &(&pre * &outer)));
    }
    out
}

/// `a^N_{2p+1}` is the same for `N ∈ {p+1, ..., p+1+extra}` and equals the closed form.
pub fn verify_stabilization(n: u32, p: u32, extra: u32) -> bool {
    let closed = a_coeff_closed_form(n, p);
    (p + 1..=p + 1 + extra).all(|nn| compute_a_coeff(n, nn, p) == closed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecayBound {
    /// `|a_{2p+1}| ≤ C/(p! 4^p) Σ_{j≤p} ‖P_{2j+1}‖` for `p ≤ N-1`.
    Stable,
    /// `|a^N_{2p+1}| ≤ C/4^p · C(N+n/2-1/2, N)/C(N-1/2, N) · Σ_{j<N} ‖P_{2j+1}‖` for `1 < N ≤ p`.
    Tail,
}

#[derive(Clone, Debug)]
pub struct DecayRow {
    pub p: u32,
    pub bound: DecayBound,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Clone, Debug)]
pub struct DecayReport {
    /// Constant fitted at `p = 0`: the modulus of the single coefficient of `a_1`.
    pub c_fit: f64,
    pub rows: Vec<DecayRow>,
    /// `min (rhs - lhs)` over the rows.
    pub margin: f64,
    pub holds: bool,
}

/// Numerical check of the two decay bounds for `a^N_{2p+1}`, `p ≤ p_max`.
///
/// `sup_norms[j]` is `‖P_{2j+1}‖_∞` on the sphere (missing entries are zero).
/// The left side uses `Σ_j |coefficient_j| ‖P_{2j+1}‖`, an upper bound of
/// `|a_{2p+1}|` over the sphere, so the check is conservative.
pub fn verify_decay_bounds(n: u32, big_n: u32, sup_norms: &[f64], p_max: u32) -> DecayReport {
    let norm = |j: u32| sup_norms.get(j as usize).copied().unwrap_or(0.0);
    let c_fit = compute_a_coeff(n, 1, 0).get(0).abs_f64();
    let h = half(n as i64);
    let tail_ratio =
        gen_binom(&(int(big_n as i64) + &h - rat(1, 2)), big_n) / gen_binom(&(int(big_n as i64) - rat(1, 2)), big_n);
    let tail_ratio: f64 = num_traits::ToPrimitive::to_f64(&tail_ratio).unwrap_or(f64::INFINITY);
    let mut rows = Vec::new();
    for p in 0..=p_max {
        let a = compute_a_coeff(n, big_n, p);
        let lhs: f64 = a.entries().map(|(j, v)| v.abs_f64() * norm(j)).sum();
        let four_p = 4f64.powi(p as i32);
        let (bound, rhs) = if p < big_n {
            let fact: f64 = (1..=p).map(|k| k as f64).product();
            (DecayBound::Stable, c_fit / (fact * four_p) * (0..=p).map(norm).sum::<f64>())
        } else if big_n > 1 {
            (DecayBound::Tail, c_fit / four_p * tail_ratio * (0..big_n).map(norm).sum::<f64>())
        } else {
            continue;
        };
        rows.push(DecayRow { p, bound, lhs, rhs });
    }
    let margin = rows.iter().map(|r| r.rhs - r.lhs).fold(f64::INFINITY, f64::min);
    let holds = rows.iter().all(|r| r.lhs <= r.rhs * (1.0 + 1e-12));
    DecayReport { c_fit, rows, margin, holds }
}

/// Sup norm of a polynomial on the sphere, estimated on a product angle grid.
pub fn sphere_sup_estimate(p: &crate::poly::MultiPoly, per_axis: usize) -> f64 {
    let f = p.to_float();
    crate::admissibility::sphere_grid(p.nvars(), per_axis).iter().map(|x| f.eval(x).abs()).fold(0.0, f64::max)
}

/// `G_q(0)` from the leading coefficient equals `1/(2^q Γ(q+1))`.
pub fn verify_bessel_at_zero(q: &Rational) -> bool {
    let g = gamma_exact(&(q + Rational::one())).expect("positive");
    let two_q = i64::try_from((q * int(2)).to_integer()).expect("small order");
    let expect = &SymScalar::one() / &(&g * &SymScalar::pow_sqrt2(two_q));
    bessel_g_coeff(q, 0) == expect && !expect.is_zero() && !q.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_order_is_sinc() {
        for r in [0.1, 1.0, 5.0] {
            let exact = (2.0 / std::f64::consts::PI).sqrt() * f64::sin(r) / r;
            assert!((bessel_g_series(&rat(1, 2), r, 30) - exact).abs() < 1e-12);
        }
    }

    #[test]
    fn value_at_zero() {
        for two_q in 1..=12 {
            assert!(verify_bessel_at_zero(&half(two_q)));
        }
    }

    #[test]
    fn first_coefficient_single_component() {
        let a = compute_a_coeff(2, 1, 0);
        assert_eq!(a.entries().count(), 1);
        assert_eq!(a, a_coeff_closed_form(2, 0));
    }

    #[test]
    fn stabilization_small() {
        for n in [2, 3] {
            for p in 0..3 {
                assert!(verify_stabilization(n, p, 2));
            }
        }
    }

    #[test]
    fn decay_bounds_zero_kernel() {
        let r = verify_decay_bounds(3, 3, &[], 6);
        assert!(r.holds);
        assert!(r.rows.iter().all(|row| row.lhs == 0.0 && row.rhs == 0.0));
    }
}
