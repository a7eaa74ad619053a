//! Admissibility test for odd polynomial kernels.
//!
//! For an odd kernel with harmonic components `P_{2j+1}` and lowest nonzero
//! component `P_{2j₀+1}`, the maximal operator `T*` is controlled by `T`
//! exactly when `P_{2j₀+1}` divides every `P_{2j+1}` and the quotient sum
//! `Σ_j γ_{2j+1} Q_{2j-2j₀}` has no zero on the unit sphere.
//!
//! Divisibility is decided exactly. Non-vanishing is certified by
//! branch-and-bound over boxes in spherical coordinates: a box is certified
//! when `|F(anchor)| - L·ρ > 0`, where `L` bounds the gradient of `F` on the
//! sphere and `ρ` bounds the distance from the anchor to any point of the box.
//! Zeros are found either exactly at an anchor or by bisection between two
//! anchors of opposite sign.

use std::fmt;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernel::{KernelSpec, Parity};
use crate::poly::{divide_exact, FloatPoly, HarmonicComponent, MultiPoly};
use crate::scalar::{gamma_j, Rational, SymScalar};

/// Default maximal subdivision level of the certification search.
pub const DEFAULT_DEPTH: u32 = 14;

/// `|F|` below this value at a sample point counts as a zero.
pub const ZERO_TOL: f64 = 1e-10;

const MAX_LIVE_BOXES: usize = 4_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    FailDivisibility,
    FailVanishing,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::FailDivisibility => "FAIL(divisibility)",
            Verdict::FailVanishing => "FAIL(vanishing)",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MinBound {
    /// Rigorous lower bound on `min |F|` over the sphere.
    Certified(f64),
    /// `F` has a zero on the sphere.
    Vanishes,
}

impl fmt::Display for MinBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinBound::Certified(v) => write!(f, "{v:.6e}"),
            MinBound::Vanishes => f.write_str("vanishes"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub dim: usize,
    pub divisor: HarmonicComponent,
    /// `(degree of P_{2j+1}, quotient by the divisor)`; `None` where division fails.
    pub quotients: Vec<(u32, Option<MultiPoly>)>,
    pub divisibility_ok: bool,
    /// Shared factor `γ_{2j₀+1}`; the γ-weighted quotient sum is `unit · F`.
    pub unit: SymScalar,
    /// Real quotient sum `F = Σ_j (γ_{2j+1}/γ_{2j₀+1}) Q_{2j-2j₀}`.
    pub real_sum: Option<MultiPoly>,
    /// Gradient bound `L` for `F` on the sphere.
    pub lipschitz: f64,
    /// Bound on `min |unit · F|` over the sphere.
    pub certified_min: Option<MinBound>,
    /// Smallest `|unit · F|` seen at a sample point.
    pub grid_min: f64,
    pub witness: Option<Vec<f64>>,
    /// `|unit · F(witness)|`.
    pub witness_value: Option<f64>,
    /// For INCONCLUSIVE: largest shortfall `L·ρ - |F(anchor)|` (scaled by `|unit|`) among uncertified boxes.
    pub gap: Option<f64>,
    pub depth: u32,
    pub levels_used: u32,
    pub boxes_examined: usize,
    pub verdict: Verdict,
}

impl CheckReport {
    /// Machine-readable `key=value` lines.
    pub fn key_values(&self) -> Vec<(String, String)> {
        let mut kv = vec![
            ("verdict".to_string(), self.verdict.as_str().to_string()),
            ("dim".into(), self.dim.to_string()),
            ("divisor_degree".into(), self.divisor.degree().to_string()),
            ("divisor".into(), self.divisor.to_string()),
            ("divisibility_ok".into(), self.divisibility_ok.to_string()),
            ("unit".into(), self.unit.to_string()),
        ];
        for (d, q) in &self.quotients {
            let v = q.as_ref().map_or("not divisible".to_string(), |q| q.to_string());
            kv.push((format!("quotient_{d}"), v));
        }
        if let Some(f) = &self.real_sum {
            kv.push(("real_sum".into(), f.to_string()));
            kv.push(("lipschitz".into(), format!("{}", self.lipschitz)));
            kv.push(("grid_min".into(), format!("{:e}", self.grid_min)));
        }
        if let Some(m) = &self.certified_min {
            kv.push(("certified_min".into(), m.to_string()));
        }
        if let Some(w) = &self.witness {
            let pts: Vec<String> = w.iter().map(|v| format!("{v:.15}")).collect();
            kv.push(("witness".into(), pts.join(",")));
        }
        if let Some(v) = self.witness_value {
            kv.push(("witness_value".into(), format!("{v:e}")));
        }
        if let Some(g) = self.gap {
            kv.push(("gap".into(), format!("{g:e}")));
        }
        kv.push(("depth".into(), self.depth.to_string()));
        kv.push(("levels_used".into(), self.levels_used.to_string()));
        kv.push(("boxes_examined".into(), self.boxes_examined.to_string()));
        kv
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kv = self.key_values();
        let width = kv.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in kv {
            writeln!(f, "{k:<width$}  {v}")?;
        }
        Ok(())
    }
}

/// `L ≥ sup_{S^{n-1}} |∇F|`, the sum over `i` of the absolute coefficient sums of `∂_i F`.
pub fn spherical_gradient_bound(f: &MultiPoly) -> f64 {
    let total: Rational = (0..f.nvars()).map(|i| f.derivative(i).coeff_abs_sum()).sum();
    total.to_f64().unwrap_or(f64::INFINITY)
}

/// Axis box in spherical coordinates `(θ_1, ..., θ_{n-2}, φ)`; `θ_i ∈ [0, π]`, `φ ∈ [0, 2π]`.
#[derive(Clone, Debug)]
struct AngleBox {
    lo: Vec<f64>,
    width: Vec<f64>,
}

impl AngleBox {
    fn root(n: usize) -> Self {
        let m = n - 1;
        let mut width = vec![std::f64::consts::PI; m];
        width[m - 1] = 2.0 * std::f64::consts::PI;
        AngleBox { lo: vec![0.0; m], width }
    }

    fn children(&self) -> Vec<AngleBox> {
        let m = self.lo.len();
        (0..1usize << m)
            .map(|mask| {
                let half: Vec<f64> = self.width.iter().map(|w| w / 2.0).collect();
                let lo = (0..m).map(|i| self.lo[i] + if mask >> i & 1 == 1 { half[i] } else { 0.0 }).collect();
                AngleBox { lo, width: half }
            })
            .collect()
    }

    /// Bound on the distance from the anchor to any point of the box along a
    /// coordinate path: `Σ_i w_i Π_{k<i} sup sin θ_k`.
    fn radius(&self) -> f64 {
        let m = self.lo.len();
        let mut scale = 1.0;
        let mut rho = 0.0;
        for i in 0..m {
            rho += self.width[i] * scale;
            if i + 1 < m {
                scale *= sup_sin(self.lo[i], self.lo[i] + self.width[i]);
            }
        }
        rho
    }
}

fn sup_sin(a: f64, b: f64) -> f64 {
    let half_pi = std::f64::consts::FRAC_PI_2;
    if a <= half_pi && half_pi <= b {
        1.0
    } else {
        a.sin().abs().max(b.sin().abs())
    }
}

/// Point of `S^{n-1}` with spherical coordinates `angles` (length `n-1`).
pub fn sphere_point(angles: &[f64]) -> Vec<f64> {
    let m = angles.len();
    let mut x = Vec::with_capacity(m + 1);
    let mut s = 1.0;
    for (i, &a) in angles.iter().enumerate() {
        if i + 1 == m {
            x.push(s * a.cos());
            x.push(s * a.sin());
        } else {
            x.push(s * a.cos());
            s *= a.sin();
        }
    }
    x
}

/// Product grid on `S^{n-1}` with `per_axis` angles per polar coordinate and
/// twice as many for the azimuth.
pub fn sphere_grid(n: usize, per_axis: usize) -> Vec<Vec<f64>> {
    let m = n - 1;
    let mut pts = vec![Vec::new()];
    for i in 0..m {
        let (count, span) =
            if i + 1 == m { (2 * per_axis, 2.0 * std::f64::consts::PI) } else { (per_axis + 1, std::f64::consts::PI) };
        let step = if i + 1 == m { span / count as f64 } else { span / per_axis as f64 };
        pts = pts
            .into_iter()
            .flat_map(|p: Vec<f64>| {
                (0..count).map(move |k| {
                    let mut q = p.clone();
                    q.push(k as f64 * step);
                    q
                })
            })
            .collect();
    }
    pts.into_iter().map(|a| sphere_point(&a)).collect()
}

fn normalize(v: &[f64]) -> Vec<f64> {
    let r = v.iter().map(|a| a * a).sum::<f64>().sqrt();
    v.iter().map(|a| a / r).collect()
}

/// Bisection for a zero of `f` on the arc from `p` (`f > 0`) to `q` (`f < 0`).
fn bisect_zero(f: &FloatPoly, p: &[f64], q: &[f64]) -> Vec<f64> {
    let lerp = |t: f64| normalize(&p.iter().zip(q).map(|(a, b)| (1.0 - t) * a + t * b).collect::<Vec<_>>());
    let (mut a, mut b) = (0.0, 1.0);
    let mut best = p.to_vec();
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        let x = lerp(m);
        let v = f.eval(&x);
        best = x;
        if v == 0.0 || b - a < 1e-17 {
            break;
        }
        if v > 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    best
}

/// Local pattern search on angles minimizing `|F|`, started at `angles`.
fn polish_minimum(f: &FloatPoly, angles: &[f64], step: f64) -> (Vec<f64>, f64) {
    let mut best = angles.to_vec();
    let mut val = f.eval(&sphere_point(&best)).abs();
    let mut h = step;
    while h > 1e-15 && val > 0.0 {
        let mut improved = false;
        for i in 0..best.len() {
            for s in [-1.0, 1.0] {
                let mut cand = best.clone();
                cand[i] += s * h;
                let v = f.eval(&sphere_point(&cand)).abs();
                if v < val {
                    val = v;
                    best = cand;
                    improved = true;
                }
            }
        }
        if !improved {
            h *= 0.5;
        }
    }
    (best, val)
}

struct Sample {
    angles: Vec<f64>,
    value: f64,
    slack: f64,
}

/// Decide divisibility and non-vanishing for an odd polynomial kernel.
pub fn check_admissibility(k: &KernelSpec, grid_depth: u32) -> Result<CheckReport> {
    if k.is_zero() {
        return Err(Error::ZeroKernel);
    }
    match k.parity() {
        Parity::Odd => {}
        p => return Err(Error::NotOdd(p.as_str())),
    }
    let n = k.dim();
    let comps = k.components();
    let divisor = comps[0].clone();
    let d0 = divisor.degree();
    let unit = gamma_j(d0, n as u32);
    let mut quotients = Vec::with_capacity(comps.len());
    for c in comps {
        quotients.push((c.degree(), divide_exact(c.poly(), divisor.poly())?));
    }
    let divisibility_ok = quotients.iter().all(|(_, q)| q.is_some());
    let mut report = CheckReport {
        dim: n,
        divisor,
        quotients,
        divisibility_ok,
        unit: unit.clone(),
        real_sum: None,
        lipschitz: 0.0,
        certified_min: None,
        grid_min: f64::INFINITY,
        witness: None,
        witness_value: None,
        gap: None,
        depth: grid_depth,
        levels_used: 0,
        boxes_examined: 0,
        verdict: Verdict::FailDivisibility,
    };
    if !divisibility_ok {
        return Ok(report);
    }

    let mut fsum = MultiPoly::zero(n);
    for (d, q) in &report.quotients {
        let ratio =
            (&gamma_j(*d, n as u32) / &unit).to_rational().expect("odd multipliers differ by a rational factor");
        fsum = &fsum + &q.as_ref().expect("divisible").scale(&ratio);
    }
    let scale = unit.to_complex().norm();
    let lip = spherical_gradient_bound(&fsum);
    let fp = fsum.to_float();
    report.lipschitz = lip;
    report.real_sum = Some(fsum);

    let mut live = vec![AngleBox::root(n)];
    let mut certified_lb = f64::INFINITY;
    let mut best: Option<(Vec<f64>, f64)> = None;
    let mut pos: Option<Vec<f64>> = None;
    let mut neg: Option<Vec<f64>> = None;
    let mut level = 0;
    let mut last_gap: f64;

    loop {
        report.levels_used = level;
        report.boxes_examined += live.len();
        let samples: Vec<Sample> = live
            .par_iter()
            .map(|b| {
                let x = sphere_point(&b.lo);
                let v = fp.eval(&x);
                Sample { angles: b.lo.clone(), value: v, slack: v.abs() - lip * b.radius() }
            })
            .collect();
        for s in &samples {
            let a = s.value.abs();
            if best.as_ref().is_none_or(|(_, v)| a < *v) {
                best = Some((s.angles.clone(), a));
            }
            if s.value > 0.0 && pos.is_none() {
                pos = Some(sphere_point(&s.angles));
            }
            if s.value < 0.0 && neg.is_none() {
                neg = Some(sphere_point(&s.angles));
            }
        }
        let (bangles, bval) = best.clone().expect("nonempty sample set");
        report.grid_min = bval * scale;
        if bval < ZERO_TOL {
            return Ok(vanishing(report, &fp, sphere_point(&bangles), scale));
        }
        if let (Some(p), Some(q)) = (&pos, &neg) {
            let w = bisect_zero(&fp, p, q);
            return Ok(vanishing(report, &fp, w, scale));
        }
        let mut next = Vec::new();
        last_gap = 0.0;
        for (b, s) in live.iter().zip(&samples) {
            if s.slack > 0.0 {
                certified_lb = certified_lb.min(s.slack);
            } else {
                last_gap = last_gap.max(-s.slack);
                next.push(b);
            }
        }
        if next.is_empty() {
            report.certified_min = Some(MinBound::Certified(certified_lb * scale));
            report.witness = Some(sphere_point(&bangles));
            report.witness_value = Some(bval * scale);
            report.verdict = Verdict::Pass;
            return Ok(report);
        }
        let child_count = next.len() << (n - 1);
        if level >= grid_depth || child_count > MAX_LIVE_BOXES {
            break;
        }
        live = next.iter().flat_map(|b| b.children()).collect();
        level += 1;
    }

    let (bangles, _) = best.expect("nonempty sample set");
    let step = std::f64::consts::PI * 0.5f64.powi(level as i32);
    let (pangles, pval) = polish_minimum(&fp, &bangles, step);
    if pval < ZERO_TOL {
        return Ok(vanishing(report, &fp, sphere_point(&pangles), scale));
    }
    report.witness = Some(sphere_point(&pangles));
    report.witness_value = Some(pval * scale);
    report.grid_min = report.grid_min.min(pval * scale);
    report.gap = Some(last_gap * scale);
    report.verdict = Verdict::Inconclusive;
    Ok(report)
}

fn vanishing(mut report: CheckReport, fp: &FloatPoly, w: Vec<f64>, scale: f64) -> CheckReport {
    let v = fp.eval(&w).abs() * scale;
    report.certified_min = Some(MinBound::Vanishes);
    report.witness_value = Some(v);
    report.grid_min = report.grid_min.min(v);
    report.witness = Some(w);
    report.verdict = Verdict::FailVanishing;
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn gradient_bounds() {
        assert_eq!(spherical_gradient_bound(&MultiPoly::constant(3, int(7))), 0.0);
        assert_eq!(spherical_gradient_bound(&MultiPoly::var(3, 0)), 1.0);
        let f = &MultiPoly::var(2, 0).pow(2) - &MultiPoly::var(2, 1).pow(2).scale(&int(3));
        assert_eq!(spherical_gradient_bound(&f), 8.0);
    }

    #[test]
    fn sphere_points_have_unit_norm() {
        for n in 2..6 {
            for p in sphere_grid(n, 5) {
                let r: f64 = p.iter().map(|v| v * v).sum();
                assert!((r - 1.0).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn radius_bounds_chord_distance() {
        let b = AngleBox { lo: vec![0.3, 1.1], width: vec![0.2, 0.4] };
        let a = sphere_point(&b.lo);
        let rho = b.radius();
        for i in 0..=10 {
            for j in 0..=10 {
                let p = sphere_point(&[0.3 + 0.02 * i as f64, 1.1 + 0.04 * j as f64]);
                let d: f64 = a.iter().zip(&p).map(|(u, v)| (u - v) * (u - v)).sum::<f64>().sqrt();
                assert!(d <= rho + 1e-15);
            }
        }
    }

    #[test]
    fn unit_lambda_vanishes_at_pole() {
        for n in [2, 3] {
            let k = KernelSpec::odd_pair_family(n, &int(1)).unwrap();
            let r = check_admissibility(&k, 10).unwrap();
            assert_eq!(r.verdict, Verdict::FailVanishing);
            let w = r.witness.unwrap();
            assert!((w[0].abs() - 1.0).abs() < 1e-12);
            assert!(r.witness_value.unwrap() < 1e-10);
        }
    }

    #[test]
    fn half_lambda_passes() {
        for n in [2, 3] {
            let k = KernelSpec::odd_pair_family(n, &rat(1, 2)).unwrap();
            let r = check_admissibility(&k, DEFAULT_DEPTH).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{r}");
            assert_eq!(r.lipschitz, 4.0);
            match r.certified_min.unwrap() {
                MinBound::Certified(v) => assert!(v > 0.0 && v <= 0.5 * r.unit.to_complex().norm()),
                MinBound::Vanishes => panic!(),
            }
        }
    }

    #[test]
    fn rejects_even_and_zero() {
        let even = KernelSpec::riesz(&MultiPoly::var(2, 0) * &MultiPoly::var(2, 1)).unwrap();
        assert!(matches!(check_admissibility(&even, 4), Err(Error::NotOdd("even"))));
        let zero = KernelSpec::from_components(2, vec![]).unwrap();
        assert!(matches!(check_admissibility(&zero, 4), Err(Error::ZeroKernel)));
    }

    #[test]
    fn divisibility_failure() {
        let x1 = MultiPoly::var(2, 0);
        let x2 = MultiPoly::var(2, 1);
        let p3 = &x2.pow(3) - &(&x2 * &x1.pow(2)).scale(&int(3));
        let k = KernelSpec::from_components(
            2,
            vec![HarmonicComponent::new(x1).unwrap(), HarmonicComponent::new(p3).unwrap()],
        )
        .unwrap();
        let r = check_admissibility(&k, 6).unwrap();
        assert_eq!(r.verdict, Verdict::FailDivisibility);
        assert!(!r.divisibility_ok);
        assert!(r.quotients[0].1.is_some() && r.quotients[1].1.is_none());
    }
}
