//! Hilbert transform with kernel `1/(y - x)` on piecewise-constant functions, evaluated
//! in closed form through logarithms.

use super::grid::{Cells1d, Grid1d, Piece, TruncationGrid};

/// `log(|u2|/|u1|)` for `0 < |u1| ≤ |u2|`, without cancellation.
fn log_ratio(u1: f64, u2: f64) -> f64 {
    let (a, b) = (u1.abs(), u2.abs());
    ((b - a) / a).ln_1p()
}

/// `∫_{piece ∖ (x-ε, x+ε)} value/(y - x) dy` summed over the pieces.
pub fn truncated_pieces(pieces: &[Piece], x: f64, eps: f64) -> f64 {
    let mut acc = 0.0;
    for p in pieces {
        let (l, r) = (p.lo - x, p.hi - x);
        let (s, e) = (l.max(eps), r);
        if e > s {
            acc += p.value * log_ratio(s, e);
        }
        let (s, e) = (l, r.min(-eps));
        if e > s {
            acc -= p.value * log_ratio(e, s);
        }
    }
    acc
}

/// `H^ε f(x) = ∫_{|y-x|>ε} f(y)/(y-x) dy`, exact for grid functions.
pub fn hilbert_truncated(f: &Grid1d, x: f64, eps: f64) -> f64 {
    truncated_pieces(&f.pieces(), x, eps)
}

/// `ε ↦ H^ε f(x)` at every piece-boundary distance from `x` and every extra radius.
///
/// Between consecutive breakpoints `H^ε f(x)` is `C + A log ε` with `A` the jump
/// `f(x-u) - f(x+u)`, so its supremum over all `ε > 0` is attained at a breakpoint
/// or in the limit `ε → 0`. The last entry is `(0, limit)`; the limit is infinite
/// when `f` jumps at `x`.
pub fn truncation_profile(pieces: &[Piece], x: f64, extra: &[f64]) -> Vec<(f64, f64)> {
    // (u, dw): at radius u the weight of the shell just inside changes by dw.
    let mut events: Vec<(f64, f64)> = Vec::with_capacity(4 * pieces.len() + extra.len());
    let mut scale = 0.0f64;
    for p in pieces {
        scale = scale.max(p.value.abs());
        let (l, r) = (p.lo - x, p.hi - x);
        if r > 0.0 {
            events.push((r, p.value));
            events.push((l.max(0.0), -p.value));
        }
        if l < 0.0 {
            events.push((-l, -p.value));
            events.push(((-r).max(0.0), p.value));
        }
    }
    events.extend(extra.iter().map(|&e| (e, 0.0)));
    events.sort_by(|a, b| b.0.total_cmp(&a.0));
    let mut out = Vec::with_capacity(events.len() + 1);
    let (mut t, mut w) = (0.0f64, 0.0f64);
    let mut prev = f64::INFINITY;
    let mut k = 0;
    while k < events.len() {
        let u = events[k].0;
        if u <= 0.0 {
            break;
        }
        if w != 0.0 && prev.is_finite() {
            t += w * log_ratio(u, prev);
        }
        while k < events.len() && events[k].0 == u {
            w += events[k].1;
            k += 1;
        }
        out.push((u, t));
        prev = u;
    }
    let limit = if w.abs() <= 1e-12 * scale.max(f64::MIN_POSITIVE) { t } else { w.signum() * f64::INFINITY };
    out.push((0.0, limit));
    out
}

/// `sup_ε |H^ε f(x)|` over all truncations (exact); `extra` radii are included for completeness.
pub fn maximal_pieces(pieces: &[Piece], x: f64, extra: &[f64]) -> f64 {
    truncation_profile(pieces, x, extra).iter().map(|(_, t)| t.abs()).fold(0.0, f64::max)
}

/// `H* f(x)`, maximized over the ε-grid together with every cell-boundary distance from `x`.
pub fn hilbert_maximal(f: &Grid1d, x: f64, grid: &TruncationGrid) -> f64 {
    maximal_pieces(&f.pieces(), x, grid.values())
}

/// Principal value `Hf(x) = Σ value · log|(hi - x)/(lo - x)|`; `None` at a jump of `f`.
pub fn pv_pieces(pieces: &[Piece], x: f64) -> Option<f64> {
    let mut acc = 0.0;
    let mut jump = 0.0;
    let mut scale = 0.0f64;
    for p in pieces {
        scale = scale.max(p.value.abs());
        let (l, r) = (p.lo - x, p.hi - x);
        match (l == 0.0, r == 0.0) {
            (false, false) => acc += p.value * (r.abs() / l.abs()).ln(),
            (true, _) => {
                jump -= p.value;
                acc += p.value * r.abs().ln();
            }
            (_, true) => {
                jump += p.value;
                acc -= p.value * l.abs().ln();
            }
        }
    }
    (jump.abs() <= 1e-12 * scale.max(f64::MIN_POSITIVE)).then_some(acc)
}

pub fn hilbert_pv(f: &Grid1d, x: f64) -> Option<f64> {
    pv_pieces(&f.pieces(), x)
}

/// `ψ(u) = u log|u| - u`, an antiderivative of `log|u|`.
pub(crate) fn psi(u: f64) -> f64 {
    if u == 0.0 {
        0.0
    } else {
        u * u.abs().ln() - u
    }
}

pub(crate) const GL4: [(f64, f64); 4] = [
    (-0.861_136_311_594_052_6, 0.347_854_845_137_453_9),
    (-0.339_981_043_584_856_3, 0.652_145_154_862_546_1),
    (0.339_981_043_584_856_3, 0.652_145_154_862_546_1),
    (0.861_136_311_594_052_6, 0.347_854_845_137_453_9),
];

/// `∫_a^b H(piece)(y) dy` in closed form, switching to Gauss–Legendre on a smooth
/// stable integrand when the cell is far from both piece endpoints.
fn piece_cell_integral(p: &Piece, a: f64, b: f64) -> f64 {
    let w = b - a;
    let far = (p.lo - a).abs().min((p.lo - b).abs()).min((p.hi - a).abs()).min((p.hi - b).abs()) > 4.0 * w
        && !(a < p.hi && b > p.lo);
    if far {
        let (m, hw) = ((a + b) / 2.0, w / 2.0);
        let len = p.hi - p.lo;
        let s: f64 = GL4.iter().map(|(t, wt)| wt * (len / (p.lo - (m + hw * t))).ln_1p()).sum();
        return p.value * hw * s;
    }
    let lam = |c: f64| psi(c - a) - psi(c - b);
    p.value * (lam(p.hi) - lam(p.lo))
}

/// Exact averages of `Hf` over every cell of `out`; the result carries `out`'s partition.
pub fn hilbert_cell_averages(pieces: &[Piece], out: &Cells1d) -> Cells1d {
    let e = out.edges();
    let values = (0..out.len())
        .map(|k| {
            let (a, b) = (e[k], e[k + 1]);
            pieces.iter().map(|p| piece_cell_integral(p, a, b)).sum::<f64>() / (b - a)
        })
        .collect();
    out.with_values(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn chi01(h: f64) -> Grid1d {
        Grid1d::step(0.0, 1.0, h, 1.0).unwrap()
    }

    #[test]
    fn truncated_examples() {
        let f = chi01(0.125);
        assert!((hilbert_truncated(&f, 2.0, 0.5) + LN_2).abs() < 1e-15);
        let g = Grid1d::step(-1.0, 1.0, 0.25, 1.0).unwrap();
        for eps in [0.01, 0.3, 0.99] {
            assert!(hilbert_truncated(&g, 0.0, eps).abs() < 1e-15);
        }
        assert!(hilbert_truncated(&f, 0.5, 0.25).abs() < 1e-15);
    }

    #[test]
    fn refinement_invariance() {
        let f = Grid1d::new(-1.0, 0.25, vec![1.0, 1.0, -2.0, 0.5, 0.5, 3.0, 0.0, 1.0]).unwrap();
        for x in [-3.1, 0.3, 0.6, 5.0] {
            for eps in [0.05, 0.2, 1.7] {
                let a = hilbert_truncated(&f, x, eps);
                for k in [2, 3, 8] {
                    assert!((hilbert_truncated(&f.refine(k), x, eps) - a).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn maximal_matches_brute_force() {
        let f = chi01(0.125);
        let grid = TruncationGrid::log_spaced(1e-3, 1e2, 64);
        let m = hilbert_maximal(&f, 2.0, &grid);
        assert!(m >= LN_2);
        let brute = grid.values().iter().map(|&e| hilbert_truncated(&f, 2.0, e).abs()).fold(0.0, f64::max);
        assert!(m >= brute);
        // At x = 2 the full integral is attained for every ε < 1.
        assert!((m - LN_2).abs() < 1e-15);
        assert_eq!(hilbert_maximal(&Grid1d::new(0.0, 1.0, vec![0.0; 4]).unwrap(), 1.5, &grid), 0.0);
    }

    #[test]
    fn profile_agrees_with_direct_truncation() {
        let f = Grid1d::new(-1.0, 0.25, vec![1.0, 1.0, -2.0, 0.5, 0.5, 3.0, 0.0, 1.0]).unwrap();
        let pieces = f.pieces();
        let x = 0.37;
        for (eps, t) in truncation_profile(&pieces, x, &[0.01, 0.4]) {
            if eps > 0.0 {
                assert!((t - truncated_pieces(&pieces, x, eps)).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn jump_gives_infinite_maximal() {
        let f = chi01(0.5);
        assert!(maximal_pieces(&f.pieces(), 1.0, &[]).is_infinite());
        assert!(hilbert_pv(&f, 1.0).is_none());
        assert!(hilbert_pv(&f, 0.5).unwrap().abs() < 1e-15);
    }

    #[test]
    fn cell_averages_integrate_pv() {
        let pieces = chi01(0.5).pieces();
        let out = Grid1d::new(-2.0, 0.1, vec![0.0; 50]).unwrap().to_cells();
        let avg = hilbert_cell_averages(&pieces, &out);
        for k in [3usize, 17, 33, 44] {
            let (a, b) = (out.edges()[k], out.edges()[k + 1]);
            let n = 2000;
            let mid: f64 =
                (0..n).map(|i| pv_pieces(&pieces, a + (i as f64 + 0.5) * (b - a) / n as f64).unwrap()).sum::<f64>()
                    / n as f64;
            assert!((avg.values()[k] - mid).abs() < 1e-5, "{k}");
        }
    }
}
