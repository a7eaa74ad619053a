//! Truncated and maximal Beurling transforms in the plane, with kernels
//! `1/(ω - z)²` for `B` and `-2 conj(ω - z)/(ω - z)³` for `B²`.

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::grid::{dist_to_box, far_corner, Grid2d, TruncationGrid};

/// Dyadic subdivision levels for cells crossing the truncation circle.
pub const SUBDIVISION_LEVELS: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BeurlingKernel {
    B,
    BSquared,
}

impl BeurlingKernel {
    pub fn eval(self, u: Complex64) -> Complex64 {
        match self {
            BeurlingKernel::B => (u * u).inv(),
            BeurlingKernel::BSquared => -2.0 * u.conj() / (u * u * u),
        }
    }

    /// `∫∫ K` over the axis-parallel rectangle `[x0, x1] × [y0, y1]` (in `u = ω - z`),
    /// which must not contain the origin. Mixed second antiderivatives:
    /// `i log u` for `1/u²` and `i ū/u` for `-2ū/u³`.
    pub fn rect_integral(self, x0: f64, x1: f64, y0: f64, y1: f64) -> Complex64 {
        let i = Complex64::new(0.0, 1.0);
        match self {
            BeurlingKernel::B => {
                // Log differences along vertical segments stay on one branch.
                let seg = |x: f64| (Complex64::new(x, y1) / Complex64::new(x, y0)).ln();
                i * (seg(x1) - seg(x0))
            }
            BeurlingKernel::BSquared => {
                let phi = |x: f64, y: f64| {
                    let u = Complex64::new(x, y);
                    i * u.conj() / u
                };
                phi(x1, y1) - phi(x0, y1) - phi(x1, y0) + phi(x0, y0)
            }
        }
    }
}

fn cell_exact(g: &Grid2d, i: usize, j: usize, z: Complex64, k: BeurlingKernel) -> Complex64 {
    let (x, y) = g.corner(i, j);
    let h = g.mesh();
    g.get(i, j) * k.rect_integral(x - z.re, x + h - z.re, y - z.im, y + h - z.im)
}

/// Integral over a square of side `side` crossing the circle `|ω - z| = ε`: dyadic
/// subdivision of crossing squares down to `depth` levels, exact integrals on pieces
/// outside the circle, midpoint rule on the finest crossing pieces.
fn crossing_sum(z: Complex64, x: f64, y: f64, side: f64, eps: f64, k: BeurlingKernel, depth: u32) -> Complex64 {
    if far_corner(z, x, y, side) <= eps {
        return Complex64::new(0.0, 0.0);
    }
    if dist_to_box(z, x, y, side) >= eps {
        return k.rect_integral(x - z.re, x + side - z.re, y - z.im, y + side - z.im);
    }
    if depth == 0 {
        let u = Complex64::new(x + 0.5 * side, y + 0.5 * side) - z;
        return if u.norm() > eps { k.eval(u) * (side * side) } else { Complex64::new(0.0, 0.0) };
    }
    let s = side / 2.0;
    crossing_sum(z, x, y, s, eps, k, depth - 1)
        + crossing_sum(z, x + s, y, s, eps, k, depth - 1)
        + crossing_sum(z, x, y + s, s, eps, k, depth - 1)
        + crossing_sum(z, x + s, y + s, s, eps, k, depth - 1)
}

fn subcell_sum(g: &Grid2d, i: usize, j: usize, z: Complex64, eps: f64, k: BeurlingKernel) -> Complex64 {
    let (x, y) = g.corner(i, j);
    g.get(i, j) * crossing_sum(z, x, y, g.mesh(), eps, k, SUBDIVISION_LEVELS)
}

/// `∫_{|ω-z|>ε} f(ω) K(ω - z) dA(ω)`: cells outside the disk are integrated exactly,
/// cells crossing the circle are subdivided four dyadic levels.
pub fn truncated(g: &Grid2d, z: Complex64, eps: f64, k: BeurlingKernel) -> Complex64 {
    let h = g.mesh();
    let (nx, ny) = g.shape();
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..ny {
        for i in 0..nx {
            if g.get(i, j) == Complex64::new(0.0, 0.0) {
                continue;
            }
            let (x, y) = g.corner(i, j);
            let (dmin, dmax) = (dist_to_box(z, x, y, h), far_corner(z, x, y, h));
            if dmax <= eps {
                continue;
            }
            if dmin >= eps {
                acc += cell_exact(g, i, j, z, k);
            } else {
                acc += subcell_sum(g, i, j, z, eps, k);
            }
        }
    }
    acc
}

pub fn beurling_truncated(g: &Grid2d, z: Complex64, eps: f64) -> Complex64 {
    truncated(g, z, eps, BeurlingKernel::B)
}

pub fn beurling_sq_truncated(g: &Grid2d, z: Complex64, eps: f64) -> Complex64 {
    truncated(g, z, eps, BeurlingKernel::BSquared)
}

/// `sup_{ε ∈ grid} |T^ε f(z)|`, identical to maximizing [`truncated`] over the grid.
pub fn maximal(g: &Grid2d, z: Complex64, grid: &TruncationGrid, k: BeurlingKernel) -> f64 {
    let h = g.mesh();
    let (nx, ny) = g.shape();
    // Cells sorted by decreasing distance, with running sums of their exact integrals.
    let mut cells: Vec<(f64, f64, usize, usize, Complex64)> = Vec::new();
    for j in 0..ny {
        for i in 0..nx {
            if g.get(i, j) == Complex64::new(0.0, 0.0) {
                continue;
            }
            let (x, y) = g.corner(i, j);
            let dmin = dist_to_box(z, x, y, h);
            let exact = if dmin > 0.0 { cell_exact(g, i, j, z, k) } else { Complex64::new(0.0, 0.0) };
            cells.push((dmin, far_corner(z, x, y, h), i, j, exact));
        }
    }
    cells.sort_by(|a, b| b.0.total_cmp(&a.0));
    let mut running = vec![Complex64::new(0.0, 0.0)];
    for c in &cells {
        let last = running[running.len() - 1];
        running.push(last + c.4);
    }
    let mut best = 0.0f64;
    for &eps in grid.values() {
        let full = cells.partition_point(|c| c.0 >= eps);
        let mut t = running[full];
        for c in &cells[full..] {
            if c.0 < eps - std::f64::consts::SQRT_2 * h {
                break;
            }
            if c.1 > eps {
                t += subcell_sum(g, c.2, c.3, z, eps, k);
            }
        }
        best = best.max(t.norm());
    }
    best
}

pub fn beurling_maximal(g: &Grid2d, z: Complex64, grid: &TruncationGrid) -> f64 {
    maximal(g, z, grid, BeurlingKernel::B)
}

pub fn beurling_sq_maximal(g: &Grid2d, z: Complex64, grid: &TruncationGrid) -> f64 {
    maximal(g, z, grid, BeurlingKernel::BSquared)
}

/// `∫_{cell} du/u²` over the square of side `h` centered at `(a h, b h)`, `(a, b) ≠ (0, 0)`.
fn b_cell_integral(a: i64, b: i64, h: f64) -> Complex64 {
    let (x0, y0) = ((a as f64 - 0.5) * h, (b as f64 - 0.5) * h);
    BeurlingKernel::B.rect_integral(x0, x0 + h, y0, y0 + h)
}

fn fft2(data: &mut [Complex64], nx: usize, ny: usize, inverse: bool) {
    let mut planner = FftPlanner::new();
    let (fx, fy) = if inverse {
        (planner.plan_fft_inverse(nx), planner.plan_fft_inverse(ny))
    } else {
        (planner.plan_fft_forward(nx), planner.plan_fft_forward(ny))
    };
    for row in data.chunks_mut(nx) {
        fx.process(row);
    }
    let mut col = vec![Complex64::new(0.0, 0.0); ny];
    for i in 0..nx {
        for j in 0..ny {
            col[j] = data[j * nx + i];
        }
        fy.process(&mut col);
        for j in 0..ny {
            data[j * nx + i] = col[j];
        }
    }
}

/// Principal value `Bf` at every cell center, for `f` constant on cells (zero outside).
/// The kernel is integrated exactly over each source cell; the cell containing the
/// evaluation point contributes zero by symmetry.
pub fn beurling_pv_grid(g: &Grid2d) -> Grid2d {
    let (nx, ny) = g.shape();
    let (px, py) = (2 * nx, 2 * ny);
    let mut fpad = vec![Complex64::new(0.0, 0.0); px * py];
    for j in 0..ny {
        for i in 0..nx {
            fpad[j * px + i] = g.get(i, j);
        }
    }
    // out[p] = Σ_i f[i] K(i - p) = (f * K̃)[p] with K̃(d) = K(-d).
    let mut kpad = vec![Complex64::new(0.0, 0.0); px * py];
    for dj in -(ny as i64 - 1)..=(ny as i64 - 1) {
        for di in -(nx as i64 - 1)..=(nx as i64 - 1) {
            if di == 0 && dj == 0 {
                continue;
            }
            let ii = (di.rem_euclid(px as i64)) as usize;
            let jj = (dj.rem_euclid(py as i64)) as usize;
            kpad[jj * px + ii] = b_cell_integral(-di, -dj, g.mesh());
        }
    }
    fft2(&mut fpad, px, py, false);
    fft2(&mut kpad, px, py, false);
    for (a, b) in fpad.iter_mut().zip(&kpad) {
        *a *= b;
    }
    fft2(&mut fpad, px, py, true);
    let norm = (px * py) as f64;
    let values = (0..nx * ny).map(|q| fpad[(q / nx) * px + q % nx] / norm).collect();
    g.with_values(values)
}

/// Truncation profile of a function given in closed form, in polar coordinates about `z`:
/// `T^ε = ∫_ε^{s_max} A(s) ds/s`, `A(s) = ∫_0^{2π} f(z + s e^{iα}) e^{-2iα} dα`.
/// Returns `sup_ε |T^ε|` over `ε ≥ s_min` on a log grid with `per_decade` points.
pub fn beurling_maximal_polar(
    f: impl Fn(Complex64) -> Complex64,
    z: Complex64,
    s_min: f64,
    s_max: f64,
    per_decade: usize,
    angles: usize,
) -> f64 {
    let decades = (s_max / s_min).log10();
    let steps = (decades * per_decade as f64).ceil() as usize;
    let dl = (s_max / s_min).ln() / steps as f64;
    let dalpha = std::f64::consts::TAU / angles as f64;
    let shell = |s: f64| -> Complex64 {
        (0..angles)
            .map(|k| {
                let a = (k as f64 + 0.5) * dalpha;
                let e = Complex64::from_polar(1.0, a);
                f(z + s * e) * e.conj() * e.conj()
            })
            .sum::<Complex64>()
            * dalpha
    };
    // Midpoint rule in log s on each shell band, accumulated from the outside in.
    let mut t = Complex64::new(0.0, 0.0);
    let mut best = 0.0f64;
    for k in (0..steps).rev() {
        let s = s_min * ((k as f64 + 0.5) * dl).exp();
        t += shell(s) * dl;
        best = best.max(t.norm());
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn disk(h: f64) -> Grid2d {
        Grid2d::disk(Complex64::new(0.0, 0.0), 1.0, 1.5, h, 8).unwrap()
    }

    #[test]
    fn radial_about_z_vanishes() {
        let g = disk(0.125);
        for eps in [0.0625, 0.3, 0.9] {
            assert!(beurling_truncated(&g, Complex64::new(0.0, 0.0), eps).norm() < 1e-12);
            // The grid disk is only 4-fold symmetric, which `B²`'s kernel does not see.
            let coarse = beurling_sq_truncated(&g, Complex64::new(0.0, 0.0), eps).norm();
            let fine = beurling_sq_truncated(&disk(0.03125), Complex64::new(0.0, 0.0), eps).norm();
            assert!(fine < 0.05 && fine < coarse, "{coarse} {fine}");
        }
        assert_eq!(beurling_truncated(&g, Complex64::new(0.0, 0.0), 2.5), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn disk_outside_matches_closed_form() {
        let z = Complex64::new(2.0, 0.0);
        let exact = PI / (z * z);
        let g = Grid2d::disk(Complex64::new(0.0, 0.0), 1.0, 1.0, 1.0 / 64.0, 16).unwrap();
        let v = beurling_truncated(&g, z, 0.01);
        assert!((v - exact).norm() < 2e-3 * exact.norm(), "{v} vs {exact}");
    }

    #[test]
    fn maximal_matches_direct_scan() {
        let g = disk(0.125);
        let z = Complex64::new(0.3125, 0.0625);
        let grid = TruncationGrid::log_spaced(0.0625, 4.0, 8);
        for k in [BeurlingKernel::B, BeurlingKernel::BSquared] {
            let direct = grid.values().iter().map(|&e| truncated(&g, z, e, k).norm()).fold(0.0, f64::max);
            let fast = maximal(&g, z, &grid, k);
            assert!((direct - fast).abs() < 1e-12 * direct.max(1.0), "{direct} {fast}");
        }
    }

    #[test]
    fn pv_grid_matches_direct_sum() {
        let vals: Vec<Complex64> = (0..35).map(|k| Complex64::new(((k * 5) % 7) as f64 - 2.0, 0.0)).collect();
        let g = Grid2d::new(0.0, 0.0, 0.5, 7, 5, vals).unwrap();
        let b = beurling_pv_grid(&g);
        for (p, q) in [(0, 0), (3, 2), (6, 4)] {
            let mut want = Complex64::new(0.0, 0.0);
            for j in 0..5i64 {
                for i in 0..7i64 {
                    if (i, j) != (p, q) {
                        want += g.get(i as usize, j as usize) * b_cell_integral(i - p, j - q, 0.5);
                    }
                }
            }
            assert!((b.get(p as usize, q as usize) - want).norm() < 1e-12);
        }
    }

    #[test]
    fn cell_integral_against_quadrature() {
        let h = 0.5;
        for (a, b) in [(1i64, 0i64), (2, -1), (-1, -1), (0, 3)] {
            let n = 400;
            let s = h / n as f64;
            let mut q = Complex64::new(0.0, 0.0);
            for k in 0..n * n {
                let u = Complex64::new(
                    (a as f64 - 0.5) * h + ((k % n) as f64 + 0.5) * s,
                    (b as f64 - 0.5) * h + ((k / n) as f64 + 0.5) * s,
                );
                q += (u * u).inv() * (s * s);
            }
            assert!((q - b_cell_integral(a, b, h)).norm() < 1e-4 * q.norm().max(1e-3));
            let mut q2 = Complex64::new(0.0, 0.0);
            for k in 0..n * n {
                let u = Complex64::new(
                    (a as f64 - 0.5) * h + ((k % n) as f64 + 0.5) * s,
                    (b as f64 - 0.5) * h + ((k / n) as f64 + 0.5) * s,
                );
                q2 += BeurlingKernel::BSquared.eval(u) * (s * s);
            }
            let (x0, y0) = ((a as f64 - 0.5) * h, (b as f64 - 0.5) * h);
            let exact = BeurlingKernel::BSquared.rect_integral(x0, x0 + h, y0, y0 + h);
            assert!((q2 - exact).norm() < 1e-4 * q2.norm().max(1e-3));
        }
    }

    #[test]
    fn pv_grid_of_disk() {
        let g = Grid2d::disk(Complex64::new(0.0, 0.0), 1.0, 2.0, 1.0 / 32.0, 8).unwrap();
        let b = beurling_pv_grid(&g);
        let (i, j) = g.locate(Complex64::new(1.7, 0.3)).unwrap();
        let z = g.center(i, j);
        assert!((b.get(i, j) - PI / (z * z)).norm() < 1e-2 * (PI / (z * z)).norm());
        let (i, j) = g.locate(Complex64::new(0.2, 0.1)).unwrap();
        assert!(b.get(i, j).norm() < 2e-2);
    }
}
