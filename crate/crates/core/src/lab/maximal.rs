//! Maximal functions over grid-aligned intervals and squares.
//!
//! In 1D the admissible intervals are `[e_i, e_j]` with `e_i ≤ x ≤ e_j` over the
//! partition's edges; a point outside the partition is joined to it by one empty
//! cell. Functions vanish outside the stored extent, so enlarging an interval past
//! the support only lowers every average considered here and the restricted
//! supremum equals the supremum over the whole grid-aligned family.

use super::grid::{Cells1d, Grid2d};
use super::orlicz::llogl_average;

/// Edges and values extended so that `x` lies inside, with prefix integrals of `|f|`.
struct Extended {
    edges: Vec<f64>,
    values: Vec<f64>,
    prefix: Vec<f64>,
}

impl Extended {
    fn new(f: &Cells1d, x: f64) -> Self {
        let mut edges = f.edges().to_vec();
        let mut values = f.values().to_vec();
        if x < edges[0] {
            edges.insert(0, x);
            values.insert(0, 0.0);
        }
        if x > edges[edges.len() - 1] {
            edges.push(x);
            values.push(0.0);
        }
        let mut prefix = vec![0.0; edges.len()];
        for k in 0..values.len() {
            prefix[k + 1] = prefix[k] + values[k].abs() * (edges[k + 1] - edges[k]);
        }
        Self { edges, values, prefix }
    }

    /// Node index ranges `(left ≤ x, right ≥ x)`.
    fn split(&self, x: f64) -> (usize, usize) {
        let left_end = self.edges.partition_point(|&e| e <= x);
        let right_start = self.edges.partition_point(|&e| e < x);
        (left_end, right_start)
    }

    fn sup_over<F: Fn(usize, usize) -> f64>(&self, x: f64, score: F) -> f64 {
        let (left_end, right_start) = self.split(x);
        let mut best = 0.0f64;
        for i in 0..left_end {
            for j in right_start.max(i + 1)..self.edges.len() {
                best = best.max(score(i, j));
            }
        }
        best
    }
}

/// `Mf(x)`: supremum of `|f|` averages over admissible intervals containing `x`.
pub fn hardy_littlewood(f: &Cells1d, x: f64) -> f64 {
    let e = Extended::new(f, x);
    e.sup_over(x, |i, j| (e.prefix[j] - e.prefix[i]) / (e.edges[j] - e.edges[i]))
}

/// `Mf` on every cell: the supremum over admissible intervals containing the cell.
pub fn hardy_littlewood_cells(f: &Cells1d) -> Cells1d {
    let (e, v) = (f.edges(), f.values());
    let n = v.len();
    let mut prefix = vec![0.0; n + 1];
    for k in 0..n {
        prefix[k + 1] = prefix[k] + v[k].abs() * (e[k + 1] - e[k]);
    }
    let mut out = vec![0.0f64; n];
    let mut suffix = vec![0.0f64; n + 2];
    for i in 0..n {
        // suffix[k] = max over j ≥ k of the average on [e_i, e_j].
        suffix[n + 1] = 0.0;
        for j in (i + 1..=n).rev() {
            let a = (prefix[j] - prefix[i]) / (e[j] - e[i]);
            suffix[j] = a.max(suffix[j + 1]);
        }
        for k in i..n {
            out[k] = out[k].max(suffix[k + 1]);
        }
    }
    f.with_values(out)
}

/// `M²f(x) = M(Mf)(x)` with `Mf` computed cellwise on the same partition.
pub fn iterated_m2(f: &Cells1d, x: f64) -> f64 {
    hardy_littlewood(&hardy_littlewood_cells(f), x)
}

/// `M_δ f(x) = M(|f|^δ)(x)^{1/δ}` for `δ ∈ (0, 1)`.
pub fn m_delta(f: &Cells1d, x: f64, delta: f64) -> f64 {
    assert!(delta > 0.0 && delta < 1.0, "δ must lie in (0, 1)");
    hardy_littlewood(&f.map(|v| v.abs().powf(delta)), x).powf(1.0 / delta)
}

/// `M♯f(x)`: supremum over admissible intervals of the mean oscillation about the interval average.
pub fn m_sharp(f: &Cells1d, x: f64) -> f64 {
    let e = Extended::new(f, x);
    let mut signed = vec![0.0; e.edges.len()];
    for k in 0..e.values.len() {
        signed[k + 1] = signed[k] + e.values[k] * (e.edges[k + 1] - e.edges[k]);
    }
    e.sup_over(x, |i, j| {
        let len = e.edges[j] - e.edges[i];
        let avg = (signed[j] - signed[i]) / len;
        (i..j).map(|k| (e.values[k] - avg).abs() * (e.edges[k + 1] - e.edges[k])).sum::<f64>() / len
    })
}

/// `M_{L log L} f(x)`: supremum of the Luxemburg average over admissible intervals.
pub fn m_llogl(f: &Cells1d, x: f64) -> f64 {
    let e = Extended::new(f, x);
    let ext = Cells1d::new(e.edges.clone(), e.values.clone()).expect("extended partition is increasing");
    e.sup_over(x, |i, j| llogl_average(&ext, e.edges[i], e.edges[j]))
}

/// Sliding maximum: `out[p] = max a[max(0, p+1-s) ..= min(p, a.len()-1)]` for `p < n_out`.
fn window_max(a: &[f64], s: usize, n_out: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_out);
    let mut dq: std::collections::VecDeque<usize> = std::collections::VecDeque::new();
    let mut next = 0;
    for p in 0..n_out {
        let hi = p.min(a.len() - 1);
        while next <= hi {
            while dq.back().is_some_and(|&b| a[b] <= a[next]) {
                dq.pop_back();
            }
            dq.push_back(next);
            next += 1;
        }
        let lo = (p + 1).saturating_sub(s);
        while dq.front().is_some_and(|&f| f < lo) {
            dq.pop_front();
        }
        out.push(dq.front().map_or(0.0, |&f| a[f]));
    }
    out
}

/// `M|g|` on every cell of a 2D grid: supremum of averages over grid-aligned squares
/// inside the grid that contain the cell.
pub fn hardy_littlewood_2d(g: &Grid2d) -> Vec<f64> {
    let (nx, ny) = g.shape();
    let w = nx + 1;
    let mut s = vec![0.0; w * (ny + 1)];
    for j in 0..ny {
        for i in 0..nx {
            s[(j + 1) * w + i + 1] = g.get(i, j).norm() + s[j * w + i + 1] + s[(j + 1) * w + i] - s[j * w + i];
        }
    }
    let mut best = vec![0.0f64; nx * ny];
    for side in 1..=nx.min(ny) {
        let (cx, cy) = (nx - side + 1, ny - side + 1);
        let area = (side * side) as f64;
        // Row pass: for each corner row, max over corner columns covering each cell column.
        let mut rows = vec![0.0; nx * cy];
        for j in 0..cy {
            let avg: Vec<f64> = (0..cx)
                .map(|i| {
                    (s[(j + side) * w + i + side] - s[j * w + i + side] - s[(j + side) * w + i] + s[j * w + i]) / area
                })
                .collect();
            let m = window_max(&avg, side, nx);
            rows[j * nx..(j + 1) * nx].copy_from_slice(&m);
        }
        for i in 0..nx {
            let col: Vec<f64> = (0..cy).map(|j| rows[j * nx + i]).collect();
            let m = window_max(&col, side, ny);
            for (j, v) in m.into_iter().enumerate() {
                let b = &mut best[j * nx + i];
                *b = b.max(v);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::grid::Grid1d;

    fn chi01(h: f64, pad: usize) -> Cells1d {
        Grid1d::step(0.0, 1.0, h, 1.0).unwrap().pad(pad, pad).to_cells()
    }

    #[test]
    fn maximal_at_two() {
        for h in [0.5, 0.25, 0.125] {
            assert!((hardy_littlewood(&chi01(h, 0), 2.0) - 0.5).abs() < 1e-15);
            assert!((hardy_littlewood(&chi01(h, 12), 2.0) - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn constants() {
        let f = Grid1d::step(-50.0, 50.0, 0.5, 3.0).unwrap().to_cells();
        assert!((hardy_littlewood(&f, 0.3) - 3.0).abs() < 1e-14);
        assert!(m_sharp(&f, 0.3).abs() < 1e-14);
        assert!((m_delta(&f, 0.3, 0.5) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn cells_agree_with_pointwise() {
        let f = Grid1d::new(-1.0, 0.25, vec![1.0, 0.0, -2.0, 0.5, 0.0, 3.0, 0.0, 1.0]).unwrap().to_cells();
        let m = hardy_littlewood_cells(&f);
        for k in 0..f.len() {
            let x = (f.edges()[k] + f.edges()[k + 1]) / 2.0;
            assert!((m.values()[k] - hardy_littlewood(&f, x)).abs() < 1e-14);
        }
    }

    #[test]
    fn window_max_brute() {
        let a = [3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0];
        for s in 1..=a.len() {
            let n_out = a.len() + s - 1;
            let got = window_max(&a, s, n_out);
            for (p, g) in got.iter().enumerate() {
                let lo = (p + 1).saturating_sub(s);
                let hi = p.min(a.len() - 1);
                let want = a[lo..=hi].iter().copied().fold(f64::MIN, f64::max);
                assert_eq!(*g, want);
            }
        }
    }

    #[test]
    fn maximal_2d_brute() {
        use num_complex::Complex64;
        let vals: Vec<Complex64> = (0..30).map(|k| Complex64::new(((k * 7) % 5) as f64 - 1.0, 0.0)).collect();
        let g = Grid2d::new(0.0, 0.0, 1.0, 6, 5, vals).unwrap();
        let m = hardy_littlewood_2d(&g);
        for q in 0..6 {
            for p in 0..5 {
                let mut want = 0.0f64;
                for side in 1..=5 {
                    for i in 0..=6 - side {
                        for j in 0..=5 - side {
                            if (i..i + side).contains(&q) && (j..j + side).contains(&p) {
                                let s: f64 = (i..i + side)
                                    .flat_map(|a| (j..j + side).map(move |b| (a, b)))
                                    .map(|(a, b)| g.get(a, b).norm())
                                    .sum();
                                want = want.max(s / (side * side) as f64);
                            }
                        }
                    }
                }
                assert!((m[p * 6 + q] - want).abs() < 1e-13);
            }
        }
    }
}
