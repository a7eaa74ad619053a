//! Piecewise-constant functions on the line and in the plane.

use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Constant `value` on `[lo, hi)`; a function is a sum of possibly overlapping pieces.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Piece {
    pub lo: f64,
    pub hi: f64,
    pub value: f64,
}

/// Uniform 1D grid function: cell `i` is `[origin + i h, origin + (i+1) h)`, zero outside.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid1d {
    origin: f64,
    h: f64,
    values: Vec<f64>,
}

impl Grid1d {
    pub fn new(origin: f64, h: f64, values: Vec<f64>) -> Result<Self> {
        if !(h > 0.0 && h.is_finite() && origin.is_finite()) {
            return Err(Error::Grid(format!("mesh must be positive and finite, got {h}")));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Grid("non-finite cell value".into()));
        }
        Ok(Self { origin, h, values })
    }

    /// Cells of size `h` covering `[lo, hi]`, valued by `f` at the cell midpoints.
    pub fn sample(lo: f64, hi: f64, h: f64, f: impl Fn(f64) -> f64) -> Result<Self> {
        let n = ((hi - lo) / h).round() as usize;
        let values = (0..n).map(|i| f(lo + (i as f64 + 0.5) * h)).collect();
        Self::new(lo, h, values)
    }

    /// `value · χ_[lo, hi)` with the support split into cells of size `h`.
    pub fn step(lo: f64, hi: f64, h: f64, value: f64) -> Result<Self> {
        Self::sample(lo, hi, h, |_| value)
    }

    pub fn origin(&self) -> f64 {
        self.origin
    }

    pub fn mesh(&self) -> f64 {
        self.h
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn end(&self) -> f64 {
        self.edge(self.values.len())
    }

    pub fn edge(&self, i: usize) -> f64 {
        self.origin + i as f64 * self.h
    }

    pub fn center(&self, i: usize) -> f64 {
        self.origin + (i as f64 + 0.5) * self.h
    }

    pub fn integral(&self) -> f64 {
        self.h * self.values.iter().sum::<f64>()
    }

    /// Value at `x`, zero outside the stored extent.
    pub fn value_at(&self, x: f64) -> f64 {
        let t = (x - self.origin) / self.h;
        if t < 0.0 || t >= self.values.len() as f64 {
            return 0.0;
        }
        self.values[t as usize]
    }

    /// Each cell split into `k` equal cells.
    pub fn refine(&self, k: usize) -> Self {
        let values = self.values.iter().flat_map(|&v| std::iter::repeat_n(v, k)).collect();
        Self { origin: self.origin, h: self.h / k as f64, values }
    }

    /// Zero cells added on both sides.
    pub fn pad(&self, left: usize, right: usize) -> Self {
        let mut values = vec![0.0; left];
        values.extend_from_slice(&self.values);
        values.extend(std::iter::repeat_n(0.0, right));
        Self { origin: self.origin - left as f64 * self.h, h: self.h, values }
    }

    /// Maximal runs of equal nonzero values, as pieces.
    pub fn pieces(&self) -> Vec<Piece> {
        let mut out: Vec<Piece> = Vec::new();
        let mut start = 0;
        for i in 1..=self.values.len() {
            if i == self.values.len() || self.values[i] != self.values[start] {
                if self.values[start] != 0.0 {
                    out.push(Piece { lo: self.edge(start), hi: self.edge(i), value: self.values[start] });
                }
                start = i;
            }
        }
        out
    }

    pub fn to_cells(&self) -> Cells1d {
        Cells1d { edges: (0..=self.values.len()).map(|i| self.edge(i)).collect(), values: self.values.clone() }
    }

    /// Reads `x,value` rows with `x` the cell centers (equally spaced, increasing).
    pub fn load_csv(path: &Path) -> Result<Self> {
        let rows = read_rows(path, &[2])?;
        let xs: Vec<f64> = rows.iter().map(|r| r[0]).collect();
        let h = uniform_step(&xs)
            .ok_or_else(|| Error::Grid(format!("{}: centers are not equally spaced", path.display())))?;
        Self::new(xs[0] - h / 2.0, h, rows.iter().map(|r| r[1]).collect())
    }

    pub fn save_csv(&self, path: &Path) -> Result<()> {
        let mut w = csv::Writer::from_path(path)?;
        w.write_record(["x", "value"])?;
        for (i, v) in self.values.iter().enumerate() {
            w.write_record([fmt_f64(self.center(i)), fmt_f64(*v)])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Piecewise-constant function on an arbitrary increasing partition, zero outside.
#[derive(Clone, Debug, PartialEq)]
pub struct Cells1d {
    edges: Vec<f64>,
    values: Vec<f64>,
}

impl Cells1d {
    pub fn new(edges: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if edges.len() != values.len() + 1 || edges.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Grid("edges must be strictly increasing, one more than values".into()));
        }
        Ok(Self { edges, values })
    }

    pub fn edges(&self) -> &[f64] {
        &self.edges
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Index of the cell containing `x`.
    pub fn locate(&self, x: f64) -> Option<usize> {
        let k = self.edges.partition_point(|&e| e <= x);
        (k >= 1 && k < self.edges.len()).then(|| k - 1)
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self { edges: self.edges.clone(), values: self.values.iter().map(|&v| f(v)).collect() }
    }

    pub fn with_values(&self, values: Vec<f64>) -> Self {
        assert_eq!(values.len(), self.values.len());
        Self { edges: self.edges.clone(), values }
    }
}

/// Logarithmically spaced truncation radii.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncationGrid {
    eps: Vec<f64>,
}

impl TruncationGrid {
    pub fn new(eps: Vec<f64>) -> Result<Self> {
        if eps.iter().any(|&e| !(e > 0.0 && e.is_finite())) || eps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Grid("truncation radii must be positive and strictly increasing".into()));
        }
        Ok(Self { eps })
    }

    /// `lo · 10^{k/per_decade}` for all `k` with value `≤ hi`.
    pub fn log_spaced(lo: f64, hi: f64, per_decade: usize) -> Self {
        let count = ((hi / lo).log10() * per_decade as f64).floor() as usize;
        let eps = (0..=count).map(|k| lo * 10f64.powf(k as f64 / per_decade as f64)).collect();
        Self { eps }
    }

    /// `[h/2, 4·diameter]` at 64 points per decade.
    pub fn for_grid(h: f64, diameter: f64) -> Self {
        Self::log_spaced(h / 2.0, 4.0 * diameter, 64)
    }

    pub fn values(&self) -> &[f64] {
        &self.eps
    }
}

/// Uniform 2D grid function: cell `(i, j)` is `[x0 + i h, x0 + (i+1) h) × [y0 + j h, y0 + (j+1) h)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid2d {
    x0: f64,
    y0: f64,
    h: f64,
    nx: usize,
    ny: usize,
    values: Vec<Complex64>,
}

impl Grid2d {
    /// Values stored row by row: index `j * nx + i`.
    pub fn new(x0: f64, y0: f64, h: f64, nx: usize, ny: usize, values: Vec<Complex64>) -> Result<Self> {
        if !(h > 0.0 && h.is_finite()) || values.len() != nx * ny {
            return Err(Error::Grid(format!("need positive mesh and {nx}×{ny} values")));
        }
        Ok(Self { x0, y0, h, nx, ny, values })
    }

    /// Square window `[-half, half]²` with cell values `f(center)`.
    pub fn sample(half_width: f64, h: f64, f: impl Fn(Complex64) -> Complex64) -> Result<Self> {
        let n = (2.0 * half_width / h).round() as usize;
        let x0 = -(n as f64) * h / 2.0;
        let values = (0..n * n)
            .map(|k| f(Complex64::new(x0 + ((k % n) as f64 + 0.5) * h, x0 + ((k / n) as f64 + 0.5) * h)))
            .collect();
        Self::new(x0, x0, h, n, n, values)
    }

    /// Cell averages of `χ_{|w - c| < r}` on `[-half, half]²`, by `sub × sub` midpoint sampling.
    pub fn disk(center: Complex64, r: f64, half_width: f64, h: f64, sub: usize) -> Result<Self> {
        let n = (2.0 * half_width / h).round() as usize;
        let x0 = -(n as f64) * h / 2.0;
        let s = h / sub as f64;
        let values = (0..n * n)
            .map(|k| {
                let (i, j) = (k % n, k / n);
                let (cx, cy) = (x0 + i as f64 * h, x0 + j as f64 * h);
                let d_min = dist_to_box(center, cx, cy, h);
                let d_max = far_corner(center, cx, cy, h);
                if d_min >= r {
                    return Complex64::new(0.0, 0.0);
                }
                if d_max <= r {
                    return Complex64::new(1.0, 0.0);
                }
                let mut hits = 0usize;
                for a in 0..sub {
                    for b in 0..sub {
                        let w = Complex64::new(cx + (a as f64 + 0.5) * s, cy + (b as f64 + 0.5) * s);
                        if (w - center).norm() < r {
                            hits += 1;
                        }
                    }
                }
                Complex64::new(hits as f64 / (sub * sub) as f64, 0.0)
            })
            .collect();
        Self::new(x0, x0, h, n, n, values)
    }

    pub fn mesh(&self) -> f64 {
        self.h
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    pub fn origin(&self) -> (f64, f64) {
        (self.x0, self.y0)
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.values[j * self.nx + i]
    }

    /// Lower-left corner of cell `(i, j)`.
    pub fn corner(&self, i: usize, j: usize) -> (f64, f64) {
        (self.x0 + i as f64 * self.h, self.y0 + j as f64 * self.h)
    }

    pub fn center(&self, i: usize, j: usize) -> Complex64 {
        let (x, y) = self.corner(i, j);
        Complex64::new(x + self.h / 2.0, y + self.h / 2.0)
    }

    /// Cell containing `z`.
    pub fn locate(&self, z: Complex64) -> Option<(usize, usize)> {
        let i = ((z.re - self.x0) / self.h).floor();
        let j = ((z.im - self.y0) / self.h).floor();
        (i >= 0.0 && j >= 0.0 && (i as usize) < self.nx && (j as usize) < self.ny).then_some((i as usize, j as usize))
    }

    pub fn integral(&self) -> Complex64 {
        self.values.iter().sum::<Complex64>() * (self.h * self.h)
    }

    pub fn with_values(&self, values: Vec<Complex64>) -> Self {
        assert_eq!(values.len(), self.values.len());
        Self { values, ..self.clone() }
    }

    /// Each cell split into `k × k` equal cells.
    pub fn refine(&self, k: usize) -> Self {
        let (nx, ny) = (self.nx * k, self.ny * k);
        let values = (0..nx * ny).map(|q| self.get((q % nx) / k, (q / nx) / k)).collect();
        Self { x0: self.x0, y0: self.y0, h: self.h / k as f64, nx, ny, values }
    }

    /// Zero border of `pad` cells on every side.
    pub fn pad(&self, pad: usize) -> Self {
        let (nx, ny) = (self.nx + 2 * pad, self.ny + 2 * pad);
        let mut values = vec![Complex64::new(0.0, 0.0); nx * ny];
        for j in 0..self.ny {
            for i in 0..self.nx {
                values[(j + pad) * nx + i + pad] = self.get(i, j);
            }
        }
        let off = pad as f64 * self.h;
        Self { x0: self.x0 - off, y0: self.y0 - off, h: self.h, nx, ny, values }
    }

    /// Reads `x,y,value` (or `x,y,re,im`) rows with `(x, y)` cell centers of a full square-mesh grid.
    pub fn load_csv(path: &Path) -> Result<Self> {
        let rows = read_rows(path, &[3, 4])?;
        let mut xs: Vec<f64> = rows.iter().map(|r| r[0]).collect();
        let mut ys: Vec<f64> = rows.iter().map(|r| r[1]).collect();
        for v in [&mut xs, &mut ys] {
            v.sort_by(f64::total_cmp);
            v.dedup();
        }
        let bad = || Error::Grid(format!("{}: centers do not form a uniform grid", path.display()));
        let hx = uniform_step(&xs).ok_or_else(bad)?;
        let hy = uniform_step(&ys).ok_or_else(bad)?;
        if (hx - hy).abs() > 1e-9 * hx || rows.len() != xs.len() * ys.len() {
            return Err(bad());
        }
        let (nx, ny) = (xs.len(), ys.len());
        let (x0, y0) = (xs[0] - hx / 2.0, ys[0] - hx / 2.0);
        let mut values = vec![Complex64::new(0.0, 0.0); nx * ny];
        for r in &rows {
            let i = ((r[0] - x0) / hx).floor() as usize;
            let j = ((r[1] - y0) / hx).floor() as usize;
            values[j * nx + i] = Complex64::new(r[2], r.get(3).copied().unwrap_or(0.0));
        }
        Self::new(x0, y0, hx, nx, ny, values)
    }

    /// Writes `x,y,value` rows at the cell centers, or `x,y,re,im` for complex data.
    pub fn save_csv(&self, path: &Path) -> Result<()> {
        let real = self.values.iter().all(|v| v.im == 0.0);
        let mut w = csv::Writer::from_path(path)?;
        if real {
            w.write_record(["x", "y", "value"])?;
        } else {
            w.write_record(["x", "y", "re", "im"])?;
        }
        for j in 0..self.ny {
            for i in 0..self.nx {
                let c = self.center(i, j);
                let v = self.get(i, j);
                let mut rec = vec![fmt_f64(c.re), fmt_f64(c.im), fmt_f64(v.re)];
                if !real {
                    rec.push(fmt_f64(v.im));
                }
                w.write_record(rec)?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

/// Distance from `z` to the square with lower-left corner `(x, y)` and side `h`.
pub(crate) fn dist_to_box(z: Complex64, x: f64, y: f64, h: f64) -> f64 {
    let dx = (x - z.re).max(0.0).max(z.re - x - h);
    let dy = (y - z.im).max(0.0).max(z.im - y - h);
    dx.hypot(dy)
}

pub(crate) fn far_corner(z: Complex64, x: f64, y: f64, h: f64) -> f64 {
    let dx = (z.re - x).abs().max((z.re - x - h).abs());
    let dy = (z.im - y).abs().max((z.im - y - h).abs());
    dx.hypot(dy)
}

/// Float formatting shared by every CSV writer: 17 significant digits.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn read_rows(path: &Path, widths: &[usize]) -> Result<Vec<Vec<f64>>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_path(path)?;
    let mut rows = Vec::new();
    for (k, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let line = k + 2;
        let parse = |s: &str| {
            s.parse::<f64>().map_err(|e| Error::Parse { path: path.to_path_buf(), line, msg: format!("`{s}`: {e}") })
        };
        if !widths.contains(&rec.len()) {
            return Err(Error::Parse { path: path.to_path_buf(), line, msg: format!("expected {widths:?} fields") });
        }
        rows.push(rec.iter().map(parse).collect::<Result<Vec<f64>>>()?);
    }
    if rows.len() < 2 {
        return Err(Error::Grid(format!("{}: need at least two rows", path.display())));
    }
    Ok(rows)
}

fn uniform_step(xs: &[f64]) -> Option<f64> {
    if xs.len() < 2 {
        return None;
    }
    let h = (xs[xs.len() - 1] - xs[0]) / (xs.len() - 1) as f64;
    let ok = h > 0.0 && xs.windows(2).all(|w| ((w[1] - w[0]) - h).abs() <= 1e-9 * h);
    ok.then_some(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pieces_merge_runs() {
        let g = Grid1d::step(0.0, 1.0, 0.125, 1.0).unwrap().pad(2, 3);
        assert_eq!(g.pieces(), vec![Piece { lo: 0.0, hi: 1.0, value: 1.0 }]);
        assert_eq!(g.refine(4).pieces(), g.pieces());
        assert!((g.integral() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn csv_round_trip() {
        let dir = std::env::temp_dir().join(format!("czkit-grid-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let g = Grid1d::sample(-1.0, 1.0, 0.25, |x| x * x).unwrap();
        let p = dir.join("g1.csv");
        g.save_csv(&p).unwrap();
        let back = Grid1d::load_csv(&p).unwrap();
        assert_eq!(back.len(), g.len());
        assert!((back.mesh() - g.mesh()).abs() < 1e-15 && (back.origin() - g.origin()).abs() < 1e-15);
        let d = Grid2d::disk(Complex64::new(0.0, 0.0), 1.0, 1.5, 0.25, 4).unwrap();
        let p2 = dir.join("g2.csv");
        d.save_csv(&p2).unwrap();
        assert_eq!(Grid2d::load_csv(&p2).unwrap().values(), d.values());
    }

    #[test]
    fn truncation_grid_refines_to_superset() {
        let a = TruncationGrid::log_spaced(0.01, 10.0, 8);
        let b = TruncationGrid::log_spaced(0.01, 10.0, 16);
        for (k, e) in a.values().iter().enumerate() {
            assert!((b.values()[2 * k] - e).abs() <= 1e-15 * e);
        }
        assert!(TruncationGrid::new(vec![1.0, 1.0]).is_err());
    }

    #[test]
    fn disk_area() {
        let d = Grid2d::disk(Complex64::new(0.0, 0.0), 1.0, 1.25, 1.0 / 32.0, 8).unwrap();
        assert!((d.integral().re - std::f64::consts::PI).abs() < 1e-3);
    }
}
