//! Luxemburg averages for the Young function `Φ(t) = t (1 + log⁺ t)`.

use super::grid::Cells1d;

pub fn phi(t: f64) -> f64 {
    if t > 1.0 {
        t * (1.0 + t.ln())
    } else {
        t
    }
}

const REL_TOL: f64 = 1e-10;

/// `‖f‖_{Φ,I} = inf{λ > 0 : |I|⁻¹ ∫_I Φ(|f|/λ) ≤ 1}` for `f` given by cell values and
/// the lengths of their overlaps with `I`.
pub fn luxemburg(values: &[f64], lengths: &[f64]) -> f64 {
    let total: f64 = lengths.iter().sum();
    if total <= 0.0 {
        return 0.0;
    }
    let modular = |lam: f64| values.iter().zip(lengths).map(|(v, l)| phi(v.abs() / lam) * l).sum::<f64>() / total;
    // Φ(t) ≥ t gives λ ≥ mean |f|; Φ ≤ 1 on [0, 1] gives λ ≤ max |f|.
    let mut lo = values.iter().zip(lengths).map(|(v, l)| v.abs() * l).sum::<f64>() / total;
    let mut hi = values.iter().zip(lengths).filter(|(_, l)| **l > 0.0).map(|(v, _)| v.abs()).fold(0.0, f64::max);
    if hi == 0.0 {
        return 0.0;
    }
    while hi - lo > REL_TOL * hi {
        let mid = 0.5 * (lo + hi);
        if modular(mid) > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `‖f‖_{Φ,[a,b]}`.
pub fn llogl_average(f: &Cells1d, a: f64, b: f64) -> f64 {
    let e = f.edges();
    let (mut vals, mut lens) = (Vec::new(), Vec::new());
    let start = e.partition_point(|&x| x <= a).saturating_sub(1);
    for k in start..f.len() {
        if e[k] >= b {
            break;
        }
        let l = e[k + 1].min(b) - e[k].max(a);
        if l > 0.0 {
            vals.push(f.values()[k]);
            lens.push(l);
        }
    }
    let covered: f64 = lens.iter().sum();
    if b - a > covered {
        vals.push(0.0);
        lens.push(b - a - covered);
    }
    luxemburg(&vals, &lens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::grid::Grid1d;

    #[test]
    fn constant_one_has_unit_norm() {
        let f = Grid1d::step(0.0, 1.0, 0.125, 1.0).unwrap().to_cells();
        assert!((llogl_average(&f, 0.0, 1.0) - 1.0).abs() < 1e-9);
        assert_eq!(llogl_average(&f.map(|_| 0.0), 0.0, 1.0), 0.0);
    }

    #[test]
    fn root_of_modular() {
        let f = Grid1d::step(0.0, 1.0, 0.25, 1.0).unwrap().to_cells();
        // On [0, 2]: (1/2) Φ(1/λ) = 1.
        let lam = llogl_average(&f, 0.0, 2.0);
        assert!((0.5 * phi(1.0 / lam) - 1.0).abs() < 1e-8);
        assert!(lam > 0.5 && lam < 1.0);
    }

    #[test]
    fn monotone_in_scalar() {
        let f = Grid1d::new(0.0, 0.5, vec![1.0, 3.0, 0.2, 2.0]).unwrap().to_cells();
        let mut prev = 0.0;
        for c in [0.1, 0.5, 1.0, 2.0, 10.0] {
            let v = llogl_average(&f.map(|x| c * x), 0.0, 2.0);
            assert!(v > prev);
            prev = v;
        }
    }
}
