//! Beurling transform of the unit disk on a grid, and the composition ratio `B*(Bf)/((B²)*f + Mf)`.

use num_complex::Complex64;

use czkit::experiments::{exp_beurling_composition, LabConfig};
use czkit::lab::{beurling_pv_grid, beurling_truncated, Grid2d};

fn main() -> czkit::Result<()> {
    let disk = Grid2d::disk(Complex64::new(0.0, 0.0), 1.0, 2.0, 1.0 / 32.0, 8)?;
    for z in [Complex64::new(1.5, 0.0), Complex64::new(1.2, 1.2)] {
        let v = beurling_truncated(&disk, z, 1e-3);
        println!("B χ_D({z}) = {v:.5}   π/z² = {:.5}", std::f64::consts::PI / (z * z));
    }
    let bf = beurling_pv_grid(&disk);
    let (i, j) = bf.locate(Complex64::new(0.0, 0.0)).expect("inside");
    println!("FFT grid value at the center: {:.3e}", bf.get(i, j).norm());
    let res = exp_beurling_composition(&LabConfig::default());
    for (k, v) in &res.summary {
        println!("{k} = {v:.4}");
    }
    Ok(())
}
