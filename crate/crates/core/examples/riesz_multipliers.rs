//! Exact multipliers `γ_j` of the higher-order Riesz transforms and their float evaluation.

use czkit::kernel::KernelSpec;
use czkit::poly::MultiPoly;
use czkit::scalar::{gamma_j, int};

fn main() -> czkit::Result<()> {
    for n in 2..=4 {
        let row: Vec<String> = (1..=6).map(|j| gamma_j(j, n).to_string()).collect();
        println!("n={n}: {}", row.join("   "));
        let ratio = &gamma_j(3, n) / &gamma_j(1, n);
        println!("      γ3/γ1 = {ratio}");
    }
    let x1 = MultiPoly::var(2, 0);
    let x2 = MultiPoly::var(2, 1);
    let p3 = &x1.pow(3) - &(&x1 * &x2.pow(2)).scale(&int(3));
    let k = KernelSpec::riesz(p3)?;
    for t in [0.0f64, 0.3, 1.0] {
        let m = k.multiplier(&[t.cos(), t.sin()])?;
        println!("multiplier at angle {t}: {:.12} {:+.12}i", m.re, m.im);
    }
    Ok(())
}
