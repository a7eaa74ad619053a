//! The series `G_q`, its closed form at `q = 1/2`, and the stabilized coefficients `a_{2p+1}`.

use czkit::identities::{a_coeff_closed_form, bessel_g_series, compute_a_coeff, lyons_zumbrun_apply, RadialFamily};
use czkit::poly::MultiPoly;
use czkit::scalar::rat;

fn main() -> czkit::Result<()> {
    for r in [0.1, 1.0, 5.0] {
        let s = bessel_g_series(&rat(1, 2), r, 30);
        let exact = (2.0 / std::f64::consts::PI).sqrt() * r.sin() / r;
        println!("G_1/2({r}) = {s:.15}  error {:.1e}", (s - exact).abs());
    }
    for p in 0..3 {
        let closed = a_coeff_closed_form(3, p);
        let same = (p + 1..=p + 3).all(|big_n| compute_a_coeff(3, big_n, p) == closed);
        println!("a_{}: {closed}   stable in N: {same}", 2 * p + 1);
    }
    let x1 = MultiPoly::var(3, 0);
    let l = &x1.pow(3) - &(&x1 * &MultiPoly::var(3, 1).pow(2)).scale(&rat(3, 1));
    println!("L(∂) G_3/2 = {}", lyons_zumbrun_apply(&l, &RadialFamily::parse("G_3/2")?)?);
    Ok(())
}
