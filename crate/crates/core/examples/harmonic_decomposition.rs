//! Split a homogeneous polynomial into `Σ H_k |x|^{2k}` and rebuild it.

use czkit::poly::{divide_exact, harmonic_decompose, recombine, sphere_monomial_integral, MultiPoly};

fn main() -> czkit::Result<()> {
    let p = MultiPoly::parse_text("3 4 0 0\n-2 2 1 1\n1 0 0 4\n5 1 3 0\n", Some(3))
        .map_err(|(line, msg)| czkit::Error::OutOfRange(format!("line {line}: {msg}")))?;
    println!("P = {p}");
    let parts = harmonic_decompose(&p)?;
    for (k, h) in &parts {
        println!("  |x|^{} · ({})   harmonic: {}", 2 * k, h.poly(), h.poly().is_harmonic());
    }
    assert_eq!(recombine(3, &parts), p);
    let r2 = MultiPoly::norm_sq(3);
    let q = divide_exact(&(&p * &r2), &r2)?.expect("exact quotient");
    println!("(P·|x|²)/|x|² = P: {}", q == p);
    println!("∫_S² x1⁴ dσ = {}", sphere_monomial_integral(&[4, 0, 0], 3)?);
    Ok(())
}
