//! Level sets of `H*(Hχ_(0,1))` against `Φ(1/t)`, and the Luxemburg `L log L` norm.

use czkit::experiments::{exp_llogl_modular, LabConfig, LLOGL_T};
use czkit::lab::{llogl_average, luxemburg, Grid1d};

fn main() -> czkit::Result<()> {
    let res = exp_llogl_modular(&LabConfig::default(), &LLOGL_T);
    println!("{:>8} {:>12} {:>12} {:>8}", "t", "|{H*g>t}|", "Φ(1/t)", "ratio");
    for r in &res.rows {
        println!("{:>8} {:>12.4e} {:>12.4e} {:>8.4}", r[0], r[1], r[2], r[3]);
    }
    for height in [1.0, 10.0, 100.0] {
        let f = Grid1d::step(0.0, 1.0, 1.0 / 8.0, height)?.pad(8, 8);
        println!("‖{height}·χ‖ on [-1,2]: {:.6}", llogl_average(&f.to_cells(), -1.0, 2.0));
    }
    println!("norm of the constant 1 on a unit interval: {}", luxemburg(&[1.0], &[1.0]));
    Ok(())
}
