//! Maximal operators on a step function: `M`, `M²`, `M_δ`, `M#`, `M_{L log L}` and `H*`.

use czkit::lab::{
    hardy_littlewood, hilbert_maximal, hilbert_pv, iterated_m2, m_delta, m_llogl, m_sharp, Grid1d, TruncationGrid,
};

fn main() -> czkit::Result<()> {
    let f = Grid1d::sample(-1.0, 3.0, 1.0 / 16.0, |x| if (0.0..1.0).contains(&x) { 1.0 } else { 0.0 })?;
    let cells = f.to_cells();
    let grid = TruncationGrid::for_grid(f.mesh(), 8.0);
    println!("{:>6} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}", "x", "M", "M²", "M_1/2", "M#", "M_LlogL", "H*", "Hf");
    for k in 0..9 {
        let x = -0.9 + 0.4 * k as f64 + 1.0 / 48.0;
        let pv = hilbert_pv(&f, x).unwrap_or(f64::NAN);
        println!(
            "{x:>6.3} {:>8.4} {:>8.4} {:>8.4} {:>8.4} {:>8.4} {:>8.4} {:>8.4}",
            hardy_littlewood(&cells, x),
            iterated_m2(&cells, x),
            m_delta(&cells, x, 0.5),
            m_sharp(&cells, x),
            m_llogl(&cells, x),
            hilbert_maximal(&f, x, &grid),
            pv,
        );
    }
    Ok(())
}
