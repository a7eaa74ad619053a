//! `H*(Hχ_(0,1))` grows like `log x / x`, while `Hχ_(0,1)` decays like `1/x`.

use czkit::experiments::{exp_counterexample_growth, exp_weak11_failure, LabConfig, COUNTEREXAMPLE_X, WEAK_LAMBDAS};

fn main() {
    let cfg = LabConfig::default();
    let res = exp_counterexample_growth(&cfg, &COUNTEREXAMPLE_X);
    println!("{:>8} {:>12} {:>12} {:>8}", "x", "g(x)", "H*g(x)", "ratio");
    for r in &res.rows {
        println!("{:>8} {:>12.4e} {:>12.4e} {:>8.4}", r[0], r[1], r[2], r[3]);
    }
    let weak = exp_weak11_failure(&cfg, &WEAK_LAMBDAS);
    println!("\n{:>8} {:>10} {:>10} {:>10}", "λ", "λ|{H*g>λ}|", "log x/x", "Beurling");
    for r in &weak.rows {
        println!("{:>8} {:>10.4} {:>10.4} {:>10.4}", r[0], r[2], r[3], r[5]);
    }
    for (k, v) in &weak.summary {
        println!("{k} = {v:.4}");
    }
}
