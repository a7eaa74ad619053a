//! Decide admissibility across the odd pair family `x1 + λ(n+1)(x1³ - 3x1x2²)`.

use czkit::admissibility::{check_admissibility, DEFAULT_DEPTH};
use czkit::kernel::KernelSpec;
use czkit::scalar::rat;

fn main() -> czkit::Result<()> {
    for n in [2, 3] {
        for (num, den) in [(0, 1), (1, 2), (-1, 2), (1, 1), (-1, 1), (3, 2)] {
            let k = KernelSpec::odd_pair_family(n, &rat(num, den))?;
            let r = check_admissibility(&k, DEFAULT_DEPTH)?;
            let min = r.certified_min.map(|m| m.to_string()).unwrap_or_else(|| "-".into());
            println!("n={n} λ={:>4}  {:<18} min|F| {min}", rat(num, den).to_string(), r.verdict.to_string());
        }
    }
    Ok(())
}
