//! Round-trip a kernel through its text format and check the loaded file.
//!
//! Usage: `cargo run --example kernel_file [path]`

use std::path::PathBuf;

use czkit::admissibility::check_admissibility;
use czkit::kernel::KernelSpec;
use czkit::scalar::rat;

fn main() -> czkit::Result<()> {
    let path = match std::env::args().nth(1) {
        Some(p) => PathBuf::from(p),
        None => {
            let path = std::env::temp_dir().join("czkit_example.kernel");
            let k = KernelSpec::odd_pair_family(2, &rat(1, 2))?;
            std::fs::write(&path, k.to_text())?;
            path
        }
    };
    println!("{}\n", std::fs::read_to_string(&path)?);
    let k = KernelSpec::load(&path)?;
    println!("dimension {}, parity {}", k.dim(), k.parity());
    for c in k.components() {
        println!("  degree {}: {}", c.degree(), c.poly());
    }
    println!("\n{}", check_admissibility(&k, 10)?);
    Ok(())
}
