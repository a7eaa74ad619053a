//! Run the exact identity suite and summarize it by identity.

use std::collections::BTreeMap;

use czkit::identities::{fundamental_coeffs, run_identity_suite, SuiteConfig};

fn main() {
    let checks = run_identity_suite(&SuiteConfig::default());
    let mut by_name: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for c in &checks {
        let e = by_name.entry(c.name).or_default();
        e.0 += 1;
        e.1 += c.passed as usize;
    }
    for (name, (total, passed)) in &by_name {
        println!("{name:<24} {passed}/{total}");
    }
    for n in [2, 3, 4] {
        let c = fundamental_coeffs(n, 2);
        println!("E_2 in R^{n}: {:?} α={:?} β={}", c.case, c.alpha.map(|a| a.to_string()), c.beta);
    }
}
