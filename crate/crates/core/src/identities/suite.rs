//! Batch driver running every exact verifier over a configured parameter range.

use std::fmt;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::*;
use crate::scalar::{half, int, rat, Rational};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n_min: u32,
    pub n_max: u32,
    /// Largest `N` for the fundamental-solution checks.
    pub big_n_max: u32,
    /// Random `(m, n, r, s)` tuples for the triple-binomial identity.
    pub triple_samples: usize,
    pub seed: u64,
    /// Dimensions and largest `p` for the `N`-stabilization of `a_{2p+1}`.
    pub stabilization_dims: Vec<u32>,
    pub stabilization_p_max: u32,
    /// `G_q(0)` is checked for `2q ∈ 1..=bessel_two_q_max`.
    pub bessel_two_q_max: i64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            n_min: 2,
            n_max: 5,
            big_n_max: 6,
            triple_samples: 200,
            seed: 7,
            stabilization_dims: vec![2, 3],
            stabilization_p_max: 4,
            bessel_two_q_max: 12,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub params: String,
    pub passed: bool,
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{v} {:<24} {}", self.name, self.params)
    }
}

type Job = (&'static str, String, Box<dyn Fn() -> bool + Send + Sync>);

fn job(name: &'static str, params: String, f: impl Fn() -> bool + Send + Sync + 'static) -> Job {
    (name, params, Box::new(f))
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let den = rng.random_range(1..=4i64);
    rat(rng.random_range(-40..=40i64), den)
}

/// Runs all verifiers in parallel; the output order is deterministic.
pub fn run_identity_suite(cfg: &SuiteConfig) -> Vec<IdentityCheck> {
    let mut jobs: Vec<Job> = Vec::new();
    for n in cfg.n_min..=cfg.n_max {
        for nn in 1..=cfg.big_n_max {
            jobs.push(job("fundamental-laplacian", format!("n={n} N={nn}"), move || radial_laplacian_check(n, nn)));
            jobs.push(job("taylor-coefficients", format!("n={n} N={nn}"), move || verify_al(n, nn)));
            jobs.push(job("c-ljk-three-forms", format!("n={n} N={nn}"), move || verify_c_ljk(n, nn)));
            jobs.push(job("c-constants", format!("n={n} N={nn}"), move || verify_c_constants(n, nn)));
            let m = half(n as i64 - 1);
            for l in nn + 1..=2 * nn {
                let mq = m.clone();
                jobs.push(job("falling-binomial-sum", format!("m={m} N={nn} L={l}"), move || {
                    verify_falling_binomial_sum(&mq, nn, l)
                }));
                if n % 2 == 1 {
                    let mi = (n as i64 - 1) / 2;
                    if verify_factorial_binomial_sum(mi, nn, l).is_ok() {
                        jobs.push(job("factorial-binomial-sum", format!("m={mi} N={nn} L={l}"), move || {
                            verify_factorial_binomial_sum(mi, nn, l).unwrap_or(false)
                        }));
                    }
                }
            }
            for p in 0..nn {
                for j in 0..=p {
                    for i in 0..=p - j {
                        jobs.push(job("shifted-gamma-sum", format!("n={n} N={nn} p={p} j={j} i={i}"), move || {
                            verify_shifted_gamma_sum(n, nn, p, j, i).unwrap_or(false)
                        }));
                    }
                }
            }
            for j in 0..nn {
                jobs.push(job("half-gamma-sum", format!("n={n} N={nn} j={j}"), move || {
                    verify_half_gamma_sum(n, nn, j).unwrap_or(false)
                }));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.triple_samples {
        let (m, k) = (rng.random_range(0..=6u32), rng.random_range(0..=6u32));
        let (r, s) = (random_rational(&mut rng), random_rational(&mut rng));
        jobs.push(job("triple-binomial", format!("m={m} n={k} r={r} s={s}"), move || {
            verify_triple_binomial(m, k, &r, &s)
        }));
    }
    // Half-integer arguments of the shape arising in the stabilization proof.
    for n in cfg.n_min..=cfg.n_max {
        for nn in 1..=cfg.big_n_max.min(4) {
            for p in 0..nn {
                let r = half(n as i64) + int((nn + p) as i64) - rat(1, 2);
                let s = half(n as i64) + int(p as i64);
                jobs.push(job("triple-binomial", format!("m={p} n={nn} r={r} s={s}"), move || {
                    verify_triple_binomial(p, nn, &r, &s)
                }));
            }
        }
    }
    for &n in &cfg.stabilization_dims {
        for p in 0..=cfg.stabilization_p_max {
            jobs.push(job("a-coeff-stabilization", format!("n={n} p={p} N={}..={}", p + 1, p + 3), move || {
                verify_stabilization(n, p, 2)
            }));
        }
    }
    for two_q in 1..=cfg.bessel_two_q_max {
        jobs.push(job("bessel-at-zero", format!("q={}", half(two_q)), move || verify_bessel_at_zero(&half(two_q))));
    }
    jobs.into_par_iter().map(|(name, params, f)| IdentityCheck { name, params, passed: f() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let cfg = SuiteConfig {
            n_max: 3,
            big_n_max: 2,
            triple_samples: 10,
            stabilization_dims: vec![2],
            stabilization_p_max: 1,
            bessel_two_q_max: 3,
            ..SuiteConfig::default()
        };
        let out = run_identity_suite(&cfg);
        assert!(!out.is_empty());
        assert!(out.iter().all(|c| c.passed), "{:?}", out.iter().find(|c| !c.passed));
    }
}
