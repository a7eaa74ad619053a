//! Property tests for kernels and the admissibility decision.

use proptest::prelude::*;

use czkit::admissibility::{check_admissibility, sphere_point, MinBound, Verdict};
use czkit::kernel::{KernelSpec, Parity};
use czkit::poly::{harmonic_projection, HarmonicComponent, MultiPoly};
use czkit::scalar::{int, rat, Rational};

fn angles(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0f64..std::f64::consts::TAU, n - 1)
}

/// Harmonic projection of `Σ_k c_k x_a^{d-s} x_b^s` with `(a, b, s)` cycling through indices.
fn harmonic(n: usize, degree: u32, seed: &[i64]) -> MultiPoly {
    let mut p = MultiPoly::zero(n);
    for (k, c) in seed.iter().enumerate() {
        let s = k as u32 % (degree + 1);
        let mut exps = vec![0; n];
        exps[k % n] = degree - s;
        exps[(k + 1) % n] += s;
        p = &p + &MultiPoly::monomial(n, exps, int(*c));
    }
    harmonic_projection(&p).unwrap()
}

fn lambdas() -> Vec<Rational> {
    vec![int(0), rat(1, 2), rat(-1, 2), int(1), int(-1)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn parity_matches_pointwise_symmetry(
        (n, a) in (2usize..=4).prop_flat_map(|n| (Just(n), angles(n))),
        odd in any::<bool>(),
        seed in prop::collection::vec(-4i64..=4, 1..4),
    ) {
        let d0 = if odd { 1 } else { 2 };
        let comps: Vec<HarmonicComponent> = [d0, d0 + 2]
            .iter()
            .map(|&d| harmonic(n, d, &seed))
            .filter(|p| !p.is_zero())
            .map(|p| HarmonicComponent::new(p).unwrap())
            .collect();
        prop_assume!(!comps.is_empty());
        let k = KernelSpec::from_components(n, comps).unwrap();
        let x = sphere_point(&a);
        let minus: Vec<f64> = x.iter().map(|v| -v).collect();
        let sign = if k.parity() == Parity::Odd { -1.0 } else { 1.0 };
        prop_assert!((k.omega(&minus) - sign * k.omega(&x)).abs() < 1e-9);
        let m = k.multiplier(&x).unwrap();
        if k.parity() == Parity::Odd {
            prop_assert!(m.re.abs() < 1e-12 * (1.0 + m.norm()));
        } else {
            prop_assert!(m.im.abs() < 1e-12 * (1.0 + m.norm()));
        }
    }

    #[test]
    fn kernel_round_trips_through_homogenized_numerator(
        n in 2usize..=4, lam in -3i64..=3, den in 1i64..=3
    ) {
        let k = KernelSpec::odd_pair_family(n, &rat(lam, den)).unwrap();
        prop_assert_eq!(KernelSpec::from_polynomial(n, &k.homogenized()).unwrap(), k);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn verdict_invariant_under_scaling(
        n in 2usize..=3, li in 0usize..5, num in -7i64..=7, den in 1i64..=5
    ) {
        prop_assume!(num != 0);
        let c = rat(num, den);
        let k = KernelSpec::odd_pair_family(n, &lambdas()[li]).unwrap();
        let scaled = KernelSpec::from_components(
            n,
            k.components().iter().map(|h| HarmonicComponent::new(h.poly().scale(&c)).unwrap()).collect(),
        )
        .unwrap();
        prop_assert_eq!(check_admissibility(&k, 8).unwrap().verdict, check_admissibility(&scaled, 8).unwrap().verdict);
    }

    #[test]
    fn divisibility_recovers_constructed_quotients(
        q1 in -4i64..=4, q2 in 1i64..=4, q3 in -4i64..=4
    ) {
        // Every planar harmonic polynomial odd in `x1` is a multiple of `x1`.
        let n = 2;
        let x1 = MultiPoly::var(n, 0);
        let x2 = MultiPoly::var(n, 1);
        let p3 = (&x1.pow(3) - &(&x1 * &x2.pow(2)).scale(&int(3))).scale(&int(q2));
        let p5 = harmonic_projection(&x1.pow(5).scale(&int(q3))).unwrap();
        let mut comps = vec![HarmonicComponent::new(x1.scale(&int(if q1 == 0 { 1 } else { q1 }))).unwrap()];
        comps.push(HarmonicComponent::new(p3).unwrap());
        if !p5.is_zero() {
            comps.push(HarmonicComponent::new(p5).unwrap());
        }
        let k = KernelSpec::from_components(n, comps).unwrap();
        let r = check_admissibility(&k, 6).unwrap();
        prop_assert!(r.divisibility_ok);
        for ((d, q), c) in r.quotients.iter().zip(k.components()) {
            prop_assert_eq!(*d, c.degree());
            let q = q.clone().unwrap();
            prop_assert_eq!(&q * r.divisor.poly(), c.poly().clone());
        }
    }
}

#[test]
fn deeper_search_never_flips_a_decided_verdict() {
    for n in [2, 3] {
        for lam in lambdas() {
            let k = KernelSpec::odd_pair_family(n, &lam).unwrap();
            let shallow = check_admissibility(&k, 6).unwrap().verdict;
            let deep = check_admissibility(&k, 12).unwrap().verdict;
            if shallow != Verdict::Inconclusive {
                assert_eq!(shallow, deep, "n={n} λ={lam}");
            }
        }
    }
}

#[test]
fn witness_is_a_float_zero_at_unit_lambda() {
    for n in [2, 3] {
        for lam in [int(1), int(-1)] {
            let r = check_admissibility(&KernelSpec::odd_pair_family(n, &lam).unwrap(), 14).unwrap();
            assert_eq!(r.certified_min, Some(MinBound::Vanishes));
            let w = r.witness.expect("witness");
            let f = r.real_sum.expect("real sum").eval(&w);
            assert!(f.abs() < 1e-10, "n={n} λ={lam}: {f}");
        }
    }
}

#[test]
fn admissible_range_of_the_odd_pair_family() {
    // `F ∝ 1 - λ(ξ1² - 3ξ2²)` and `ξ1² - 3ξ2²` sweeps `[-3, 1]` on the sphere,
    // so `F` has no zero exactly when `-1/3 < λ < 1`.
    for (num, den, pass) in [(-1, 3, false), (-3, 10, true), (0, 1, true), (9, 10, true), (1, 1, false), (-1, 2, false)]
    {
        let k = KernelSpec::odd_pair_family(2, &rat(num, den)).unwrap();
        let v = check_admissibility(&k, 14).unwrap().verdict;
        assert_eq!(v == Verdict::Pass, pass, "λ={num}/{den}: {v}");
    }
}
