//! Property tests for exact scalars, polynomials and the identity verifiers.

use num_traits::One;
use proptest::prelude::*;

use czkit::identities::{compute_a_coeff, FormalCoefficientVector};
use czkit::poly::{
    apply_diffop, divide_exact, harmonic_decompose, harmonic_projection, recombine, sphere_monomial_integral, MultiPoly,
};
use czkit::scalar::{factorial_q, gamma_exact, gamma_j, gen_binom, half, int, pow2, rat, Rational, SymScalar};

fn homogeneous(n: usize, degree: u32) -> impl Strategy<Value = MultiPoly> {
    let term = (prop::collection::vec(0..=degree, n - 1), -9i64..=9, 1i64..=4);
    prop::collection::vec(term, 1..6).prop_map(move |terms| {
        terms.into_iter().fold(MultiPoly::zero(n), |acc, (mut cuts, num, den)| {
            cuts.sort_unstable();
            let mut exps = Vec::with_capacity(n);
            let mut prev = 0;
            for c in cuts {
                exps.push(c - prev);
                prev = c;
            }
            exps.push(degree - prev);
            &acc + &MultiPoly::monomial(n, exps, rat(num, den))
        })
    })
}

fn any_homogeneous(max_degree: u32) -> impl Strategy<Value = MultiPoly> {
    (2usize..=4, 0..=max_degree).prop_flat_map(|(n, d)| homogeneous(n, d))
}

fn sym_scalar() -> impl Strategy<Value = SymScalar> {
    (-20i64..=20, 1i64..=9, 0i32..=1, -4i32..=4, 0i32..=3)
        .prop_filter("nonzero", |(q, ..)| *q != 0)
        .prop_map(|(q, den, t, h, k)| SymScalar::with_sqrt2(rat(q, den), t, h, k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn pascal_rule_for_half_integers(a in -40i64..=40, m in 1u32..=20) {
        let a = half(a);
        let lhs = gen_binom(&a, m);
        let rhs = gen_binom(&(&a - int(1)), m) + gen_binom(&(&a - int(1)), m - 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gamma_recurrence(k in 1i64..=80) {
        let a = half(k);
        let lhs = gamma_exact(&(&a + int(1))).unwrap();
        let rhs = gamma_exact(&a).unwrap().scale(&a);
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn scalar_product_commutes_and_associates(a in sym_scalar(), b in sym_scalar(), c in sym_scalar()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a * &b) / &b, a.clone());
        let z = (a.to_complex() * b.to_complex() - (&a * &b).to_complex()).norm();
        prop_assert!(z <= 1e-12 * (a.to_complex() * b.to_complex()).norm());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn decompose_then_recombine(p in any_homogeneous(9)) {
        let parts = harmonic_decompose(&p).unwrap();
        for (_, h) in &parts {
            prop_assert!(h.poly().is_harmonic());
        }
        prop_assert_eq!(recombine(p.nvars(), &parts), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn exact_division_recovers_quotient(
        (d, q) in (2usize..=3, 0u32..=3, 0u32..=3).prop_flat_map(|(n, a, b)| (homogeneous(n, a), homogeneous(n, b)))
    ) {
        prop_assume!(!d.is_zero());
        prop_assert_eq!(divide_exact(&(&d * &q), &d).unwrap(), Some(q));
    }

    #[test]
    fn harmonic_operator_on_radial_powers(
        (h, k) in (2usize..=4, 0u32..=3, 0u32..=8).prop_flat_map(|(n, j, k)| (homogeneous(n, 2 * j + 1), Just(k)))
    ) {
        let h = harmonic_projection(&h).unwrap();
        let n = h.nvars();
        let d = h.degree().unwrap_or(0);
        let lhs = apply_diffop(&h, &MultiPoly::norm_pow(n, k));
        let rhs = if k >= d && !h.is_zero() {
            let c = pow2(d as i64) * factorial_q(k) / factorial_q(k - d);
            (&h * &MultiPoly::norm_pow(n, k - d)).scale(&c)
        } else {
            MultiPoly::zero(n)
        };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sphere_integral_permutation_invariant(
        alpha in prop::collection::vec(0u32..=6, 2..=5), seed in any::<u64>()
    ) {
        let n = alpha.len();
        let mut perm = alpha.clone();
        let shift = (seed % n as u64) as usize;
        perm.rotate_left(shift);
        perm.swap(0, n - 1);
        let a = sphere_monomial_integral(&alpha, n).unwrap();
        prop_assert_eq!(a.clone(), sphere_monomial_integral(&perm, n).unwrap());
        prop_assert_eq!(a.is_zero(), alpha.iter().any(|e| e % 2 == 1));
    }

    #[test]
    fn a_coefficients_are_linear_in_components(
        (n, big_n, p) in (2u32..=4, 1u32..=4, 0u32..=4),
        u in prop::collection::vec(-5.0f64..5.0, 5),
        v in prop::collection::vec(-5.0f64..5.0, 5),
        s in -3.0f64..3.0,
    ) {
        let a: FormalCoefficientVector = compute_a_coeff(n, big_n, p);
        let w: Vec<f64> = u.iter().zip(&v).map(|(x, y)| x + s * y).collect();
        let lhs = a.evaluate(&w);
        let rhs = a.evaluate(&u) + a.evaluate(&v) * s;
        prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + lhs.norm()));
    }
}

#[test]
fn iterated_laplacian_of_radial_powers() {
    for n in 2..=6usize {
        for k in 0..=8u32 {
            for j in 0..=8u32 {
                let lhs = MultiPoly::norm_pow(n, k).laplacian_pow(j);
                let rhs = if j > k {
                    MultiPoly::zero(n)
                } else {
                    let c: Rational = (0..j)
                        .map(|i| int(2 * (k - i) as i64) * int(2 * (k - i) as i64 + n as i64 - 2))
                        .fold(Rational::one(), |a, b| a * b);
                    MultiPoly::norm_pow(n, k - j).scale(&c)
                };
                assert_eq!(lhs, rhs, "n={n} k={k} j={j}");
            }
        }
    }
}

#[test]
fn multiplier_parity() {
    for n in 2..=8 {
        for j in 1..=12 {
            let g = gamma_j(j, n);
            assert_eq!(g.is_imaginary(), j % 2 == 1, "n={n} j={j}");
            assert_eq!(g.is_real(), j % 2 == 0, "n={n} j={j}");
        }
    }
}
