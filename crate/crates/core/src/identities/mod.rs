//! Exact verification of the combinatorial and special-function formulas behind
//! the higher-order fundamental solution and its Bessel-series expansion.

mod bessel;
mod fundamental;
mod lyons_zumbrun;
mod radial;
mod suite;

pub use bessel::{
    a_coeff_closed_form, bessel_g_coeff, bessel_g_series, compute_a_coeff, sphere_sup_estimate, verify_bessel_at_zero,
    verify_decay_bounds, verify_stabilization, DecayBound, DecayReport, DecayRow, FormalCoefficientVector,
};
pub use fundamental::{
    a_l_closed, a_l_taylor, bessel_g_at_zero, c_constant_closed, c_constant_sum, c_ljk, c_ljk_from_closed_al,
    c_ljk_from_taylor, fundamental_coeffs, fundamental_solution, radial_laplacian_check, verify_al,
    verify_binomial_sums, verify_c_constants, verify_c_ljk, verify_factorial_binomial_sum, verify_falling_binomial_sum,
    verify_half_gamma_sum, verify_shifted_gamma_sum, verify_triple_binomial, FundamentalCase, FundamentalCoeffs,
};
pub use lyons_zumbrun::{lyons_zumbrun_apply, LzExpansion, RadialFamily};
pub use radial::RadialExpr;
pub use suite::{run_identity_suite, IdentityCheck, SuiteConfig};
