//! Exact and numerical tools for odd polynomial Calderón–Zygmund kernels.
//!
//! - [`scalar`], [`poly`]: exact symbolic scalars and multivariate polynomials.
//! - [`kernel`]: kernels `Ω(x)/|x|^{n+d}` with odd polynomial `Ω` and their multipliers.
//! - [`admissibility`]: certified decision of the divisibility and non-vanishing condition.
//! - [`identities`]: exact combinatorial, Gamma and Bessel-series identities.
//! - [`lab`]: discrete Hilbert, Beurling and maximal operators on grid functions.
//! - [`experiments`]: the numerical experiments behind the `czkit exp` command.

pub mod admissibility;
pub mod error;
pub mod experiments;
pub mod identities;
pub mod kernel;
pub mod lab;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};
