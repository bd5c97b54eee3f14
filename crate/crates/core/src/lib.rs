//! Numerical toolkit for trigonometric polynomials on the circle: partial
//! sums, classical kernels, function-space norms (sup, uniform-convergence,
//! Wiener, weighted, variation, half-order Sobolev, Dini functionals), and
//! pointwise-multiplier estimates, plus a reproducible experiment harness.

pub mod coeff_file;
pub mod error;
pub mod experiments;
mod fft;
pub mod kernels;
pub mod minilang;
pub mod multiplier;
pub mod norms;
mod opt;
pub mod poly;
pub mod quad;
pub mod selftest;

pub use coeff_file::{format_coefficients, parse_coefficients, read_coefficients, write_coefficients};
pub use error::{CoreError, Result};
pub use experiments::{
    default_n_list, parse_alpha_list, parse_n_list, run_experiment, ExperimentTable, OutputFormat,
    RunConfig, EXPERIMENT_IDS,
};
pub use kernels::{dirichlet, exponential, fejer, random_trig_poly, salem_g, Normalization};
pub use minilang::FnSpec;
pub use multiplier::{
    commutator, commutator_sup_bound, mu_lower_empirical, mu_upper_dini, mu_upper_log,
    mu_upper_omega, multiplier_estimate, MultiplierEstimate,
};
pub use norms::{
    a_gamma_norm, a_norm, c_norm, dini_integral, log_weighted_a_norm, modulus_of_continuity,
    norm_report, sin_log_integral, sobolev_half_norm, u_norm, u_norm_asym, uniform_dini,
    variation_norm, NormReport, WeightSequence,
};
pub use poly::{analyze, sup_norm, GridFunction, TrigPoly};
pub use selftest::{run_selftest, CheckResult};
