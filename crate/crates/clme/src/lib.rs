//! Exact solution and positivity diagnostics for the Caldeira-Leggett master
//! equation of a damped quantum harmonic oscillator.
//!
//! The master equation is solved exactly in the Fourier representation
//! `rho(K, r, t)` by the method of characteristics. On top of the closed-form
//! propagator the crate provides:
//!
//! * Hermite-Gaussian initial states and their analytic Fourier images
//!   ([`states`]),
//! * pointwise evolution and position-kernel reconstruction ([`evolution`]),
//! * Plancherel purity, phase-space moments, and the Robertson-Schrodinger
//!   functional with violation flags ([`observables`]),
//! * the stationary kernel, its geometric spectrum, positivity conditions,
//!   and minimum bath temperatures ([`steady`]),
//! * independent verification through Runge-Kutta characteristic
//!   propagation and direct kernel diagonalization ([`oracle`]).
//!
//! Everything is generic over the floating-point scalar via [`Real`];
//! concrete `f64`/`f32` aliases are exported at the crate root.

pub mod closed_form;
pub mod error;
pub mod evolution;
pub mod float;
pub mod model;
pub mod observables;
pub mod oracle;
pub mod quadrature;
pub mod states;
pub mod steady;

pub use error::{Error, Result};
pub use float::{Real, C};
pub use model::{
    backmap, char_roots, diffusion_coefficients, exponent_ab, propagator_exponent,
    temperature_derivative_integrand, CharRoots, DiffusionCase, LinearMap, ModelParams,
    Quadratic, EPS_CRIT,
};
pub use states::{hermite, HermiteGaussState};
pub use evolution::{EvolvedDensity, KernelGrid, KernelGridSpec};
pub use observables::{
    moments, purity, scan, sigma_rs, sigma_rs4, MomentSet, ObservableSeries, PurityEstimate,
    QuadraturePolicy, FLAG_TOL,
};
pub use quadrature::{gauss_legendre, integrate_2d, QuadratureSpec};
pub use steady::{
    positivity_condition, pure_state_condition, steady_kernel, steady_spectrum, t_min,
    SteadySpectrum, TMin, WidthCondition,
};
pub use oracle::{
    equivalence_max_deviation, min_kernel_eigenvalue, propagate_characteristic_numeric,
    purity_rate_check, temperature_monotonicity_check, GridEigenReport, MonotonicityReport,
    RateCheck,
};

/// `f64` aliases for the main types.
pub type ModelParams64 = ModelParams<f64>;
pub type CharRoots64 = CharRoots<f64>;
pub type HermiteGaussState64 = HermiteGaussState<f64>;
pub type EvolvedDensity64 = EvolvedDensity<f64>;
pub type QuadratureSpec64 = QuadratureSpec<f64>;
pub type MomentSet64 = MomentSet<f64>;
pub type ObservableSeries64 = ObservableSeries<f64>;
pub type SteadySpectrum64 = SteadySpectrum<f64>;

/// `f32` aliases for the main types.
pub type ModelParams32 = ModelParams<f32>;
pub type CharRoots32 = CharRoots<f32>;
pub type HermiteGaussState32 = HermiteGaussState<f32>;
pub type EvolvedDensity32 = EvolvedDensity<f32>;
pub type QuadratureSpec32 = QuadratureSpec<f32>;
pub type MomentSet32 = MomentSet<f32>;
pub type ObservableSeries32 = ObservableSeries<f32>;
pub type SteadySpectrum32 = SteadySpectrum<f32>;
