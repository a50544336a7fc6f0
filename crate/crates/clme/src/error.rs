//! Error type shared by all modules.

use thiserror::Error;

use crate::model::DiffusionCase;

/// Errors produced by model construction, evaluation, and quadrature.
///
/// Diagnostic payloads are stored as `f64` regardless of the working scalar
/// type so the variants stay non-generic.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// `|gamma^2 - omega^2|` fell below `EPS_CRIT`; the characteristic
    /// formulas divide by `X^{3/2}` and degenerate at critical damping.
    #[error(
        "near-critical damping: |gamma^2 - omega^2| = {x_abs:.3e} < eps_crit = {eps_crit:.1e}; \
         the characteristic solution degenerates at gamma = omega"
    )]
    CriticalDamping { x_abs: f64, eps_crit: f64 },

    /// A parameter failed its validity requirement.
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// Case IV diffusion coefficients require an under-damped oscillator.
    #[error("case IV requires omega > gamma (got gamma = {gamma}, omega = {omega}): the \
             coefficients contain sqrt(omega^2 - gamma^2)")]
    OverdampedCaseIv { gamma: f64, omega: f64 },

    /// Operation defined only for a subset of the diffusion cases.
    #[error("operation not supported for case {case:?}: {reason}")]
    UnsupportedCase {
        case: DiffusionCase,
        reason: &'static str,
    },

    /// The steady-state kernel is not normalizable.
    #[error("steady state infeasible: D_pp - 4*gamma*D_px = {denom:.6e} <= 0, the stationary \
             kernel is not normalizable")]
    SteadyStateInfeasible { denom: f64 },

    /// Doubling refinement did not reach the requested tolerance.
    #[error("quadrature did not converge: last = {last:.12e}, previous = {prev:.12e}, \
             relative tolerance = {tol:.1e}")]
    QuadratureNotConverged { last: f64, prev: f64, tol: f64 },

    /// The propagator exponent exceeded the configured overflow bound.
    #[error("propagator exponent overflow: Re(E) = {re:.3e} exceeds bound {bound:.3e} at \
             (K, r, t) = ({k}, {r}, {t}); truncate the quadrature domain instead")]
    ExponentOverflow {
        re: f64,
        bound: f64,
        k: f64,
        r: f64,
        t: f64,
    },

    /// Step-halving comparison of the characteristic integrator disagreed.
    #[error("characteristic integrator unstable: halving the step changed the result by \
             {deviation:.3e} (tolerance {tol:.1e})")]
    IntegratorUnstable { deviation: f64, tol: f64 },
}

/// Crate-wide result alias.
pub type Result<V> = std::result::Result<V, Error>;
