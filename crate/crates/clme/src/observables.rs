//! Purity, phase-space moments, the Robertson-Schrodinger functional, and
//! time-series scans with violation flags.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::evolution::EvolvedDensity;
use crate::float::{cx, sqrt_two_pi, Real};
use crate::model::to_f64;
use crate::quadrature::{integrate_2d, QuadratureSpec};

/// Tolerance separating genuine violations from quadrature noise.
pub const FLAG_TOL: f64 = 1e-6;

/// First and second phase-space moments of the evolved state.
///
/// Variance positivity is a diagnostic, not an invariant: non-positive
/// states can produce negative variances, which [`MomentSet::variances_ok`]
/// reports rather than asserts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSet<T> {
    pub mean_x: T,
    pub mean_x2: T,
    pub mean_p: T,
    pub mean_p2: T,
    /// `<xp + px> / 2`
    pub sym_xp: T,
}

impl<T: Real> MomentSet<T> {
    pub fn var_x(&self) -> T {
        self.mean_x2 - self.mean_x * self.mean_x
    }

    pub fn var_p(&self) -> T {
        self.mean_p2 - self.mean_p * self.mean_p
    }

    pub fn cov_xp(&self) -> T {
        self.sym_xp - self.mean_x * self.mean_p
    }

    pub fn variances_ok(&self) -> bool {
        self.var_x() >= T::zero() && self.var_p() >= T::zero()
    }
}

/// Moments via exact differentiation of the closed polynomial-Gaussian form
/// at the Fourier origin.
///
/// The underlying double integrals collapse: integrating the synthesis
/// kernel over `R` produces a delta in `K`, so each moment is a derivative
/// of `rho(K, r, t)` at `(K, r) = (0, 0)`:
/// `<x> = -i sqrt(2 pi) d_K rho`, `<x^2> = -sqrt(2 pi) d_KK rho`,
/// `<p> = -i sqrt(2 pi) d_r rho`, `<p^2> = -sqrt(2 pi) d_rr rho`,
/// `<xp + px>/2 = -sqrt(2 pi) d_Kr rho`.
pub fn moments<T: Real>(evolved: &EvolvedDensity<T>, t: T) -> MomentSet<T> {
    let cf = evolved.closed_form_at(t);
    let dk = cf.deriv_k();
    let dr = cf.deriv_r();
    let dkk = dk.deriv_k().at_origin();
    let drr = dr.deriv_r().at_origin();
    let dkr = dk.deriv_r().at_origin();
    let dk0 = dk.at_origin();
    let dr0 = dr.at_origin();
    let s = sqrt_two_pi::<T>();
    MomentSet {
        mean_x: s * dk0.im,
        mean_x2: -s * dkk.re,
        mean_p: s * dr0.im,
        mean_p2: -s * drr.re,
        sym_xp: -s * dkr.re,
    }
}

/// Central-difference fallback for the same moments (step `h` in both
/// variables); used as a cross-check of the analytic path.
pub fn moments_fd<T: Real>(evolved: &EvolvedDensity<T>, t: T, h: T) -> Result<MomentSet<T>> {
    let f = |k: T, r: T| evolved.rho_fourier(k, r, t);
    let two = T::lit(2.0);
    let f00 = f(T::zero(), T::zero())?;
    let fk_p = f(h, T::zero())?;
    let fk_m = f(-h, T::zero())?;
    let fr_p = f(T::zero(), h)?;
    let fr_m = f(T::zero(), -h)?;
    let fpp = f(h, h)?;
    let fpm = f(h, -h)?;
    let fmp = f(-h, h)?;
    let fmm = f(-h, -h)?;
    let dk = (fk_p - fk_m) / cx(two * h);
    let dr = (fr_p - fr_m) / cx(two * h);
    let dkk = (fk_p - f00 * cx(two) + fk_m) / cx(h * h);
    let drr = (fr_p - f00 * cx(two) + fr_m) / cx(h * h);
    let dkr = (fpp - fpm - fmp + fmm) / cx(T::lit(4.0) * h * h);
    let s = sqrt_two_pi::<T>();
    Ok(MomentSet {
        mean_x: s * dk.im,
        mean_x2: -s * dkk.re,
        mean_p: s * dr.im,
        mean_p2: -s * drr.re,
        sym_xp: -s * dkr.re,
    })
}

/// Robertson-Schrodinger functional
/// `sigma_RS = var(x) var(p) - cov(x, p)^2`.
pub fn sigma_rs<T: Real>(m: &MomentSet<T>) -> T {
    let cov = m.cov_xp();
    m.var_x() * m.var_p() - cov * cov
}

/// Dimensionless left-hand side `4 sigma_RS` (the uncertainty bound is 1).
pub fn sigma_rs4<T: Real>(m: &MomentSet<T>) -> T {
    T::lit(4.0) * sigma_rs(m)
}

/// Purity value with the quadrature refinement error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PurityEstimate<T> {
    pub value: T,
    pub error: T,
}

/// Plancherel purity `Tr rho^2 = int |rho(K, r, t)|^2 dK dr` over the spec's
/// truncated domain with doubling refinement.
pub fn purity<T: Real>(
    evolved: &EvolvedDensity<T>,
    t: T,
    quad: &QuadratureSpec<T>,
) -> Result<PurityEstimate<T>> {
    let cf = evolved.closed_form_at(t);
    let result = integrate_2d(quad, |k, r| cf.eval(k, r).norm_sqr())?;
    Ok(PurityEstimate {
        value: result.value,
        error: result.error,
    })
}

/// How scans size the purity quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuadraturePolicy<T> {
    /// One fixed domain for every sample.
    Fixed(QuadratureSpec<T>),
    /// Per-sample truncation sized from the evolved Gaussian decay.
    Auto { nodes: usize, refine_tol: T },
}

impl<T: Real> Default for QuadraturePolicy<T> {
    fn default() -> Self {
        QuadraturePolicy::Auto {
            nodes: 64,
            refine_tol: T::lit(1e-9),
        }
    }
}

impl<T: Real> QuadraturePolicy<T> {
    /// Resolve to a concrete spec for the state at time `t`.
    pub fn resolve(&self, evolved: &EvolvedDensity<T>, t: T) -> Result<QuadratureSpec<T>> {
        match self {
            QuadraturePolicy::Fixed(spec) => Ok(*spec),
            QuadraturePolicy::Auto { nodes, refine_tol } => {
                auto_spec(evolved, t, *nodes, *refine_tol)
            }
        }
    }
}

/// Truncation bounds from the bounding box of the `|rho| = exp(-26)` level
/// set of the evolved Gaussian factor.
pub fn auto_spec<T: Real>(
    evolved: &EvolvedDensity<T>,
    t: T,
    nodes: usize,
    refine_tol: T,
) -> Result<QuadratureSpec<T>> {
    let cf = evolved.closed_form_at(t);
    let (qkk, qkr, qrr) = cf.real_quad();
    let det = qkk * qrr - qkr * qkr * T::lit(0.25);
    if !(qkk < T::zero()) || !(qrr < T::zero()) || !(det > T::zero()) {
        return Err(Error::InvalidParameter {
            name: "t",
            value: to_f64(t),
            reason: "evolved Gaussian form is not negative definite; cannot size quadrature",
        });
    }
    let level = T::lit(26.0);
    let half_k = (level * (-qrr) / det).sqrt();
    let half_r = (level * (-qkk) / det).sqrt();
    QuadratureSpec::new(half_k, half_r, nodes, nodes, refine_tol)
}

/// Sampled time series of purity, `4 sigma_RS`, and violation flags.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservableSeries<T> {
    pub times: Vec<T>,
    pub purity: Vec<T>,
    pub purity_err: Vec<T>,
    pub sigma_rs4: Vec<T>,
    pub purity_violation: Vec<bool>,
    pub uncertainty_violation: Vec<bool>,
    /// Per-sample quadrature failure, if any.
    pub failures: Vec<Option<String>>,
}

impl<T: Real> ObservableSeries<T> {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn any_purity_violation(&self) -> bool {
        self.purity_violation.iter().any(|&b| b)
    }

    pub fn any_uncertainty_violation(&self) -> bool {
        self.uncertainty_violation.iter().any(|&b| b)
    }

    pub fn any_failure(&self) -> bool {
        self.failures.iter().any(|f| f.is_some())
    }
}

/// Scan the observables over an ascending time grid.
///
/// Samples are independent and evaluated in parallel; output order follows
/// the input grid. Quadrature failures mark the sample instead of aborting
/// the scan.
pub fn scan<T: Real>(
    evolved: &EvolvedDensity<T>,
    t_grid: &[T],
    policy: &QuadraturePolicy<T>,
) -> Result<ObservableSeries<T>> {
    if t_grid.is_empty() {
        return Err(Error::InvalidParameter {
            name: "t_grid",
            value: 0.0,
            reason: "time grid must contain at least one sample",
        });
    }
    if t_grid[0] < T::zero() || t_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameter {
            name: "t_grid",
            value: to_f64(t_grid[0]),
            reason: "time grid must be ascending and non-negative",
        });
    }
    let flag_tol = T::lit(FLAG_TOL);
    let samples: Vec<(T, T, T, Option<String>)> = t_grid
        .par_iter()
        .map(|&t| {
            let m = moments(evolved, t);
            let s4 = sigma_rs4(&m);
            match policy
                .resolve(evolved, t)
                .and_then(|spec| purity(evolved, t, &spec))
            {
                Ok(p) => (p.value, p.error, s4, None),
                Err(e) => (T::nan(), T::nan(), s4, Some(e.to_string())),
            }
        })
        .collect();

    let mut series = ObservableSeries {
        times: t_grid.to_vec(),
        purity: Vec::with_capacity(t_grid.len()),
        purity_err: Vec::with_capacity(t_grid.len()),
        sigma_rs4: Vec::with_capacity(t_grid.len()),
        purity_violation: Vec::with_capacity(t_grid.len()),
        uncertainty_violation: Vec::with_capacity(t_grid.len()),
        failures: Vec::with_capacity(t_grid.len()),
    };
    for (p, perr, s4, fail) in samples {
        series.purity.push(p);
        series.purity_err.push(perr);
        series.sigma_rs4.push(s4);
        series
            .purity_violation
            .push(fail.is_none() && p > T::one() + flag_tol);
        series.uncertainty_violation.push(s4 < T::one() - flag_tol);
        series.failures.push(fail);
    }
    Ok(series)
}

/// `n` logarithmically spaced points on `[a, b]`.
pub fn log_spaced<T: Real>(a: T, b: T, n: usize) -> Vec<T> {
    assert!(n >= 2 && a > T::zero() && b > a);
    let la = a.ln();
    let lb = b.ln();
    (0..n)
        .map(|i| (la + (lb - la) * T::of_usize(i) / T::of_usize(n - 1)).exp())
        .collect()
}

/// `n` linearly spaced points on `[a, b]`.
pub fn lin_spaced<T: Real>(a: T, b: T, n: usize) -> Vec<T> {
    assert!(n >= 2 && b > a);
    (0..n)
        .map(|i| a + (b - a) * T::of_usize(i) / T::of_usize(n - 1))
        .collect()
}

/// Default scan grid: 400 log-spaced points on `[1e-3, 50/gamma]`, resolving
/// both the short-time dip and the steady plateau.
pub fn default_time_grid<T: Real>(gamma: T) -> Vec<T> {
    log_spaced(T::lit(1e-3), T::lit(50.0) / gamma, 400)
}
