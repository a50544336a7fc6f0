//! Stationary kernel, its geometric eigenvalue ladder, the positivity
//! condition on the diffusion coefficients, minimum bath temperatures, and
//! the pure-state width conditions.
//!
//! All formulas are in dimensionless units (`hbar = m = k_B = 1`). The
//! stationary kernel in center-of-mass/relative form is
//! `rho(x, y) = 2 sqrt(C/pi) exp(-C (x+y)^2 - A (x-y)^2)` with
//! `A = D_pp / (4 gamma)` and `C = gamma omega^2 / (4 (D_pp - 4 gamma D_px))`;
//! its spectrum is the geometric ladder `eps_n = eps0 * eps^n`.

use crate::error::{Error, Result};
use crate::float::Real;
use crate::model::{to_f64, DiffusionCase, ModelParams};

/// Spectral data of the stationary Gaussian kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadySpectrum<T> {
    /// `A = D_pp / (4 gamma)`
    pub a_coef: T,
    /// `C = gamma omega^2 / (4 (D_pp - 4 gamma D_px))`
    pub c_coef: T,
    /// `eps0 = 2 sqrt(C) / (sqrt(A) + sqrt(C))`
    pub eps0: T,
    /// `eps = (sqrt(A) - sqrt(C)) / (sqrt(A) + sqrt(C))`
    pub eps: T,
}

impl<T: Real> SteadySpectrum<T> {
    /// `eps_n = eps0 * eps^n`.
    pub fn eigenvalue(&self, n: u32) -> T {
        self.eps0 * self.eps.powi(n as i32)
    }

    /// Geometric series sum `sum_n eps_n = eps0 / (1 - eps)`; equals 1.
    pub fn eigenvalue_sum(&self) -> T {
        self.eps0 / (T::one() - self.eps)
    }

    /// Steady purity `sqrt(C / A) = eps0^2 / (1 - eps^2)`.
    pub fn purity(&self) -> T {
        (self.c_coef / self.a_coef).sqrt()
    }

    /// All eigenvalues non-negative iff `A >= C`.
    pub fn positive(&self) -> bool {
        self.a_coef >= self.c_coef
    }
}

fn steady_coefficients<T: Real>(params: &ModelParams<T>) -> Result<(T, T)> {
    let (d_pp, d_px) = params.diffusion();
    let gamma = params.gamma();
    let omega = params.omega();
    let denom = d_pp - T::lit(4.0) * gamma * d_px;
    if !(denom > T::zero()) {
        return Err(Error::SteadyStateInfeasible {
            denom: to_f64(denom),
        });
    }
    let a = d_pp / (T::lit(4.0) * gamma);
    let c = gamma * omega * omega / (T::lit(4.0) * denom);
    Ok((a, c))
}

/// Stationary kernel value `rho(x, y, infinity)`.
pub fn steady_kernel<T: Real>(params: &ModelParams<T>, x: T, y: T) -> Result<T> {
    let (a, c) = steady_coefficients(params)?;
    let norm = T::lit(2.0) * (c / T::PI()).sqrt();
    let sum = x + y;
    let diff = x - y;
    Ok(norm * (-c * sum * sum - a * diff * diff).exp())
}

/// Spectral parameters of the stationary kernel.
pub fn steady_spectrum<T: Real>(params: &ModelParams<T>) -> Result<SteadySpectrum<T>> {
    let (a, c) = steady_coefficients(params)?;
    let sa = a.sqrt();
    let sc = c.sqrt();
    Ok(SteadySpectrum {
        a_coef: a,
        c_coef: c,
        eps0: T::lit(2.0) * sc / (sa + sc),
        eps: (sa - sc) / (sa + sc),
    })
}

/// Positivity of the stationary state:
/// `D_pp^2 - 4 gamma D_pp D_px >= gamma^2 omega^2` (equivalently `A >= C`).
pub fn positivity_condition<T: Real>(params: &ModelParams<T>) -> bool {
    let (d_pp, d_px) = params.diffusion();
    let gamma = params.gamma();
    let omega = params.omega();
    d_pp * d_pp - T::lit(4.0) * gamma * d_pp * d_px >= gamma * gamma * omega * omega
}

/// Minimum bath temperature, or a marker that no temperature helps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TMin<T> {
    Temperature(T),
    Infeasible,
}

impl<T: Real> TMin<T> {
    pub fn temperature(&self) -> Option<T> {
        match self {
            TMin::Temperature(t) => Some(*t),
            TMin::Infeasible => None,
        }
    }
}

/// Minimum temperature for a non-negative stationary spectrum, per case:
/// case I gives `omega/2`; case II `omega / (2 sqrt(1 + 2 gamma/Omega))`;
/// case III `(omega/2) sqrt(1 + 2 Omega gamma / (3 pi omega^2))`; case IV is
/// infeasible (the condition reduces to `0 >= 3 omega^2 + 4 gamma^2`).
pub fn t_min<T: Real>(
    case: DiffusionCase,
    gamma: T,
    omega: T,
    cutoff: Option<T>,
) -> Result<TMin<T>> {
    let half = T::lit(0.5);
    match case {
        DiffusionCase::I => Ok(TMin::Temperature(half * omega)),
        DiffusionCase::II => {
            let cut = require_cutoff(cutoff)?;
            Ok(TMin::Temperature(
                half * omega / (T::one() + T::lit(2.0) * gamma / cut).sqrt(),
            ))
        }
        DiffusionCase::III => {
            let cut = require_cutoff(cutoff)?;
            Ok(TMin::Temperature(
                half * omega
                    * (T::one()
                        + T::lit(2.0) * cut * gamma / (T::lit(3.0) * T::PI() * omega * omega))
                    .sqrt(),
            ))
        }
        DiffusionCase::IV => Ok(TMin::Infeasible),
        DiffusionCase::Custom => Err(Error::UnsupportedCase {
            case,
            reason: "no temperature prescription for custom coefficients",
        }),
    }
}

fn require_cutoff<T: Real>(cutoff: Option<T>) -> Result<T> {
    cutoff.ok_or(Error::InvalidParameter {
        name: "cutoff",
        value: f64::NAN,
        reason: "required for this diffusion case",
    })
}

/// Width condition a pure state must satisfy so its purity does not start
/// growing: the minimum position width as a function of the `x p` covariance,
/// with a feasibility bound on the covariance where one exists.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WidthCondition<T> {
    case: DiffusionCase,
    gamma: T,
    omega: T,
    temperature: Option<T>,
    cutoff: Option<T>,
    d_pp: T,
    d_px: T,
}

impl<T: Real> WidthCondition<T> {
    pub fn for_params(params: &ModelParams<T>) -> Self {
        let (d_pp, d_px) = params.diffusion();
        Self {
            case: params.case(),
            gamma: params.gamma(),
            omega: params.omega(),
            temperature: params.temperature(),
            cutoff: params.cutoff(),
            d_pp,
            d_px,
        }
    }

    pub fn case(&self) -> DiffusionCase {
        self.case
    }

    /// Largest admissible covariance `sigma_px`, where the case has one.
    pub fn sigma_px_bound(&self) -> Option<T> {
        match self.case {
            DiffusionCase::III => {
                let t = self.temperature.expect("case III has a temperature");
                let cut = self.cutoff.expect("case III has a cutoff");
                Some((T::lit(3.0) * T::PI() * t / cut).sqrt())
            }
            DiffusionCase::IV => {
                let root = (self.omega * self.omega - self.gamma * self.gamma).sqrt();
                Some((root / (T::lit(2.0) * self.gamma)).sqrt())
            }
            _ => None,
        }
    }

    /// Minimum position width `sigma_xx` for the given covariance
    /// `sigma_px`; `None` when `sigma_px` exceeds the feasibility bound.
    pub fn min_sigma_xx(&self, sigma_px: T) -> Option<T> {
        let quarter = T::lit(0.25);
        let spx2 = sigma_px * sigma_px;
        match self.case {
            DiffusionCase::I => {
                let t = self.temperature.expect("case I has a temperature");
                Some(T::lit(0.5) / t.sqrt())
            }
            DiffusionCase::II => {
                let t = self.temperature.expect("case II has a temperature");
                let cut = self.cutoff.expect("case II has a cutoff");
                Some(T::lit(0.5) * (T::one() / t + T::lit(2.0) * spx2 / cut).sqrt())
            }
            DiffusionCase::III => {
                let t = self.temperature.expect("case III has a temperature");
                let cut = self.cutoff.expect("case III has a cutoff");
                let arg = quarter / t - cut * spx2 / (T::lit(12.0) * T::PI() * t * t);
                (arg >= T::zero()).then(|| arg.sqrt())
            }
            DiffusionCase::IV => {
                let w2 = self.omega * self.omega;
                let root = (w2 - self.gamma * self.gamma).sqrt();
                let arg = root / w2 - T::lit(2.0) * self.gamma * spx2 / w2;
                (arg >= T::zero()).then(|| arg.sqrt())
            }
            DiffusionCase::Custom => {
                // generic rate inequality gamma <= 2 (D_pp s_xx^2 + 2 D_px s_px^2)
                let arg = (self.gamma - T::lit(4.0) * self.d_px * spx2)
                    / (T::lit(2.0) * self.d_pp);
                if arg <= T::zero() {
                    Some(T::zero())
                } else {
                    Some(arg.sqrt())
                }
            }
        }
    }
}

/// Whether a pure state with widths `(sigma_xx, sigma_px)` keeps the purity
/// non-increasing at the instant it is pure. `false` also covers covariances
/// beyond the case's self-consistency bound.
pub fn pure_state_condition<T: Real>(
    params: &ModelParams<T>,
    sigma_xx: T,
    sigma_px: T,
) -> bool {
    match WidthCondition::for_params(params).min_sigma_xx(sigma_px) {
        Some(min) => sigma_xx >= min,
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::integrate_1d;
    use approx::assert_relative_eq;

    type P = ModelParams<f64>;

    #[test]
    fn spectrum_case_i_at_threshold() {
        let params = P::case_i(0.35, 0.5).unwrap();
        let s = steady_spectrum(&params).unwrap();
        assert_relative_eq!(s.a_coef, 0.25, max_relative = 1e-14);
        assert_relative_eq!(s.c_coef, 0.25, max_relative = 1e-14);
        assert_relative_eq!(s.eps0, 1.0, max_relative = 1e-13);
        assert!(s.eps.abs() < 1e-13);
        assert_relative_eq!(s.purity(), 1.0, max_relative = 1e-13);
    }

    #[test]
    fn spectrum_case_i_warm() {
        let params = P::case_i(0.35, 5.0).unwrap();
        let s = steady_spectrum(&params).unwrap();
        assert_relative_eq!(s.purity(), 0.1, max_relative = 1e-13);
        assert!(s.positive());
    }

    #[test]
    fn eigenvalue_sum_is_one() {
        for params in [
            P::case_i(0.35, 0.5).unwrap(),
            P::case_i(0.35, 5.0).unwrap(),
            P::case_ii(0.15, 4.49, 1.25).unwrap(),
            P::case_iii(0.35, 1.0, 1.25).unwrap(),
        ] {
            let s = steady_spectrum(&params).unwrap();
            assert_relative_eq!(s.eigenvalue_sum(), 1.0, max_relative = 1e-12);
            // direct partial sum agrees
            let partial: f64 = (0..200).map(|n| s.eigenvalue(n)).sum();
            assert_relative_eq!(partial, 1.0, max_relative = 1e-9);
        }
    }

    #[test]
    fn kernel_normalized_and_symmetric() {
        let params = P::case_i(0.35, 5.0).unwrap();
        let trace = integrate_1d(-30.0, 30.0, 400, |x| steady_kernel(&params, x, x).unwrap());
        assert_relative_eq!(trace, 1.0, max_relative = 1e-8);
        for (x, y) in [(0.3, -1.2), (2.0, 0.7)] {
            assert_eq!(
                steady_kernel(&params, x, y).unwrap(),
                steady_kernel(&params, y, x).unwrap()
            );
        }
    }

    #[test]
    fn kernel_rank_one_at_threshold_temperature() {
        // A = C makes eps = 0: the kernel is the ground-state projector of
        // width set by C
        let params = P::case_i(0.35, 0.5).unwrap();
        let s = steady_spectrum(&params).unwrap();
        let c = s.c_coef;
        let phi = |x: f64| (4.0 * c / std::f64::consts::PI).powf(0.25) * (-2.0 * c * x * x).exp();
        for x in [-2.0, -0.5, 0.0, 1.0, 2.5] {
            for y in [-1.5, 0.0, 0.8, 2.0] {
                let k = steady_kernel(&params, x, y).unwrap();
                assert!((k - phi(x) * phi(y)).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn positivity_condition_cases() {
        assert!(positivity_condition(&P::case_i(0.35, 0.5).unwrap()));
        assert!(!positivity_condition(&P::case_i(0.35, 0.4).unwrap()));
        for gamma in [0.1, 0.2, 0.3] {
            assert!(!positivity_condition(&P::case_iv(gamma).unwrap()));
        }
    }

    #[test]
    fn t_min_values() {
        assert_eq!(
            t_min::<f64>(DiffusionCase::I, 0.35, 1.0, None).unwrap(),
            TMin::Temperature(0.5)
        );
        let tii = t_min::<f64>(DiffusionCase::II, 0.15, 1.0, Some(1.25))
            .unwrap()
            .temperature()
            .unwrap();
        assert!((tii - 0.4490).abs() < 1e-4);
        assert_relative_eq!(tii, 0.5 / 1.24f64.sqrt(), max_relative = 1e-13);
        let tiii = t_min::<f64>(DiffusionCase::III, 0.35, 1.0, Some(1.25))
            .unwrap()
            .temperature()
            .unwrap();
        let expected = 0.5 * (1.0 + 2.0 * 1.25 * 0.35 / (3.0 * std::f64::consts::PI)).sqrt();
        assert_relative_eq!(tiii, expected, max_relative = 1e-13);
        assert_eq!(
            t_min::<f64>(DiffusionCase::IV, 0.35, 1.0, None).unwrap(),
            TMin::Infeasible
        );
    }

    #[test]
    fn t_min_case_ii_reduces_to_case_i_for_weak_coupling() {
        let t = t_min::<f64>(DiffusionCase::II, 1e-12, 1.0, Some(1.0))
            .unwrap()
            .temperature()
            .unwrap();
        assert_relative_eq!(t, 0.5, max_relative = 1e-10);
    }

    #[test]
    fn positivity_flips_exactly_at_t_min_cases_i_ii() {
        // bisect the positivity threshold in T and compare with t_min
        let configs = [
            (DiffusionCase::I, 0.35, None),
            (DiffusionCase::I, 0.01, None),
            (DiffusionCase::II, 0.15, Some(1.25)),
            (DiffusionCase::II, 0.01, Some(2.0)),
        ];
        for (case, gamma, cutoff) in configs {
            let expected = t_min::<f64>(case, gamma, 1.0, cutoff)
                .unwrap()
                .temperature()
                .unwrap();
            let positive = |t: f64| {
                let p = P::new(case, gamma, 1.0, Some(t), cutoff).unwrap();
                positivity_condition(&p)
            };
            let (mut lo, mut hi) = (1e-3, 10.0);
            assert!(!positive(lo) && positive(hi));
            while hi - lo > 1e-10 {
                let mid = 0.5 * (lo + hi);
                if positive(mid) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            assert!(
                (0.5 * (lo + hi) - expected).abs() < 1e-9,
                "case {case:?}: bisected {} vs t_min {expected}",
                0.5 * (lo + hi)
            );
        }
    }

    #[test]
    fn pure_state_condition_case_i() {
        let params = P::case_i(0.35, 0.5).unwrap();
        // initial width of the n=0, beta=0.6 state
        let sigma_xx = 1.0 / (0.6 * 2.0f64.sqrt());
        assert!((sigma_xx - 1.1785).abs() < 1e-4);
        assert!(pure_state_condition(&params, sigma_xx, 0.0));
        assert!(!pure_state_condition(&params, 0.5, 0.0));
        // threshold itself
        let wc = WidthCondition::for_params(&params);
        assert_relative_eq!(
            wc.min_sigma_xx(0.0).unwrap(),
            0.5 / 0.5f64.sqrt(),
            max_relative = 1e-13
        );
    }

    #[test]
    fn pure_state_condition_case_ii_threshold() {
        let params = P::case_ii(0.15, 4.49, 1.25).unwrap();
        let wc = WidthCondition::for_params(&params);
        let spx = 0.7;
        let expected = 0.5 * (1.0f64 / 4.49 + 2.0 * spx * spx / 1.25).sqrt();
        assert_relative_eq!(wc.min_sigma_xx(spx).unwrap(), expected, max_relative = 1e-13);
        assert!(wc.sigma_px_bound().is_none());
    }

    #[test]
    fn pure_state_condition_case_iii_self_consistency() {
        let params = P::case_iii(0.35, 1.0, 1.25).unwrap();
        let wc = WidthCondition::for_params(&params);
        let bound = (3.0 * std::f64::consts::PI * 1.0 / 1.25).sqrt();
        assert_relative_eq!(wc.sigma_px_bound().unwrap(), bound, max_relative = 1e-13);
        assert!(wc.min_sigma_xx(bound * 1.01).is_none());
        assert!(!pure_state_condition(&params, 10.0, bound * 1.01));
        let expected0 = 0.5 / 1.0f64.sqrt();
        assert_relative_eq!(wc.min_sigma_xx(0.0).unwrap(), expected0, max_relative = 1e-13);
    }

    #[test]
    fn pure_state_condition_case_iv_self_consistency() {
        let params = P::case_iv(0.35).unwrap();
        let wc = WidthCondition::for_params(&params);
        let root = (1.0f64 - 0.35 * 0.35).sqrt();
        let bound = (root / (2.0 * 0.35)).sqrt();
        assert_relative_eq!(wc.sigma_px_bound().unwrap(), bound, max_relative = 1e-13);
        assert!(!pure_state_condition(&params, 100.0, bound + 1e-6));
        assert_relative_eq!(
            wc.min_sigma_xx(0.0).unwrap(),
            root.sqrt(),
            max_relative = 1e-13
        );
    }

    #[test]
    fn infeasible_steady_state_for_case_iv_strong_coupling() {
        // D_pp - 4 gamma D_px <= 0 for gamma >= omega / (2 sqrt 2)
        let params = P::case_iv(0.4).unwrap();
        assert!(matches!(
            steady_kernel(&params, 0.0, 0.0),
            Err(Error::SteadyStateInfeasible { .. })
        ));
        assert!(matches!(
            steady_spectrum(&params),
            Err(Error::SteadyStateInfeasible { .. })
        ));
    }
}
