//! Model parameters, diffusion-coefficient prescriptions, and the
//! characteristic-curve algebra of the damped-oscillator master equation.
//!
//! The master equation for a harmonic oscillator coupled to a thermal bath
//! (units `hbar = m = k_B = 1`) carries a momentum diffusion coefficient
//! `D_pp`, a cross diffusion coefficient `D_px`, and a relaxation constant
//! `gamma`. In the Fourier representation `rho(K, r, t)` the equation is
//! first order and solvable exactly along characteristic curves; everything
//! downstream (evolution, observables, steady state) is built on the closed
//! forms in this module.
//!
//! All characteristic algebra is carried out over complex numbers: for an
//! under-damped oscillator (`gamma < omega`) the discriminant
//! `X = gamma^2 - omega^2` is negative and its square root imaginary.
//! Quantities that are provably real for real inputs are returned as complex
//! values; callers assert the imaginary residue instead of coercing.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::float::{cx, Real, C};

/// Degeneracy guard: constructions refuse `|gamma^2 - omega^2| < EPS_CRIT`.
///
/// The exact solution divides by `X^{3/2}`; the critically damped limit
/// exists but degenerates, so it is rejected rather than interpolated.
pub const EPS_CRIT: f64 = 1e-6;

/// Default bound on `Re(E)` above which exponent evaluation reports overflow.
pub const EXPONENT_REAL_BOUND: f64 = 700.0;

/// Literature prescriptions for the diffusion coefficients `(D_pp, D_px)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiffusionCase {
    /// `D_pp = 2 gamma T`, `D_px = 0` (high-temperature limit).
    I,
    /// `D_pp = 2 gamma T`, `D_px = -gamma T / Omega`.
    II,
    /// `D_pp = 2 gamma T`, `D_px = Omega gamma / (6 pi T)` (medium
    /// temperatures, truncated Lindblad equation).
    III,
    /// `D_pp = gamma omega^2 / (2 sqrt(omega^2 - gamma^2))`,
    /// `D_px = gamma^2 / sqrt(omega^2 - gamma^2)`; temperature-free
    /// phase-space quantization, requires `omega > gamma`.
    IV,
    /// Coefficients supplied directly by the caller.
    Custom,
}

impl DiffusionCase {
    /// Whether the prescription uses the bath temperature.
    pub fn uses_temperature(self) -> bool {
        matches!(self, DiffusionCase::I | DiffusionCase::II | DiffusionCase::III)
    }

    /// Whether the prescription uses the bath cutoff frequency.
    pub fn uses_cutoff(self) -> bool {
        matches!(self, DiffusionCase::II | DiffusionCase::III)
    }
}

impl std::fmt::Display for DiffusionCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DiffusionCase::I => "I",
            DiffusionCase::II => "II",
            DiffusionCase::III => "III",
            DiffusionCase::IV => "IV",
            DiffusionCase::Custom => "custom",
        };
        f.write_str(s)
    }
}

/// Evaluate the tabulated diffusion coefficients for `case` in dimensionless
/// units (`hbar = m = k_B = 1`).
///
/// `temperature` is required for cases I-III, `cutoff` for cases II-III;
/// case IV additionally requires `omega > gamma`.
pub fn diffusion_coefficients<T: Real>(
    case: DiffusionCase,
    gamma: T,
    temperature: Option<T>,
    cutoff: Option<T>,
    omega: T,
) -> Result<(T, T)> {
    check_positive("gamma", gamma)?;
    check_positive("omega", omega)?;
    let temp = || -> Result<T> {
        let t = temperature.ok_or(Error::InvalidParameter {
            name: "temperature",
            value: f64::NAN,
            reason: "required for this diffusion case",
        })?;
        check_positive("temperature", t)?;
        Ok(t)
    };
    let cut = || -> Result<T> {
        let c = cutoff.ok_or(Error::InvalidParameter {
            name: "cutoff",
            value: f64::NAN,
            reason: "required for this diffusion case",
        })?;
        check_positive("cutoff", c)?;
        Ok(c)
    };
    let two = T::lit(2.0);
    match case {
        DiffusionCase::I => Ok((two * gamma * temp()?, T::zero())),
        DiffusionCase::II => {
            let t = temp()?;
            Ok((two * gamma * t, -gamma * t / cut()?))
        }
        DiffusionCase::III => {
            let t = temp()?;
            Ok((two * gamma * t, cut()? * gamma / (T::lit(6.0) * T::PI() * t)))
        }
        DiffusionCase::IV => {
            if gamma >= omega {
                return Err(Error::OverdampedCaseIv {
                    gamma: to_f64(gamma),
                    omega: to_f64(omega),
                });
            }
            let root = (omega * omega - gamma * gamma).sqrt();
            Ok((
                gamma * omega * omega / (two * root),
                gamma * gamma / root,
            ))
        }
        DiffusionCase::Custom => Err(Error::UnsupportedCase {
            case,
            reason: "custom coefficients are supplied at construction, not tabulated",
        }),
    }
}

/// Oscillator and bath parameters in dimensionless units
/// (`hbar = m = k_B = 1`; `omega` defaults to 1 so times are `tau = omega t`).
///
/// For tabulated cases the diffusion coefficients are recomputed from
/// `(gamma, temperature, cutoff, omega)` on every access, so they can never
/// drift out of sync with the primitive parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams<T> {
    case: DiffusionCase,
    gamma: T,
    omega: T,
    temperature: Option<T>,
    cutoff: Option<T>,
    custom: Option<(T, T)>,
}

impl<T: Real> ModelParams<T> {
    /// Parameters for one of the tabulated diffusion prescriptions.
    pub fn new(
        case: DiffusionCase,
        gamma: T,
        omega: T,
        temperature: Option<T>,
        cutoff: Option<T>,
    ) -> Result<Self> {
        // Validates presence and positivity per case.
        diffusion_coefficients(case, gamma, temperature, cutoff, omega)?;
        check_not_critical(gamma, omega)?;
        Ok(Self {
            case,
            gamma,
            omega,
            temperature: if case.uses_temperature() { temperature } else { None },
            cutoff: if case.uses_cutoff() { cutoff } else { None },
            custom: None,
        })
    }

    /// Case-I parameters at unit oscillator frequency.
    pub fn case_i(gamma: T, temperature: T) -> Result<Self> {
        Self::new(DiffusionCase::I, gamma, T::one(), Some(temperature), None)
    }

    /// Case-II parameters at unit oscillator frequency.
    pub fn case_ii(gamma: T, temperature: T, cutoff: T) -> Result<Self> {
        Self::new(DiffusionCase::II, gamma, T::one(), Some(temperature), Some(cutoff))
    }

    /// Case-III parameters at unit oscillator frequency.
    pub fn case_iii(gamma: T, temperature: T, cutoff: T) -> Result<Self> {
        Self::new(DiffusionCase::III, gamma, T::one(), Some(temperature), Some(cutoff))
    }

    /// Case-IV parameters at unit oscillator frequency.
    pub fn case_iv(gamma: T) -> Result<Self> {
        Self::new(DiffusionCase::IV, gamma, T::one(), None, None)
    }

    /// Parameters with caller-supplied diffusion coefficients.
    pub fn custom(gamma: T, omega: T, d_pp: T, d_px: T) -> Result<Self> {
        check_positive("gamma", gamma)?;
        check_positive("omega", omega)?;
        check_not_critical(gamma, omega)?;
        Ok(Self {
            case: DiffusionCase::Custom,
            gamma,
            omega,
            temperature: None,
            cutoff: None,
            custom: Some((d_pp, d_px)),
        })
    }

    /// Same prescription at a different bath temperature.
    pub fn with_temperature(&self, temperature: T) -> Result<Self> {
        Self::new(self.case, self.gamma, self.omega, Some(temperature), self.cutoff)
    }

    pub fn case(&self) -> DiffusionCase {
        self.case
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    pub fn omega(&self) -> T {
        self.omega
    }

    pub fn temperature(&self) -> Option<T> {
        self.temperature
    }

    pub fn cutoff(&self) -> Option<T> {
        self.cutoff
    }

    /// Momentum diffusion coefficient `D_pp`.
    pub fn d_pp(&self) -> T {
        self.diffusion().0
    }

    /// Cross diffusion coefficient `D_px`.
    pub fn d_px(&self) -> T {
        self.diffusion().1
    }

    /// Both diffusion coefficients.
    pub fn diffusion(&self) -> (T, T) {
        match self.custom {
            Some(pair) => pair,
            None => diffusion_coefficients(
                self.case,
                self.gamma,
                self.temperature,
                self.cutoff,
                self.omega,
            )
            .expect("validated at construction"),
        }
    }

    /// Characteristic roots for these parameters.
    pub fn char_roots(&self) -> CharRoots<T> {
        char_roots(self.gamma, self.omega).expect("validated at construction")
    }
}

/// Discriminant and roots of the characteristic system.
///
/// `X = gamma^2 - omega^2`, `sqrt_x` its principal square root, and
/// `lambda1,2 = gamma +/- sqrt(X)`. Over-damped parameters give three real
/// values; under-damped ones give `sqrt_x` on the positive imaginary axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharRoots<T> {
    pub x_disc: C<T>,
    pub sqrt_x: C<T>,
    pub lambda1: C<T>,
    pub lambda2: C<T>,
}

impl<T: Real> CharRoots<T> {
    /// Roots with the opposite square-root branch (swaps `lambda1 <-> lambda2`).
    ///
    /// The back map and the propagator exponent are invariant under this
    /// swap; the branch symmetry is asserted by tests.
    pub fn other_branch(&self) -> Self {
        Self {
            x_disc: self.x_disc,
            sqrt_x: -self.sqrt_x,
            lambda1: self.lambda2,
            lambda2: self.lambda1,
        }
    }
}

/// Compute [`CharRoots`] from the relaxation constant and frequency.
///
/// Fails with [`Error::CriticalDamping`] when `|gamma^2 - omega^2|` is below
/// [`EPS_CRIT`].
pub fn char_roots<T: Real>(gamma: T, omega: T) -> Result<CharRoots<T>> {
    check_positive("gamma", gamma)?;
    check_positive("omega", omega)?;
    check_not_critical(gamma, omega)?;
    let x = gamma * gamma - omega * omega;
    let x_disc = Complex::new(x, T::zero());
    let sqrt_x = x_disc.sqrt();
    let g = Complex::new(gamma, T::zero());
    Ok(CharRoots {
        x_disc,
        sqrt_x,
        lambda1: g + sqrt_x,
        lambda2: g - sqrt_x,
    })
}

/// Complex linear map `(K, r) -> (kk*K + kr*r, rk*K + rr*r)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearMap<T> {
    pub kk: C<T>,
    pub kr: C<T>,
    pub rk: C<T>,
    pub rr: C<T>,
}

impl<T: Real> LinearMap<T> {
    pub fn identity() -> Self {
        Self {
            kk: Complex::new(T::one(), T::zero()),
            kr: Complex::zero(),
            rk: Complex::zero(),
            rr: Complex::new(T::one(), T::zero()),
        }
    }

    pub fn apply(&self, k: C<T>, r: C<T>) -> (C<T>, C<T>) {
        (self.kk * k + self.kr * r, self.rk * k + self.rr * r)
    }

    pub fn apply_real(&self, k: T, r: T) -> (C<T>, C<T>) {
        let kc = Complex::new(k, T::zero());
        let rc = Complex::new(r, T::zero());
        self.apply(kc, rc)
    }
}

/// Coefficients of the linear back-substitution `(K, r) -> (K_0, r_0)` that
/// carries a Fourier point at time `t` to its characteristic origin.
///
/// Written with decaying exponentials only, so it stays finite for arbitrary
/// `t >= 0` in both damping regimes.
pub fn backmap_coeffs<T: Real>(t: T, roots: &CharRoots<T>, omega: T) -> LinearMap<T> {
    if t.is_zero() {
        return LinearMap::identity();
    }
    let s = roots.sqrt_x;
    let g = Complex::new(roots.lambda1.re + roots.lambda2.re, T::zero()) * T::lit(0.5);
    let w2 = Complex::new(omega * omega, T::zero());
    let two_t = Complex::new(t + t, T::zero());
    // z = exp(-2 sqrt(X) t), u = exp(-lambda2 t) / (2 sqrt(X))
    let z = (-s * two_t).exp();
    let u = (-roots.lambda2 * cx(t)).exp() / (s * cx(T::lit(2.0)));
    let one = Complex::new(T::one(), T::zero());
    LinearMap {
        kk: ((s + g) + (s - g) * z) * u,
        kr: w2 * (z - one) * u,
        rk: (one - z) * u,
        rr: ((s - g) + (s + g) * z) * u,
    }
}

/// Back-substitute a Fourier point: returns `(K_0, r_0)` such that the
/// characteristic through `(K_0, r_0)` at time 0 passes through `(K, r)` at
/// time `t`. Exact identity at `t = 0`.
pub fn backmap<T: Real>(k: T, r: T, t: T, roots: &CharRoots<T>, omega: T) -> (C<T>, C<T>) {
    backmap_coeffs(t, roots, omega).apply_real(k, r)
}

/// The two Appendix-style exponent building blocks `(A, B)`, transcribed
/// verbatim with growing exponentials.
///
/// Only usable while `exp(2t(2 sqrt(X) + gamma))` stays within range; the
/// propagator itself uses [`exponent_quadratic`], which distributes the
/// decaying prefactor analytically and is safe for all `t >= 0`.
pub fn exponent_ab<T: Real>(
    k: T,
    r: T,
    t: T,
    roots: &CharRoots<T>,
    omega: T,
    gamma: T,
) -> (C<T>, C<T>) {
    let s = roots.sqrt_x;
    let x = roots.x_disc;
    let g: C<T> = Complex::new(gamma, T::zero());
    let w2: C<T> = Complex::new(omega * omega, T::zero());
    let kc: C<T> = Complex::new(k, T::zero());
    let rc: C<T> = Complex::new(r, T::zero());
    let tc: C<T> = Complex::new(t, T::zero());
    let lit = |v: f64| Complex::new(T::lit(v), T::zero());

    let k2 = kc * kc;
    let r2 = rc * rc;
    let e_big = (tc * lit(2.0) * (s * lit(2.0) + g)).exp();
    let e2 = (tc * s * lit(2.0)).exp();
    let e4 = (tc * s * lit(4.0)).exp();
    let e6 = (tc * s * lit(6.0)).exp();
    let x32 = x * s;

    let a = x32 * lit(2.0) * (w2 * r2 + k2) * e_big
        + ((-g * w2 * r2 + kc * w2 * rc * lit(2.0) - k2 * g) * s + x * (-(w2 * r2) + k2)) * g * e2
        + e4 * w2 * s * lit(2.0) * (w2 * r2 - kc * g * rc * lit(2.0) + k2)
        - e6 * ((g * w2 * r2 - kc * w2 * rc * lit(2.0) + k2 * g) * s + x * (-(w2 * r2) + k2)) * g;

    let b = -x32 * lit(8.0) * g * k2 * e_big
        + (((g * g * lit(4.0) - w2 * lit(2.0)) * k2 - w2 * rc * g * kc * lit(4.0)
            + w2 * w2 * r2 * lit(2.0))
            * s
            + x * (kc * w2 * rc * lit(4.0) - k2 * g * lit(4.0)))
            * g
            * e2
        - e4 * w2 * s * lit(4.0) * (w2 * r2 - kc * g * rc * lit(2.0) + k2) * g
        - e6
            * (((-(g * g) * lit(4.0) + w2 * lit(2.0)) * k2 + w2 * rc * g * kc * lit(4.0)
                - w2 * w2 * r2 * lit(2.0))
                * s
                + x * (kc * w2 * rc * lit(4.0) - k2 * g * lit(4.0)))
            * g;

    (a, b)
}

/// Quadratic form `E(K, r) = kk*K^2 + kr*K*r + rr*r^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadratic<T> {
    pub kk: C<T>,
    pub kr: C<T>,
    pub rr: C<T>,
}

impl<T: Real> Quadratic<T> {
    pub fn zero() -> Self {
        Self {
            kk: Complex::zero(),
            kr: Complex::zero(),
            rr: Complex::zero(),
        }
    }

    pub fn eval(&self, k: C<T>, r: C<T>) -> C<T> {
        self.kk * k * k + self.kr * k * r + self.rr * r * r
    }

    pub fn eval_real(&self, k: T, r: T) -> C<T> {
        self.kk * cx(k * k) + self.kr * cx(k * r) + self.rr * cx(r * r)
    }

    /// Pull the form back through a linear map: `Q'(v) = Q(M v)`.
    pub fn compose(&self, m: &LinearMap<T>) -> Self {
        let two = C::<T>::new(T::lit(2.0), T::zero());
        Self {
            kk: self.kk * m.kk * m.kk + self.kr * m.kk * m.rk + self.rr * m.rk * m.rk,
            kr: two * self.kk * m.kk * m.kr
                + self.kr * (m.kk * m.rr + m.kr * m.rk)
                + two * self.rr * m.rk * m.rr,
            rr: self.kk * m.kr * m.kr + self.kr * m.kr * m.rr + self.rr * m.rr * m.rr,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            kk: self.kk + other.kk,
            kr: self.kr + other.kr,
            rr: self.rr + other.rr,
        }
    }
}

/// Coefficients of `A e^{-2t(2 sqrt(X) + gamma)}` and
/// `B e^{-2t(2 sqrt(X) + gamma)}` as quadratic forms in `(K, r)`, with the
/// prefactor distributed into each exponential term so that only decaying
/// exponentials `exp(-2t lambda_1)`, `exp(-2t gamma)`, `exp(-2t lambda_2)`
/// appear.
fn ab_quadratics<T: Real>(
    t: T,
    roots: &CharRoots<T>,
    omega: T,
    gamma: T,
) -> (Quadratic<T>, Quadratic<T>) {
    let s = roots.sqrt_x;
    let x = roots.x_disc;
    let g: C<T> = Complex::new(gamma, T::zero());
    let w2: C<T> = Complex::new(omega * omega, T::zero());
    let lit = |v: f64| C::<T>::new(T::lit(v), T::zero());
    let two_t = t + t;

    let e1 = (-roots.lambda1 * cx(two_t)).exp();
    let e2 = C::<T>::new((-two_t * gamma).exp(), T::zero());
    let e3 = (-roots.lambda2 * cx(two_t)).exp();
    let x32 = x * s;

    let a = Quadratic {
        kk: x32 * lit(2.0) + g * e1 * (x - g * s) + w2 * s * lit(2.0) * e2 - g * e3 * (x + g * s),
        kr: g * w2 * s * lit(2.0) * (e1 - e2 * lit(2.0) + e3),
        rr: w2
            * (x32 * lit(2.0) - g * e1 * (g * s + x) + w2 * s * lit(2.0) * e2
                + g * e3 * (x - g * s)),
    };
    let b = Quadratic {
        kk: -x32 * lit(8.0) * g
            + g * e1 * ((g * g * lit(4.0) - w2 * lit(2.0)) * s - g * x * lit(4.0))
            - g * w2 * s * lit(4.0) * e2
            + g * e3 * ((g * g * lit(4.0) - w2 * lit(2.0)) * s + g * x * lit(4.0)),
        kr: g * w2
            * lit(4.0)
            * (e1 * (x - g * s) + g * s * lit(2.0) * e2 - e3 * (x + g * s)),
        rr: g * w2 * w2 * s * lit(2.0) * (e1 - e2 * lit(2.0) + e3),
    };
    (a, b)
}

/// Quadratic form of the propagator exponent at time `t`:
/// `E(K, r, t) = -(A_t D_pp + B_t D_px) / (8 X^{3/2} gamma omega^2)`
/// with the shared prefactor folded in analytically.
pub fn exponent_quadratic<T: Real>(t: T, params: &ModelParams<T>) -> Quadratic<T> {
    let roots = params.char_roots();
    let (d_pp, d_px) = params.diffusion();
    let (a, b) = ab_quadratics(t, &roots, params.omega(), params.gamma());
    scaled_exponent(&roots, params.omega(), params.gamma(), &a, &b, d_pp, d_px)
}

fn scaled_exponent<T: Real>(
    roots: &CharRoots<T>,
    omega: T,
    gamma: T,
    a: &Quadratic<T>,
    b: &Quadratic<T>,
    ca: T,
    cb: T,
) -> Quadratic<T> {
    let den = roots.x_disc * roots.sqrt_x
        * C::<T>::new(T::lit(8.0) * gamma * omega * omega, T::zero());
    let ca: C<T> = Complex::new(ca, T::zero());
    let cb: C<T> = Complex::new(cb, T::zero());
    Quadratic {
        kk: -(a.kk * ca + b.kk * cb) / den,
        kr: -(a.kr * ca + b.kr * cb) / den,
        rr: -(a.rr * ca + b.rr * cb) / den,
    }
}

/// Propagator exponent `E(K, r, t)` of the exact solution
/// `rho(K, r, t) = rho_0(K_0, r_0) exp(E)`.
///
/// Exactly zero at `(K, r) = (0, 0)` (trace preservation) and zero at `t = 0`
/// up to cancellation of the four constituent terms.
pub fn propagator_exponent<T: Real>(k: T, r: T, t: T, params: &ModelParams<T>) -> C<T> {
    exponent_quadratic(t, params).eval_real(k, r)
}

/// Guarded exponent evaluation: errors when `Re(E)` exceeds `bound`, so that
/// callers truncate their quadrature domain instead of overflowing `exp`.
pub fn propagator_exponent_guarded<T: Real>(
    k: T,
    r: T,
    t: T,
    params: &ModelParams<T>,
    bound: T,
) -> Result<C<T>> {
    let e = propagator_exponent(k, r, t, params);
    if e.re > bound {
        return Err(Error::ExponentOverflow {
            re: to_f64(e.re),
            bound: to_f64(bound),
            k: to_f64(k),
            r: to_f64(r),
            t: to_f64(t),
        });
    }
    Ok(e)
}

/// Integrand of the temperature derivative of the purity,
/// `H(K, r, t) = 2 Re d/dT E(K, r, t)`, for the temperature-dependent
/// prescriptions (cases II and III).
///
/// `H(K, r, 0) = 0` identically and `H <= 0` for `t > 0`, which is what makes
/// the purity monotonically non-increasing in the bath temperature.
pub fn temperature_derivative_integrand<T: Real>(
    k: T,
    r: T,
    t: T,
    params: &ModelParams<T>,
) -> Result<T> {
    let (d_dpp, d_dpx) = match params.case() {
        DiffusionCase::II => {
            let cutoff = params.cutoff().expect("case II has a cutoff");
            (T::lit(2.0) * params.gamma(), -params.gamma() / cutoff)
        }
        DiffusionCase::III => {
            let cutoff = params.cutoff().expect("case III has a cutoff");
            let temp = params.temperature().expect("case III has a temperature");
            (
                T::lit(2.0) * params.gamma(),
                -cutoff * params.gamma() / (T::lit(6.0) * T::PI() * temp * temp),
            )
        }
        case => {
            return Err(Error::UnsupportedCase {
                case,
                reason: "temperature derivative defined for cases II and III only",
            })
        }
    };
    let roots = params.char_roots();
    let (a, b) = ab_quadratics(t, &roots, params.omega(), params.gamma());
    let form = scaled_exponent(&roots, params.omega(), params.gamma(), &a, &b, d_dpp, d_dpx);
    Ok(T::lit(2.0) * form.eval_real(k, r).re)
}

fn check_positive<T: Real>(name: &'static str, value: T) -> Result<()> {
    if !(value > T::zero()) || !value.is_finite() {
        return Err(Error::InvalidParameter {
            name,
            value: to_f64(value),
            reason: "must be positive and finite",
        });
    }
    Ok(())
}

fn check_not_critical<T: Real>(gamma: T, omega: T) -> Result<()> {
    let x = gamma * gamma - omega * omega;
    if x.abs() < T::lit(EPS_CRIT) {
        return Err(Error::CriticalDamping {
            x_abs: to_f64(x.abs()),
            eps_crit: EPS_CRIT,
        });
    }
    Ok(())
}

pub(crate) fn to_f64<T: Real>(value: T) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}
