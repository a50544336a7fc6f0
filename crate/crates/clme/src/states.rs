//! Hermite-Gaussian initial states and their closed-form Fourier images.
//!
//! The supported initial states are the pure states
//! `rho(R, r, 0) = H_n(bR + br/2) H_n(bR - br/2) / (2^n n!)
//!  * exp(-b^2 (2R^2 + r^2/2) / 2) * sqrt(b^2 / pi)`
//! in center-of-mass/relative coordinates `R = (x+y)/2`, `r = x - y`, with
//! inverse-width parameter `b = beta`. At `beta = 1` they are the harmonic
//! oscillator eigenstates.

use num_complex::Complex;

use crate::closed_form::{ClosedFormDensity, PolyKR};
use crate::error::{Error, Result};
use crate::float::{sqrt_two_pi, Real, C};
use crate::model::{to_f64, Quadratic};

/// Physicists' Hermite polynomial `H_n(x)` by the three-term recurrence.
pub fn hermite<T: Real>(n: u32, x: T) -> T {
    match n {
        0 => T::one(),
        1 => T::lit(2.0) * x,
        _ => {
            let mut hm1 = T::one();
            let mut h = T::lit(2.0) * x;
            for k in 1..n {
                let next = T::lit(2.0) * x * h - T::lit(2.0) * T::of_usize(k as usize) * hm1;
                hm1 = h;
                h = next;
            }
            h
        }
    }
}

/// Coefficients of `H_n` in the monomial basis (index = power of x).
pub fn hermite_coeffs<T: Real>(n: u32) -> Vec<T> {
    let n = n as usize;
    if n == 0 {
        return vec![T::one()];
    }
    let mut hm1 = vec![T::one()];
    let mut h = vec![T::zero(), T::lit(2.0)];
    for k in 1..n {
        let mut next = vec![T::zero(); h.len() + 1];
        for (i, c) in h.iter().enumerate() {
            next[i + 1] += T::lit(2.0) * *c;
        }
        for (i, c) in hm1.iter().enumerate() {
            next[i] -= T::lit(2.0) * T::of_usize(k) * *c;
        }
        hm1 = h;
        h = next;
    }
    h
}

/// Pure Hermite-Gaussian initial state: excitation index `n` and
/// inverse-width parameter `beta > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteGaussState<T> {
    n: u32,
    beta: T,
}

impl<T: Real> HermiteGaussState<T> {
    pub fn new(n: u32, beta: T) -> Result<Self> {
        if !(beta > T::zero()) || !beta.is_finite() {
            return Err(Error::InvalidParameter {
                name: "beta",
                value: to_f64(beta),
                reason: "inverse width must be positive and finite",
            });
        }
        Ok(Self { n, beta })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    /// Position-representation kernel `rho(R, r, 0)`.
    pub fn rho_position(&self, big_r: T, r: T) -> T {
        let b = self.beta;
        let half = T::lit(0.5);
        let u = b * big_r + b * r * half;
        let v = b * big_r - b * r * half;
        let norm = (b * b / T::PI()).sqrt() / (T::lit(2.0).powi(self.n as i32) * factorial::<T>(self.n));
        let gauss = (-half * b * b * (T::lit(2.0) * big_r * big_r + half * r * r)).exp();
        hermite(self.n, u) * hermite(self.n, v) * norm * gauss
    }

    /// Closed-form Fourier image `rho(K, r, 0)` as polynomial x Gaussian,
    /// with the analysis convention
    /// `rho(K, r) = (1/sqrt(2 pi)) int exp(+iKR) rho(R, r) dR` under which
    /// the characteristic system of the master equation holds.
    ///
    /// Built once per state: the product of the two Hermite factors is
    /// expanded in `(R, r)`, and each power of `R` maps through the analytic
    /// Fourier transform of `R^k exp(-b^2 R^2)` onto a Hermite polynomial in
    /// `K`. The trace identity `rho(0, 0, 0) = 1/sqrt(2 pi)` pins the overall
    /// normalization.
    pub fn fourier_closed_form(&self) -> ClosedFormDensity<T> {
        let n = self.n as usize;
        let b = self.beta;
        let hc = hermite_coeffs::<T>(self.n);

        // H_n(bR + s*br/2) as coeffs[a][c] R^a r^c
        let expand = |sign: T| -> Vec<Vec<T>> {
            let mut out = vec![vec![T::zero(); n + 1]; n + 1];
            for (k, ck) in hc.iter().enumerate() {
                if ck.is_zero() {
                    continue;
                }
                for a in 0..=k {
                    let binom = binomial::<T>(k, a);
                    out[a][k - a] +=
                        *ck * binom * b.powi(a as i32) * (sign * b * T::lit(0.5)).powi((k - a) as i32);
                }
            }
            out
        };
        let plus = expand(T::one());
        let minus = expand(-T::one());

        // product polynomial in (R, r)
        let deg = 2 * n;
        let mut prod = vec![vec![T::zero(); deg + 1]; deg + 1];
        for a1 in 0..=n {
            for c1 in 0..=n {
                let p = plus[a1][c1];
                if p.is_zero() {
                    continue;
                }
                for a2 in 0..=n {
                    for c2 in 0..=n {
                        let q = minus[a2][c2];
                        if !q.is_zero() {
                            prod[a1 + a2][c1 + c2] += p * q;
                        }
                    }
                }
            }
        }

        // R^a -> (-i/(2b))^a H_a(K/(2b)); overall prefactor 1/(2^n n! sqrt(2 pi))
        let norm = T::one()
            / (T::lit(2.0).powi(self.n as i32) * factorial::<T>(self.n) * sqrt_two_pi::<T>());
        let inv2b = T::one() / (T::lit(2.0) * b);
        let plus_i = Complex::new(T::zero(), T::one());
        let mut poly = PolyKR::<T>::zero(deg, deg);
        for a in 0..=deg {
            let ha = hermite_coeffs::<T>(a as u32);
            let pref = plus_i.powu(a as u32) * Complex::new(inv2b.powi(a as i32) * norm, T::zero());
            for c in 0..=deg {
                let coeff = prod[a][c];
                if coeff.is_zero() {
                    continue;
                }
                for (m, hm) in ha.iter().enumerate() {
                    if hm.is_zero() {
                        continue;
                    }
                    *poly.coeff_mut(m, c) +=
                        pref * Complex::new(coeff * *hm * inv2b.powi(m as i32), T::zero());
                }
            }
        }

        let quad = Quadratic {
            kk: Complex::new(-T::one() / (T::lit(4.0) * b * b), T::zero()),
            kr: Complex::new(T::zero(), T::zero()),
            rr: Complex::new(-b * b * T::lit(0.25), T::zero()),
        };
        ClosedFormDensity::new(poly, quad)
    }

    /// Fourier-representation value `rho(K, r, 0)`.
    pub fn rho_fourier_initial(&self, k: T, r: T) -> C<T> {
        self.fourier_closed_form().eval(k, r)
    }
}

pub(crate) fn factorial<T: Real>(n: u32) -> T {
    let mut acc = T::one();
    for k in 2..=n {
        acc = acc * T::of_usize(k as usize);
    }
    acc
}

fn binomial<T: Real>(n: usize, k: usize) -> T {
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * T::of_usize(n - i) / T::of_usize(i + 1);
    }
    acc
}
