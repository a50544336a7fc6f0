//! Exact time evolution of the Fourier density and reconstruction of
//! position-space kernels.
//!
//! The solution is `rho(K, r, t) = rho_0(K_0, r_0) exp(E(K, r, t))` with the
//! back map and exponent from [`crate::model`]. Both are linear/quadratic in
//! `(K, r)`, so the evolved density stays a polynomial times a complex
//! Gaussian and evaluation is pointwise and lazy; grids are built by callers.

use num_complex::Complex;
use rayon::prelude::*;

use crate::closed_form::ClosedFormDensity;
use crate::error::{Error, Result};
use crate::float::{sqrt_two_pi, Real, C};
use crate::model::{backmap_coeffs, exponent_quadratic, to_f64, CharRoots, ModelParams, EXPONENT_REAL_BOUND};
use crate::quadrature::gauss_legendre;
use crate::states::HermiteGaussState;

/// Exact evolved density for one initial state and one parameter set.
#[derive(Debug, Clone)]
pub struct EvolvedDensity<T> {
    state: HermiteGaussState<T>,
    params: ModelParams<T>,
    roots: CharRoots<T>,
    initial: ClosedFormDensity<T>,
    exp_bound: T,
}

impl<T: Real> EvolvedDensity<T> {
    pub fn new(state: HermiteGaussState<T>, params: ModelParams<T>) -> Result<Self> {
        let roots = crate::model::char_roots(params.gamma(), params.omega())?;
        let initial = state.fourier_closed_form();
        Ok(Self {
            state,
            params,
            roots,
            initial,
            exp_bound: T::lit(EXPONENT_REAL_BOUND),
        })
    }

    pub fn state(&self) -> &HermiteGaussState<T> {
        &self.state
    }

    pub fn params(&self) -> &ModelParams<T> {
        &self.params
    }

    pub fn roots(&self) -> &CharRoots<T> {
        &self.roots
    }

    /// Initial Fourier image as a closed form.
    pub fn initial_form(&self) -> &ClosedFormDensity<T> {
        &self.initial
    }

    /// Closed form of `rho(., ., t)`: initial form pulled back through the
    /// back map, times the propagator exponent.
    pub fn closed_form_at(&self, t: T) -> ClosedFormDensity<T> {
        let map = backmap_coeffs(t, &self.roots, self.params.omega());
        let extra = exponent_quadratic(t, &self.params);
        self.initial.compose(&map).mul_exp(&extra)
    }

    /// Fourier-representation value `rho(K, r, t)`.
    ///
    /// Errors if the exponent exceeds the overflow bound.
    pub fn rho_fourier(&self, k: T, r: T, t: T) -> Result<C<T>> {
        let map = backmap_coeffs(t, &self.roots, self.params.omega());
        let (k0, r0) = map.apply_real(k, r);
        let e = crate::model::propagator_exponent(k, r, t, &self.params);
        let total = self.initial.quad.eval(k0, r0) + e;
        if total.re > self.exp_bound {
            return Err(Error::ExponentOverflow {
                re: to_f64(total.re),
                bound: to_f64(self.exp_bound),
                k: to_f64(k),
                r: to_f64(r),
                t: to_f64(t),
            });
        }
        Ok(self.initial.poly.eval(k0, r0) * total.exp())
    }

    /// Reconstruct the position-space kernel `M[i][j] ~ rho(x_i, x_j, t)` on
    /// a symmetric uniform grid by numerical inverse Fourier transform over
    /// `K` (synthesis kernel `exp(-iKR)`, matching the characteristic
    /// system's convention), with the truncation interval sized from the
    /// evolved Gaussian width (6-sigma rule plus oscillation margin).
    pub fn rho_position_grid(&self, t: T, grid: &KernelGridSpec<T>) -> Result<KernelGrid<T>> {
        grid.validate()?;
        let cf = self.closed_form_at(t);
        let (qkk, qkr, _) = cf.real_quad();
        if !(qkk < T::zero()) {
            return Err(Error::InvalidParameter {
                name: "t",
                value: to_f64(t),
                reason: "evolved density is not Gaussian-decaying in K",
            });
        }
        let n = grid.nodes;
        let half = grid.half_width;
        let dx = T::lit(2.0) * half / T::of_usize(n - 1);

        // |rho(K, r)| ~ exp(qkk (K - Kc(r))^2), Kc(r) = -qkr r / (2 qkk)
        let sigma_k = (-T::lit(0.5) / qkk).sqrt();
        let k_half = T::lit(6.5) * sigma_k;
        // enough nodes for exp(iKR) with |R| <= half across the interval
        let osc = to_f64(T::lit(2.0) * k_half * half) / std::f64::consts::PI;
        let nk = ((osc.ceil() as usize) + 48).clamp(48, 8192);
        let (base_nodes, base_wts) = gauss_legendre::<T>(nk);

        // R values live on the half-step grid R_m = -half + m dx / 2
        let m_count = 2 * n - 1;
        let rs: Vec<T> = (0..m_count)
            .map(|m| -half + dx * T::lit(0.5) * T::of_usize(m))
            .collect();
        // phase table exp(i u_q R_m) for the centered nodes u_q = k_half * x_q
        let phase: Vec<Vec<C<T>>> = base_nodes
            .iter()
            .map(|u| {
                let uq = *u * k_half;
                rs.iter()
                    .map(|rm| Complex::new(T::zero(), -(uq * *rm)).exp())
                    .collect()
            })
            .collect();

        let norm = k_half / sqrt_two_pi::<T>();
        // per signed diagonal d = i - j: r = d dx, K interval centered at Kc(r)
        let diags: Vec<Vec<C<T>>> = (0..m_count)
            .into_par_iter()
            .map(|di| {
                let d = di as isize - (n as isize - 1);
                let r = dx * T::lit(d as f64);
                let kc = -qkr * r / (T::lit(2.0) * qkk);
                // f_d(m) = norm * e^{i kc R_m} * sum_q w_q rho(kc + u_q, r) e^{i u_q R_m}
                let vals: Vec<C<T>> = base_nodes
                    .iter()
                    .zip(&base_wts)
                    .map(|(u, w)| {
                        let k = kc + *u * k_half;
                        cf.eval(k, r) * Complex::new(*w, T::zero())
                    })
                    .collect();
                (0..m_count)
                    .map(|m| {
                        let mut acc = C::<T>::new(T::zero(), T::zero());
                        for (q, v) in vals.iter().enumerate() {
                            acc += *v * phase[q][m];
                        }
                        let center_phase = Complex::new(T::zero(), -(kc * rs[m])).exp();
                        acc * center_phase * Complex::new(norm, T::zero())
                    })
                    .collect()
            })
            .collect();

        let mut values = vec![C::<T>::new(T::zero(), T::zero()); n * n];
        for i in 0..n {
            for j in 0..n {
                let di = (i as isize - j as isize) + (n as isize - 1);
                let m = i + j;
                values[i * n + j] = diags[di as usize][m];
            }
        }

        // hermiticity residue of the raw reconstruction
        let mut herm = T::zero();
        for i in 0..n {
            for j in 0..=i {
                let d = (values[i * n + j] - values[j * n + i].conj()).norm();
                if d > herm {
                    herm = d;
                }
            }
        }

        // coverage check: the diagonal density should be negligible at the
        // grid edge relative to its peak
        let mut peak = T::zero();
        for i in 0..n {
            let v = values[i * n + i].norm();
            if v > peak {
                peak = v;
            }
        }
        let edge = values[0].norm().max(values[n * n - 1].norm());
        let truncation_warning = edge > T::lit(1e-7) * peak;

        Ok(KernelGrid {
            nodes: n,
            dx,
            half_width: half,
            values,
            hermiticity_residue: herm,
            truncation_warning,
        })
    }
}

/// Symmetric uniform position grid for kernel reconstruction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelGridSpec<T> {
    pub half_width: T,
    pub nodes: usize,
}

impl<T: Real> KernelGridSpec<T> {
    pub fn new(half_width: T, nodes: usize) -> Self {
        Self { half_width, nodes }
    }

    fn validate(&self) -> Result<()> {
        if !(self.half_width > T::zero()) || !self.half_width.is_finite() {
            return Err(Error::InvalidParameter {
                name: "half_width",
                value: to_f64(self.half_width),
                reason: "grid half-width must be positive and finite",
            });
        }
        if self.nodes < 8 {
            return Err(Error::InvalidParameter {
                name: "nodes",
                value: self.nodes as f64,
                reason: "kernel grid needs at least 8 nodes",
            });
        }
        Ok(())
    }
}

/// Discretized position-space kernel `values[i * nodes + j] = rho(x_i, x_j)`.
#[derive(Debug, Clone)]
pub struct KernelGrid<T> {
    pub nodes: usize,
    pub dx: T,
    pub half_width: T,
    pub values: Vec<C<T>>,
    pub hermiticity_residue: T,
    pub truncation_warning: bool,
}

impl<T: Real> KernelGrid<T> {
    pub fn value(&self, i: usize, j: usize) -> C<T> {
        self.values[i * self.nodes + j]
    }

    /// Trace of the discretized kernel, `sum_i rho(x_i, x_i) dx`.
    pub fn trace(&self) -> T {
        let mut acc = C::<T>::new(T::zero(), T::zero());
        for i in 0..self.nodes {
            acc += self.value(i, i);
        }
        (acc * Complex::new(self.dx, T::zero())).re
    }
}
