//! Gauss-Legendre quadrature on truncated 1D/2D domains with
//! doubling-based refinement.

use crate::error::{Error, Result};
use crate::float::Real;
use crate::model::to_f64;

/// Minimum node count accepted per axis.
pub const MIN_NODES: usize = 16;

/// Truncated two-dimensional integration domain
/// `[-half_width_k, half_width_k] x [-half_width_r, half_width_r]` with
/// per-axis node counts and a refinement tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec<T> {
    pub half_width_k: T,
    pub half_width_r: T,
    pub nodes_k: usize,
    pub nodes_r: usize,
    pub refine_tol: T,
}

impl<T: Real> QuadratureSpec<T> {
    pub fn new(
        half_width_k: T,
        half_width_r: T,
        nodes_k: usize,
        nodes_r: usize,
        refine_tol: T,
    ) -> Result<Self> {
        for (name, v) in [("half_width_k", half_width_k), ("half_width_r", half_width_r)] {
            if !(v > T::zero()) || !v.is_finite() {
                return Err(Error::InvalidParameter {
                    name,
                    value: to_f64(v),
                    reason: "truncation bound must be positive and finite",
                });
            }
        }
        for (name, n) in [("nodes_k", nodes_k), ("nodes_r", nodes_r)] {
            if n < MIN_NODES {
                return Err(Error::InvalidParameter {
                    name,
                    value: n as f64,
                    reason: "node count must be at least 16",
                });
            }
        }
        if !(refine_tol > T::zero()) {
            return Err(Error::InvalidParameter {
                name: "refine_tol",
                value: to_f64(refine_tol),
                reason: "refinement tolerance must be positive",
            });
        }
        Ok(Self {
            half_width_k,
            half_width_r,
            nodes_k,
            nodes_r,
            refine_tol,
        })
    }
}

/// Converged integral value with the refinement error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<T> {
    pub value: T,
    /// Difference between the last two doubling levels.
    pub error: T,
    /// Node count per axis at acceptance.
    pub nodes: usize,
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
///
/// Newton iteration on the Legendre recurrence; standard construction,
/// accurate to machine precision for the node counts used here.
pub fn gauss_legendre<T: Real>(n: usize) -> (Vec<T>, Vec<T>) {
    assert!(n >= 2);
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let half = (n + 1) / 2;
    let nf = T::of_usize(n);
    for i in 0..half {
        // Tricomi initial guess
        let theta = T::PI() * (T::of_usize(i) + T::lit(0.75)) / (nf + T::lit(0.5));
        let mut x = theta.cos();
        let mut dp = T::one();
        for _ in 0..100 {
            // Legendre P_n(x) and derivative via recurrence
            let mut p0 = T::one();
            let mut p1 = x;
            for k in 2..=n {
                let kf = T::of_usize(k);
                let p2 = ((T::lit(2.0) * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = nf * (x * p1 - p0) / (x * x - T::one());
            let dx = p1 / dp;
            x = x - dx;
            if dx.abs() < T::lit(1e-15) {
                break;
            }
        }
        let w = T::lit(2.0) / ((T::one() - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Integrate `f` over the spec's box at the spec's node counts (no
/// refinement).
pub fn integrate_2d_fixed<T: Real>(
    spec: &QuadratureSpec<T>,
    mut f: impl FnMut(T, T) -> T,
) -> T {
    let (xk, wk) = gauss_legendre::<T>(spec.nodes_k);
    let (xr, wr) = gauss_legendre::<T>(spec.nodes_r);
    let mut total = T::zero();
    for (ki, kw) in xk.iter().zip(&wk) {
        let k = *ki * spec.half_width_k;
        let mut inner = T::zero();
        for (ri, rw) in xr.iter().zip(&wr) {
            let r = *ri * spec.half_width_r;
            inner += *rw * f(k, r);
        }
        total += *kw * inner;
    }
    total * spec.half_width_k * spec.half_width_r
}

/// Integrate `f` over the spec's box, doubling both node counts until two
/// successive levels agree to `refine_tol` (relative).
pub fn integrate_2d<T: Real>(
    spec: &QuadratureSpec<T>,
    f: impl Fn(T, T) -> T + Sync,
) -> Result<QuadResult<T>> {
    const MAX_DOUBLINGS: usize = 7;
    let mut nodes_k = spec.nodes_k;
    let mut nodes_r = spec.nodes_r;
    let mut prev: Option<T> = None;
    for _ in 0..=MAX_DOUBLINGS {
        let level = QuadratureSpec {
            nodes_k,
            nodes_r,
            ..*spec
        };
        let value = integrate_2d_fixed(&level, &f);
        if let Some(p) = prev {
            let err = (value - p).abs();
            let scale = value.abs().max(T::lit(1e-300));
            if err <= spec.refine_tol * scale {
                return Ok(QuadResult {
                    value,
                    error: err,
                    nodes: nodes_k.max(nodes_r),
                });
            }
        }
        prev = Some(value);
        nodes_k *= 2;
        nodes_r *= 2;
    }
    let last = prev.unwrap();
    Err(Error::QuadratureNotConverged {
        last: to_f64(last),
        prev: f64::NAN,
        tol: to_f64(spec.refine_tol),
    })
}

/// 1D Gauss-Legendre integral of `f` over `[a, b]` at fixed node count.
pub fn integrate_1d<T: Real>(a: T, b: T, nodes: usize, mut f: impl FnMut(T) -> T) -> T {
    let (x, w) = gauss_legendre::<T>(nodes);
    let mid = (a + b) * T::lit(0.5);
    let half = (b - a) * T::lit(0.5);
    let mut total = T::zero();
    for (xi, wi) in x.iter().zip(&w) {
        total += *wi * f(mid + half * *xi);
    }
    total * half
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gauss_legendre_is_exact_for_polynomials() {
        // n nodes integrate polynomials up to degree 2n-1 exactly
        let (x, w) = gauss_legendre::<f64>(8);
        for deg in [0usize, 2, 6, 10, 14] {
            let num: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(deg as i32)).sum();
            let exact = 2.0 / (deg as f64 + 1.0);
            assert_relative_eq!(num, exact, max_relative = 1e-13);
        }
        // odd powers vanish by symmetry
        let odd: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(7)).sum();
        assert!(odd.abs() < 1e-15);
    }

    #[test]
    fn gaussian_integral_2d() {
        let spec = QuadratureSpec::new(8.0f64, 8.0, 32, 32, 1e-12).unwrap();
        let result = integrate_2d(&spec, |k, r| (-k * k - 2.0 * r * r).exp()).unwrap();
        let exact = std::f64::consts::PI / 2.0f64.sqrt();
        assert_relative_eq!(result.value, exact, max_relative = 1e-12);
        assert!(result.error < 1e-11);
    }

    #[test]
    fn refinement_reports_nonconvergence() {
        // |k| has a kink; demand an unreachable tolerance at capped levels
        let spec = QuadratureSpec::new(1.0f64, 1.0, 16, 16, 1e-15).unwrap();
        let res = integrate_2d(&spec, |k, r| k.abs() * r.abs());
        assert!(matches!(res, Err(Error::QuadratureNotConverged { .. })));
    }

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::new(0.0f64, 1.0, 32, 32, 1e-9).is_err());
        assert!(QuadratureSpec::new(1.0f64, 1.0, 8, 32, 1e-9).is_err());
        assert!(QuadratureSpec::new(1.0f64, 1.0, 32, 32, -1e-9).is_err());
        assert!(QuadratureSpec::new(1.0f64, 1.0, 16, 16, 1e-9).is_ok());
    }

    #[test]
    fn one_dimensional_rule() {
        let v = integrate_1d(0.0f64, std::f64::consts::PI, 48, |x| x.sin());
        assert_relative_eq!(v, 2.0, max_relative = 1e-13);
    }
}
