//! Closed-form densities: a complex bivariate polynomial in `(K, r)` attached
//! to a complex Gaussian quadratic form.
//!
//! The Fourier image of every supported initial state has this shape, and the
//! shape is closed under the exact evolution (a linear back map composed with
//! a quadratic exponent), so evaluation and differentiation never need
//! per-call quadrature.

use num_complex::Complex;
use num_traits::Zero;

use crate::float::{Real, C};
use crate::model::{LinearMap, Quadratic};

/// Dense complex polynomial in two variables: `coeffs[i][j] * K^i * r^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyKR<T> {
    coeffs: Vec<Vec<C<T>>>,
}

impl<T: Real> PolyKR<T> {
    pub fn zero(deg_k: usize, deg_r: usize) -> Self {
        Self {
            coeffs: vec![vec![C::<T>::zero(); deg_r + 1]; deg_k + 1],
        }
    }

    pub fn constant(value: C<T>) -> Self {
        Self {
            coeffs: vec![vec![value]],
        }
    }

    pub fn deg_k(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn deg_r(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn coeff(&self, i: usize, j: usize) -> C<T> {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .copied()
            .unwrap_or_else(C::<T>::zero)
    }

    pub fn coeff_mut(&mut self, i: usize, j: usize) -> &mut C<T> {
        &mut self.coeffs[i][j]
    }

    /// Horner evaluation along `K` with inner `r` rows.
    pub fn eval(&self, k: C<T>, r: C<T>) -> C<T> {
        let mut acc = C::<T>::zero();
        for row in self.coeffs.iter().rev() {
            let mut row_acc = C::<T>::zero();
            for c in row.iter().rev() {
                row_acc = row_acc * r + c;
            }
            acc = acc * k + row_acc;
        }
        acc
    }

    pub fn eval_real(&self, k: T, r: T) -> C<T> {
        self.eval(Complex::new(k, T::zero()), Complex::new(r, T::zero()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Self::zero(
            self.deg_k().max(other.deg_k()),
            self.deg_r().max(other.deg_r()),
        );
        for (i, row) in out.coeffs.iter_mut().enumerate() {
            for (j, c) in row.iter_mut().enumerate() {
                *c = self.coeff(i, j) + other.coeff(i, j);
            }
        }
        out
    }

    /// Multiply by the affine-free linear polynomial `a*K + b*r`.
    pub fn mul_linear(&self, a: C<T>, b: C<T>) -> Self {
        let mut out = Self::zero(self.deg_k() + 1, self.deg_r() + 1);
        for i in 0..=self.deg_k() {
            for j in 0..=self.deg_r() {
                let c = self.coeff(i, j);
                if c.is_zero() {
                    continue;
                }
                *out.coeff_mut(i + 1, j) += c * a;
                *out.coeff_mut(i, j + 1) += c * b;
            }
        }
        out
    }

    pub fn deriv_k(&self) -> Self {
        let dk = self.deg_k().saturating_sub(1);
        let mut out = Self::zero(dk, self.deg_r());
        for i in 1..=self.deg_k() {
            for j in 0..=self.deg_r() {
                *out.coeff_mut(i - 1, j) =
                    self.coeff(i, j) * Complex::new(T::of_usize(i), T::zero());
            }
        }
        out
    }

    pub fn deriv_r(&self) -> Self {
        let dr = self.deg_r().saturating_sub(1);
        let mut out = Self::zero(self.deg_k(), dr);
        for i in 0..=self.deg_k() {
            for j in 1..=self.deg_r() {
                *out.coeff_mut(i, j - 1) =
                    self.coeff(i, j) * Complex::new(T::of_usize(j), T::zero());
            }
        }
        out
    }

    /// Substitute `(K, r) -> (m.kk K + m.kr r, m.rk K + m.rr r)`.
    pub fn compose(&self, m: &LinearMap<T>) -> Self {
        let deg = self.deg_k() + self.deg_r();
        let mut out = Self::zero(deg, deg);
        // powers of the two image variables as polynomials in (K, r)
        let lin_k = {
            let mut p = Self::zero(1, 1);
            *p.coeff_mut(1, 0) = m.kk;
            *p.coeff_mut(0, 1) = m.kr;
            p
        };
        let lin_r = {
            let mut p = Self::zero(1, 1);
            *p.coeff_mut(1, 0) = m.rk;
            *p.coeff_mut(0, 1) = m.rr;
            p
        };
        let pow_k = powers(&lin_k, self.deg_k());
        let pow_r = powers(&lin_r, self.deg_r());
        for i in 0..=self.deg_k() {
            for j in 0..=self.deg_r() {
                let c = self.coeff(i, j);
                if c.is_zero() {
                    continue;
                }
                let term = pow_k[i].mul(&pow_r[j]);
                for ti in 0..=term.deg_k() {
                    for tj in 0..=term.deg_r() {
                        *out.coeff_mut(ti, tj) += c * term.coeff(ti, tj);
                    }
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.deg_k() + other.deg_k(), self.deg_r() + other.deg_r());
        for i in 0..=self.deg_k() {
            for j in 0..=self.deg_r() {
                let c = self.coeff(i, j);
                if c.is_zero() {
                    continue;
                }
                for oi in 0..=other.deg_k() {
                    for oj in 0..=other.deg_r() {
                        *out.coeff_mut(i + oi, j + oj) += c * other.coeff(oi, oj);
                    }
                }
            }
        }
        out
    }
}

fn powers<T: Real>(base: &PolyKR<T>, up_to: usize) -> Vec<PolyKR<T>> {
    let mut out = Vec::with_capacity(up_to + 1);
    out.push(PolyKR::constant(Complex::new(T::one(), T::zero())));
    for i in 1..=up_to {
        let next = out[i - 1].mul(base);
        out.push(next);
    }
    out
}

/// `P(K, r) * exp(Q(K, r))` with `P` polynomial and `Q` a homogeneous
/// quadratic form.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormDensity<T> {
    pub poly: PolyKR<T>,
    pub quad: Quadratic<T>,
}

impl<T: Real> ClosedFormDensity<T> {
    pub fn new(poly: PolyKR<T>, quad: Quadratic<T>) -> Self {
        Self { poly, quad }
    }

    pub fn eval(&self, k: T, r: T) -> C<T> {
        self.poly.eval_real(k, r) * self.quad.eval_real(k, r).exp()
    }

    /// Gaussian exponent of the density (used for domain sizing).
    pub fn exponent(&self, k: T, r: T) -> C<T> {
        self.quad.eval_real(k, r)
    }

    /// Real part of the quadratic form as `(kk, kr, rr)`.
    pub fn real_quad(&self) -> (T, T, T) {
        (self.quad.kk.re, self.quad.kr.re, self.quad.rr.re)
    }

    /// Pull the density back through a linear substitution.
    pub fn compose(&self, m: &LinearMap<T>) -> Self {
        Self {
            poly: self.poly.compose(m),
            quad: self.quad.compose(m),
        }
    }

    /// Multiply by `exp(extra)`.
    pub fn mul_exp(&self, extra: &Quadratic<T>) -> Self {
        Self {
            poly: self.poly.clone(),
            quad: self.quad.add(extra),
        }
    }

    /// Exact partial derivative in `K`; the result is again a closed form
    /// with the same Gaussian factor.
    pub fn deriv_k(&self) -> Self {
        let two = Complex::new(T::lit(2.0), T::zero());
        let chain = self.poly.mul_linear(two * self.quad.kk, self.quad.kr);
        Self {
            poly: self.poly.deriv_k().add(&chain),
            quad: self.quad,
        }
    }

    /// Exact partial derivative in `r`.
    pub fn deriv_r(&self) -> Self {
        let two = Complex::new(T::lit(2.0), T::zero());
        let chain = self.poly.mul_linear(self.quad.kr, two * self.quad.rr);
        Self {
            poly: self.poly.deriv_r().add(&chain),
            quad: self.quad,
        }
    }

    /// Value at `(0, 0)` (the Gaussian factor is 1 there).
    pub fn at_origin(&self) -> C<T> {
        self.poly.coeff(0, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> C<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn eval_and_derivatives_match_finite_differences() {
        // P = 1 + 2 K^2 r - i K r^2, Q = -0.3 K^2 + 0.1i K r - 0.2 r^2
        let mut p = PolyKR::<f64>::zero(2, 2);
        *p.coeff_mut(0, 0) = c(1.0, 0.0);
        *p.coeff_mut(2, 1) = c(2.0, 0.0);
        *p.coeff_mut(1, 2) = c(0.0, -1.0);
        let q = Quadratic {
            kk: c(-0.3, 0.0),
            kr: c(0.0, 0.1),
            rr: c(-0.2, 0.0),
        };
        let f = ClosedFormDensity::new(p, q);
        let h = 1e-6;
        let (k0, r0) = (0.7, -1.1);
        let dk_num = (f.eval(k0 + h, r0) - f.eval(k0 - h, r0)) / c(2.0 * h, 0.0);
        let dk = f.deriv_k().eval(k0, r0);
        assert_relative_eq!(dk.re, dk_num.re, max_relative = 1e-7);
        assert_relative_eq!(dk.im, dk_num.im, max_relative = 1e-7);
        let dr_num = (f.eval(k0, r0 + h) - f.eval(k0, r0 - h)) / c(2.0 * h, 0.0);
        let dr = f.deriv_r().eval(k0, r0);
        assert_relative_eq!(dr.re, dr_num.re, max_relative = 1e-7);
        assert_relative_eq!(dr.im, dr_num.im, max_relative = 1e-7);
    }

    #[test]
    fn compose_matches_pointwise_substitution() {
        let mut p = PolyKR::<f64>::zero(2, 1);
        *p.coeff_mut(0, 0) = c(0.5, 0.0);
        *p.coeff_mut(2, 0) = c(1.0, -0.5);
        *p.coeff_mut(1, 1) = c(-0.7, 0.2);
        let q = Quadratic {
            kk: c(-0.4, 0.05),
            kr: c(0.1, 0.0),
            rr: c(-0.3, -0.02),
        };
        let f = ClosedFormDensity::new(p, q);
        let m = LinearMap {
            kk: c(0.9, 0.1),
            kr: c(-0.2, 0.3),
            rk: c(0.4, 0.0),
            rr: c(1.1, -0.2),
        };
        let g = f.compose(&m);
        for (k, r) in [(0.3, 0.8), (-1.2, 0.4), (2.0, -1.5)] {
            let (k0, r0) = m.apply_real(k, r);
            let direct = f.poly.eval(k0, r0) * f.quad.eval(k0, r0).exp();
            let composed = g.eval(k, r);
            assert_relative_eq!(direct.re, composed.re, max_relative = 1e-12, epsilon = 1e-14);
            assert_relative_eq!(direct.im, composed.im, max_relative = 1e-12, epsilon = 1e-14);
        }
    }
}
