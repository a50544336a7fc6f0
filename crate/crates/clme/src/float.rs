//! Scalar abstraction: every numerical routine in this crate is generic over
//! the floating-point type through [`Real`].

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar (f32 or f64) with the constants and conversions the
/// model formulas need.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
    /// Lift an `f64` literal into the scalar type.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    /// Lift a `usize` into the scalar type.
    #[inline]
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Shorthand for the complex number type over a [`Real`] scalar.
pub type C<T> = Complex<T>;

/// Lift a real scalar into a complex value.
#[inline]
pub fn cx<T: Real>(re: T) -> C<T> {
    Complex::new(re, T::zero())
}

/// `sqrt(2*pi)` in the scalar type.
#[inline]
pub fn sqrt_two_pi<T: Real>() -> T {
    (T::lit(2.0) * T::PI()).sqrt()
}
