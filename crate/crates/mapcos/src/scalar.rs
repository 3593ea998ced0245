use std::fmt::{Debug, Display};
use std::ops::{Add, Neg, Sub};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, Zero};
use rustfft::FftNum;

/// Floating-point scalar the whole crate is generic over (`f32` or `f64`).
pub trait Scalar:
    Float + FloatConst + FromPrimitive + NumAssign + FftNum + Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Float + FloatConst + FromPrimitive + NumAssign + FftNum + Display + Send + Sync + 'static
{
}

/// Sample/coefficient type: either the scalar itself or a complex value over it.
pub trait Value<T: Scalar>:
    Copy
    + Debug
    + Send
    + Sync
    + 'static
    + Zero
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
{
    fn from_real(re: T) -> Self;
    /// Multiply by a real scalar.
    fn scale(self, k: T) -> Self;
    /// Absolute value (complex modulus).
    fn modulus(self) -> T;
    fn into_complex(self) -> Complex<T>;
    fn from_complex(z: Complex<T>) -> Self;
    fn all_finite(self) -> bool;
}

impl<T: Scalar> Value<T> for T {
    fn from_real(re: T) -> Self {
        re
    }

    fn scale(self, k: T) -> Self {
        self * k
    }

    fn modulus(self) -> T {
        self.abs()
    }

    fn into_complex(self) -> Complex<T> {
        Complex::new(self, T::zero())
    }

    fn from_complex(z: Complex<T>) -> Self {
        z.re
    }

    fn all_finite(self) -> bool {
        self.is_finite()
    }
}

impl<T: Scalar> Value<T> for Complex<T> {
    fn from_real(re: T) -> Self {
        Complex::new(re, T::zero())
    }

    fn scale(self, k: T) -> Self {
        Complex::new(self.re * k, self.im * k)
    }

    fn modulus(self) -> T {
        self.norm()
    }

    fn into_complex(self) -> Complex<T> {
        self
    }

    fn from_complex(z: Complex<T>) -> Self {
        z
    }

    fn all_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Shorthand for converting an `f64` literal into the working scalar type.
pub(crate) fn lit<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("f64 literal must convert to the scalar type")
}
