//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real floating-point scalar: `f32` or `f64`.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable in scalar type")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Working tolerance for inversions and integrations: `1e-14` in double
    /// precision, a few ulps in single precision.
    #[inline]
    fn default_tol() -> Self {
        Self::lit(1e-14).max(Self::epsilon() * Self::lit(64.0))
    }

    /// Scale a double-precision tolerance so it stays meaningful for `f32`.
    #[inline]
    fn tol(x: f64) -> Self {
        let eps_ratio = Self::epsilon().to_f64_lossy() / f64::EPSILON;
        Self::lit(x * eps_ratio.max(1.0))
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
