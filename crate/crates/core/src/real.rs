//! Scalar abstraction for the numeric kernels.
//!
//! Everything that is plain floating-point math is generic over [`Real`];
//! the exact-coefficient layer lives in [`crate::polynomials`] on top of
//! `BigRational` and only touches `Real` when a value is evaluated.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an f64 constant into the working scalar.
///
/// Panics only if `x` cannot be represented at all, which no finite
/// constant used in this crate triggers.
#[inline]
pub fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("finite constant must convert")
}

/// Converts a small unsigned integer (quantum numbers, loop indices).
#[inline]
pub fn real_u<T: Real>(n: u32) -> T {
    T::from_u32(n).expect("u32 must convert")
}
