//! Scalar abstraction over the floating-point types the library runs on.

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};
use rand::Rng;
use rand_distr::StandardNormal;
use std::fmt::{Debug, Display};
use std::iter::Sum;

/// Floating-point scalar usable everywhere in the library.
///
/// All numeric code is generic over this trait; `f32` and `f64` implement it.
/// Standard-normal sampling is routed through the trait so that a pinned seed
/// reproduces the same draw sequence regardless of the calling module.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum<Self>
    + for<'a> Sum<&'a Self>
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Converts from `f64`, panicking only for values a float type cannot
    /// represent at all (never the case for finite constants used here).
    fn from_f64_c(value: f64) -> Self {
        Self::from_f64(value).expect("f64 constant not representable")
    }

    /// Converts to `f64` (lossless for f32/f64).
    fn to_f64_c(self) -> f64 {
        self.to_f64().expect("scalar not representable as f64")
    }

    /// One draw from N(0, 1). The transform is the ziggurat sampler of
    /// `rand_distr::StandardNormal`; it is frozen by the dependency version so
    /// pinned-seed regression values stay stable.
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

impl Scalar for f32 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.sample(StandardNormal)
    }
}

impl Scalar for f64 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.sample(StandardNormal)
    }
}
