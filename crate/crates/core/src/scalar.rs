//! Scalar abstraction: the simulator is generic over the real type behind
//! the complex amplitudes.
//!
//! The tolerances are per-type because a float's precision bounds what an
//! exact circuit of ~30 gates can guarantee. The `f64` constants are the
//! reference values used by the verification suites; `f32` gets looser ones.

use std::fmt::{Debug, Display};

use num_traits::Float;

/// Real scalar underlying complex amplitudes.
pub trait Real: Float + Debug + Display + Send + Sync + 'static {
    /// Tolerance for norm and probability assertions.
    const NORM_TOL: Self;
    /// Tolerance for amplitude round-trip comparisons.
    const AMP_TOL: Self;
    /// Probabilities below this are treated as impossible branches.
    const BRANCH_EPS: Self;

    /// Lossy conversion from `f64`, for literals like 0.5 and 1/√2.
    fn from_f64(value: f64) -> Self {
        num_traits::NumCast::from(value).expect("f64 literal representable in scalar type")
    }

    fn to_f64_lossy(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const NORM_TOL: Self = 1e-10;
    const AMP_TOL: Self = 1e-12;
    const BRANCH_EPS: Self = 1e-14;
}

impl Real for f32 {
    const NORM_TOL: Self = 1e-4;
    const AMP_TOL: Self = 1e-5;
    const BRANCH_EPS: Self = 1e-7;
}
