//! Scalar abstractions.
//!
//! Radial tree recursions only need field operations, so they run over any
//! [`Field`] (including exact rationals). Walk evolution and the closed-form
//! predictions need transcendental functions and are generic over [`Real`].

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, Num, ToPrimitive};

/// Exact or floating field arithmetic.
pub trait Field: Clone + Num + FromPrimitive + Debug {
    fn from_count(k: usize) -> Self {
        Self::from_usize(k).expect("count representable in field")
    }

    /// Ratio of two counts, `num / den`.
    fn ratio(num: usize, den: usize) -> Self {
        Self::from_count(num) / Self::from_count(den)
    }

    /// Lossy conversion for reporting.
    fn approx_f64(&self) -> f64;
}

impl Field for f32 {
    fn approx_f64(&self) -> f64 {
        f64::from(*self)
    }
}

impl Field for f64 {
    fn approx_f64(&self) -> f64 {
        *self
    }
}

impl Field for BigRational {
    fn from_count(k: usize) -> Self {
        BigRational::from_integer(BigInt::from(k))
    }

    fn approx_f64(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Floating point scalar for walk evolution and closed-form bounds.
pub trait Real: Field + Float + Copy + Display + Sum + Send + Sync + 'static {
    /// Allowed drift of total probability mass away from one.
    const MASS_TOLERANCE: f64;

    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {
    const MASS_TOLERANCE: f64 = 1e-5;
}

impl Real for f64 {
    const MASS_TOLERANCE: f64 = 1e-12;
}

/// `ceil(x)` that ignores floating noise just above an integer.
pub fn ceil_tol(x: f64) -> i64 {
    let r = x.round();
    if (x - r).abs() <= 1e-9 * r.abs().max(1.0) {
        r as i64
    } else {
        x.ceil() as i64
    }
}

/// `floor(x)` with the same integer snapping as [`ceil_tol`].
pub fn floor_tol(x: f64) -> i64 {
    let r = x.round();
    if (x - r).abs() <= 1e-9 * r.abs().max(1.0) {
        r as i64
    } else {
        x.floor() as i64
    }
}

/// `log_base(x)` from natural logarithms.
pub fn log_base<T: Real>(x: T, base: T) -> T {
    x.ln() / base.ln()
}
