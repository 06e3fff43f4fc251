//! Total-variation cutoff location and Gaussian window profile.

use serde::Serialize;

use super::normal::normal_sf;
use crate::error::{Error, Result};
use crate::scalar::{log_base, Real};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CutoffPrediction<T> {
    pub n: usize,
    pub d: usize,
    /// `d/(d-2) log_{d-1} n`.
    pub t_star: T,
    /// Window scale `sqrt(log_{d-1} n)`.
    pub window: T,
    /// `(d-2)^{3/2} / (2 sqrt(d(d-1)))`.
    pub profile_constant: T,
    /// `2 sqrt(d-1) / d`, the spectral radius of the walk on the tree.
    pub rho: T,
}

impl<T: Real> CutoffPrediction<T> {
    /// `t_star + s * window`.
    pub fn time_at(&self, s: T) -> T {
        self.t_star + s * self.window
    }

    /// Predicted total-variation distance at `time_at(s)`.
    pub fn profile(&self, s: T) -> T {
        T::lit(normal_sf((self.profile_constant * s).to_f64_lossy()))
    }

    /// `(1/2) log_{1/rho} n`, the L^2 cutoff location.
    pub fn l2_location(&self) -> T {
        T::lit(0.5) * log_base(T::from_count(self.n), T::one() / self.rho)
    }
}

pub fn cutoff_prediction<T: Real>(n: usize, d: usize) -> CutoffPrediction<T> {
    let dt = T::from_count(d);
    let two = T::lit(2.0);
    let log_n = log_base(T::from_count(n), dt - T::one());
    CutoffPrediction {
        n,
        d,
        t_star: dt / (dt - two) * log_n,
        window: log_n.sqrt(),
        profile_constant: (dt - two).powf(T::lit(1.5)) / (two * (dt * (dt - T::one())).sqrt()),
        rho: two * (dt - T::one()).sqrt() / dt,
    }
}

/// `P(Z > c_d s)` for a standard normal `Z`.
pub fn profile_value<T: Real>(s: T, d: usize) -> T {
    cutoff_prediction::<T>(2, d).profile(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LowerProfile<T> {
    /// `d/(d-2) log_{d-1}(eps n / d)`.
    pub t: T,
    /// `s sqrt(log_{d-1} n)`; the bound applies at time `t - shift`.
    pub shift: T,
    /// `1 - eps - P(Z > c_d s)`.
    pub bound: T,
}

/// Lower bound on the total-variation distance of the simple walk just
/// before the cutoff window.
pub fn srw_lower_profile<T: Real>(n: usize, d: usize, eps: T, s: T) -> Result<LowerProfile<T>> {
    if !(eps > T::zero() && eps < T::one()) {
        return Err(Error::BadParams(format!("eps must lie in (0, 1), got {eps}")));
    }
    let cut = cutoff_prediction::<T>(n, d);
    let dt = T::from_count(d);
    let base = dt - T::one();
    Ok(LowerProfile {
        t: dt / (dt - T::lit(2.0)) * log_base(eps * T::from_count(n) / dt, base),
        shift: s * cut.window,
        bound: T::one() - eps - cut.profile(s),
    })
}
