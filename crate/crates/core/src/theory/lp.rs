//! L^p cutoff locations for the simple walk on Ramanujan graphs.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{log_base, Real};
use crate::walk::tree_lp_norm;

/// Exponent `p` of an L^p norm, finite or infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PExponent {
    Finite(f64),
    Infinite,
}

impl PExponent {
    /// `(p-1)/p`, equal to 1 at infinity.
    pub fn conjugate_ratio(self) -> f64 {
        match self {
            PExponent::Finite(p) => (p - 1.0) / p,
            PExponent::Infinite => 1.0,
        }
    }

    /// `(p-2)/p`, equal to 1 at infinity.
    fn shift_ratio(self) -> f64 {
        match self {
            PExponent::Finite(p) => (p - 2.0) / p,
            PExponent::Infinite => 1.0,
        }
    }

    pub fn is_at_least(self, x: f64) -> bool {
        match self {
            PExponent::Finite(p) => p >= x,
            PExponent::Infinite => true,
        }
    }
}

impl fmt::Display for PExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PExponent::Finite(p) => write!(f, "{p}"),
            PExponent::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for PExponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "Inf" => Ok(PExponent::Infinite),
            other => other
                .parse::<f64>()
                .map(|p| if p.is_infinite() { PExponent::Infinite } else { PExponent::Finite(p) })
                .map_err(|_| Error::BadParams(format!("invalid exponent {other:?}"))),
        }
    }
}

impl Serialize for PExponent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PExponent::Finite(p) => s.serialize_f64(*p),
            PExponent::Infinite => s.serialize_str("inf"),
        }
    }
}

/// `beta log_b(beta/alpha) + (1-beta) log_b((1-beta)/(1-alpha))` with
/// `0 log 0 = 0`.
pub fn relative_entropy<T: Real>(beta: T, alpha: T, base: T) -> Result<T> {
    let unit = |x: T| x >= T::zero() && x <= T::one();
    if !unit(beta) || !unit(alpha) || base <= T::one() {
        return Err(Error::BadParams(format!("relative entropy needs beta, alpha in [0,1] and base > 1, got {beta}, {alpha}, {base}")));
    }
    let term = |b: T, a: T| -> Result<T> {
        if b == T::zero() {
            Ok(T::zero())
        } else if a == T::zero() {
            Err(Error::AlphaDegenerate(alpha.to_f64_lossy()))
        } else {
            Ok(b * log_base(b / a, base))
        }
    };
    Ok(term(beta, alpha)? + term(T::one() - beta, T::one() - alpha)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LpPrediction<T> {
    pub d: usize,
    pub n: usize,
    pub p: PExponent,
    /// Minimizer of [`LpPrediction::objective`] over `[1/2, (d-1)/d]`.
    pub beta_star: T,
    pub c_dp: T,
    /// Predicted L^p mixing time up to lower-order terms.
    pub location: T,
}

impl<T: Real> LpPrediction<T> {
    /// `((p-1)/p)(2 beta - 1) + H_{d-1}(beta || (d-1)/d)`.
    pub fn objective(&self, beta: T) -> T {
        objective(self.p, self.d, beta)
    }
}

fn objective<T: Real>(p: PExponent, d: usize, beta: T) -> T {
    let dt = T::from_count(d);
    let alpha = (dt - T::one()) / dt;
    let h = relative_entropy(beta, alpha, dt - T::one()).expect("alpha is interior");
    T::lit(p.conjugate_ratio()) * (T::lit(2.0) * beta - T::one()) + h
}

pub fn lp_prediction<T: Real>(p: PExponent, d: usize, n: usize) -> Result<LpPrediction<T>> {
    if let PExponent::Finite(x) = p {
        if x.is_nan() || x <= 1.0 {
            return Err(Error::POutOfRange(x));
        }
    }
    if d < 3 {
        return Err(Error::DegreeTooSmall(d));
    }
    let dt = T::from_count(d);
    let base = dt - T::one();
    let half = T::lit(0.5);
    let beta_star = (T::one() / (base.powf(T::lit(p.shift_ratio())) + T::one())).max(half);
    let c_dp = T::lit(p.conjugate_ratio()) / objective(p, d, beta_star);
    let log_n = log_base(T::from_count(n), base);
    let location = if p.is_at_least(2.0) {
        let rho = T::lit(2.0) * base.sqrt() / dt;
        T::lit(p.conjugate_ratio()) * log_base(T::from_count(n), T::one() / rho)
    } else {
        c_dp * log_n
    };
    Ok(LpPrediction { d, n, p, beta_star, c_dp, location })
}

/// Minimizes `f` on `[lo, hi]` by repeated grid refinement around the best
/// grid point.
pub fn grid_minimize<T: Real>(f: impl Fn(T) -> T, lo: T, hi: T) -> T {
    const POINTS: usize = 1000;
    let (mut lo, mut hi) = (lo, hi);
    let mut best = lo;
    for _ in 0..6 {
        let step = (hi - lo) / T::from_count(POINTS);
        let mut best_val = T::infinity();
        let mut best_i = 0;
        for i in 0..=POINTS {
            let x = lo + step * T::from_count(i);
            let v = f(x);
            if v < best_val {
                best_val = v;
                best_i = i;
            }
        }
        best = lo + step * T::from_count(best_i);
        let new_lo = (best - step).max(lo);
        let new_hi = (best + step).min(hi);
        lo = new_lo;
        hi = new_hi;
    }
    best
}

/// `n^{(p-1)/p} ||Q^t(xi, .)||_p - 1`: the distance an `n`-vertex graph
/// cannot beat, from the radial law of the walk on the infinite tree.
pub fn lp_lower_bound<T: Real>(n: usize, d: usize, p: PExponent, t: usize) -> T {
    let scale = T::from_count(n).powf(T::lit(p.conjugate_ratio()));
    scale * tree_lp_norm::<T>(d, t, p) - T::one()
}
