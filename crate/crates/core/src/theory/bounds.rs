//! Diameter bounds and integer mixing-time thresholds.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{ceil_tol, floor_tol};

fn log_in(x: f64, base: f64) -> f64 {
    x.ln() / base.ln()
}

/// `ceil(log_{d-1}(d n)) - ceil(log_{d-1}(1/eps))`: fewer steps leave the
/// nonbacktracking walk on too few directed edges to be `eps`-close to
/// uniform in total variation.
pub fn nbrw_tmix_lower(n: usize, d: usize, eps: f64) -> i64 {
    let base = (d - 1) as f64;
    ceil_tol(log_in((d * n) as f64, base)) - ceil_tol(log_in(1.0 / eps, base))
}

/// `ceil((1 + 5 sqrt(delta)) log_{d-1} n + 3 log_{d-1} ln n)`.
pub fn weakly_adjusted_time(n: usize, d: usize, delta: f64) -> i64 {
    let base = (d - 1) as f64;
    let n = n as f64;
    ceil_tol((1.0 + 5.0 * delta.sqrt()) * log_in(n, base) + 3.0 * log_in(n.ln(), base))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiameterBounds {
    /// `2 sqrt(2d/(d - lambda)) log_2 n`.
    pub alon_milman: f64,
    /// `ceil(log_{d/lambda}(n - 1))`.
    pub chung: i64,
    /// `floor(acosh(n - 1) / acosh(d/lambda)) + 1`.
    pub cfm: i64,
}

fn acosh_guarded(x: f64) -> f64 {
    if x < 1.0 + 1e-12 {
        0.0
    } else {
        (x + (x * x - 1.0).sqrt()).ln()
    }
}

/// Upper bounds on the diameter given the second largest absolute
/// eigenvalue `lambda`.
pub fn diameter_bounds(n: usize, d: usize, lambda: f64) -> Result<DiameterBounds> {
    let df = d as f64;
    if !(lambda > 0.0 && lambda < df) {
        return Err(Error::LambdaOutOfRange(lambda));
    }
    let nf = n as f64;
    let cfm_den = acosh_guarded(df / lambda);
    Ok(DiameterBounds {
        alon_milman: 2.0 * (2.0 * df / (df - lambda)).sqrt() * nf.log2(),
        chung: ceil_tol(log_in(nf - 1.0, df / lambda)),
        cfm: floor_tol(acosh_guarded(nf - 1.0) / cfm_den) + 1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct L1L2Gap {
    /// `((d-2)/d) ln(d-1) - 2 ln(d / (2 sqrt(d-1)))`.
    pub f: f64,
    /// `(1/2) log_{1/rho} n` divided by `t_star(n)`; independent of `n`.
    pub location_ratio: f64,
}

/// Gap between the L^1 and L^2 cutoff locations, for real `d > 2`.
pub fn l1_l2_gap(d: f64) -> L1L2Gap {
    let log_inv_rho = (d / (2.0 * (d - 1.0).sqrt())).ln();
    L1L2Gap {
        f: (d - 2.0) / d * (d - 1.0).ln() - 2.0 * log_inv_rho,
        location_ratio: (d - 2.0) / d * (d - 1.0).ln() / (2.0 * log_inv_rho),
    }
}
