//! Exact L^2 mixing of the nonbacktracking walk on transitive Ramanujan
//! graphs from the adjacency spectrum.

use num_complex::Complex64;
use serde::Serialize;

use super::operator::{alpha_exact, gamma, theta_pair};
use super::spectrum::SpectrumReport;
use crate::error::{Error, Result};
use crate::graph::{DirectedEdgeSpace, RegularGraph};
use crate::scalar::ceil_tol;
use crate::theory::PExponent;
use crate::walk::{mixing_curve, start_sample, WalkSpec, Kernel, DEFAULT_START_SAMPLE, EXHAUSTIVE_STARTS};

const MAX_STEPS: usize = 500;

/// `U_{k-1}(a)` with `U_{k-1}(cos x) = sin(k x) / sin x`, continued to real
/// `k` and to `|a| >= 1` through `sinh` (up to sign).
pub fn chebyshev_u_shifted(k: f64, a: f64) -> f64 {
    let b = a.abs();
    if (b - 1.0).abs() < 1e-12 {
        k
    } else if b < 1.0 {
        let x = a.acos();
        (k * x).sin() / x.sin()
    } else {
        let y = b.acosh();
        (k * y).sinh() / y.sinh()
    }
}

/// `(d-2)^2/(d-1)` times the mean over `eigenvalues` of
/// `U_{k-1}(lambda / (2 sqrt(d-1)))^2`.
pub fn upsilon(eigenvalues: &[f64], d: usize, k: f64) -> f64 {
    let dm1 = (d - 1) as f64;
    let scale = 2.0 * dm1.sqrt();
    let mean = eigenvalues.iter().map(|&l| chebyshev_u_shifted(k, l / scale).powi(2)).sum::<f64>()
        / eigenvalues.len() as f64;
    ((d - 2) as f64).powi(2) / dm1 * mean
}

/// Squared L^2 distance of the nonbacktracking walk at time `t`, averaged
/// over all starting edges, on a non-bipartite Ramanujan graph:
/// `(N-2n+1)(d-1)^{-2t} + (2n-2)(d-1)^{-t} + (d-1)^{-2t} sum_i |gamma_i(t)|^2`.
pub fn average_l2_squared(n: usize, d: usize, nontrivial: &[f64], t: usize) -> f64 {
    let big_n = (n * d) as f64;
    let dm1 = (d - 1) as f64;
    let decay = dm1.powi(-(t as i32));
    let gammas: f64 = nontrivial
        .iter()
        .map(|&l| {
            let (theta, _) = theta_pair(l, d);
            gamma(theta, Complex64::new(alpha_exact(l, d), 0.0), t).norm_sqr()
        })
        .sum();
    (big_n - 2.0 * n as f64 + 1.0) * decay * decay + (2 * n - 2) as f64 * decay + decay * decay * gammas
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UpsilonCheck {
    pub eps: f64,
    /// `log_{d-1} n`.
    pub log_n: f64,
    pub upsilon_at_log_n: f64,
    /// `ceil(log n + log(Upsilon(log n) + 2) + log(1/eps))`, logs base `d-1`.
    pub predicted: i64,
    /// First `t` at which the averaged spectral identity is at most `eps`.
    pub spectral_average: usize,
    /// First `t` at which the measured worst squared L^2 distance is at most `eps`.
    pub measured: usize,
    pub starts: Vec<usize>,
    pub matches: bool,
}

/// Compares the closed-form L^2 mixing time with the measured one. The
/// graph is assumed vertex-transitive; `eps` bounds the squared distance.
pub fn upsilon_l2_transitive(
    graph: &RegularGraph,
    edges: &DirectedEdgeSpace,
    report: &SpectrumReport,
    eps: f64,
) -> Result<UpsilonCheck> {
    if graph.is_bipartite() {
        return Err(Error::Bipartite);
    }
    if !report.ramanujan {
        return Err(Error::NotRamanujan(report.max_nontrivial));
    }
    if report.partial {
        return Err(Error::BadParams("a full spectrum is required".into()));
    }
    let (n, d) = (graph.n(), graph.d());
    let lb = ((d - 1) as f64).ln();
    let log_n = (n as f64).ln() / lb;
    let ups = upsilon(&report.eigenvalues, d, log_n);
    let predicted = ceil_tol(log_n + (ups + 2.0).ln() / lb + (1.0 / eps).ln() / lb);
    let spectral_average = (0..=MAX_STEPS)
        .find(|&t| average_l2_squared(n, d, report.nontrivial(), t) <= eps)
        .ok_or(Error::NotReached(MAX_STEPS))?;

    let starts = start_sample(edges.len(), EXHAUSTIVE_STARTS, DEFAULT_START_SAMPLE, 0);
    let mut measured = 0;
    for &s in &starts {
        let curve = mixing_curve::<f64>(graph, edges, WalkSpec::plain(Kernel::Nbrw), s, MAX_STEPS, &[PExponent::Finite(2.0)])?;
        let t = curve.d_p[0].iter().position(|&x| x * x <= eps).ok_or(Error::NotReached(MAX_STEPS))?;
        measured = measured.max(t);
    }
    Ok(UpsilonCheck {
        eps,
        log_n,
        upsilon_at_log_n: ups,
        predicted,
        spectral_average,
        measured,
        starts,
        matches: predicted == measured as i64,
    })
}
