use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::export::{Cell, Table};
use crate::graph::RegularGraph;

/// Default order above which only extreme eigenvalues are computed.
pub const DENSE_CAP: usize = 4000;
/// Slack allowed on `|lambda| <= 2 sqrt(d-1)`.
pub const CERTIFICATION_TOLERANCE: f64 = 1e-8;
const LANCZOS_STEPS: usize = 400;
const LANCZOS_REPORTED: usize = 10;

/// Sorted adjacency eigenvalues with Ramanujan bookkeeping.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub d: usize,
    pub bipartite: bool,
    /// Descending. Only the extremes when `partial`.
    pub eigenvalues: Vec<f64>,
    pub partial: bool,
    pub trivial: Vec<f64>,
    /// Largest nontrivial `|lambda|`.
    pub max_nontrivial: f64,
    pub ramanujan: bool,
    /// `max(0, max_nontrivial - 2 sqrt(d-1))`.
    pub weak_margin: f64,
    /// Nontrivial eigenvalues beyond `2 sqrt(d-1)` (plus tolerance).
    pub exceptional: Vec<f64>,
    pub tolerance: f64,
}

pub fn ramanujan_bound(d: usize) -> f64 {
    2.0 * ((d - 1) as f64).sqrt()
}

impl SpectrumReport {
    /// Builds a report from eigenvalues in any order. The largest eigenvalue
    /// (and the smallest one when `bipartite`) is treated as trivial.
    pub fn from_eigenvalues(d: usize, bipartite: bool, mut eigenvalues: Vec<f64>, partial: bool, n: usize) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        let mut nontrivial: &[f64] = &eigenvalues;
        let mut trivial = Vec::new();
        if let Some((&first, rest)) = nontrivial.split_first() {
            trivial.push(first);
            nontrivial = rest;
        }
        if bipartite {
            if let Some((&last, rest)) = nontrivial.split_last() {
                trivial.push(last);
                nontrivial = rest;
            }
        }
        let bound = ramanujan_bound(d);
        let max_nontrivial = nontrivial.iter().map(|x| x.abs()).fold(0.0, f64::max);
        let exceptional: Vec<f64> =
            nontrivial.iter().copied().filter(|x| x.abs() > bound + CERTIFICATION_TOLERANCE).collect();
        SpectrumReport {
            n,
            d,
            bipartite,
            partial,
            trivial,
            ramanujan: exceptional.is_empty(),
            weak_margin: (max_nontrivial - bound).max(0.0),
            max_nontrivial,
            exceptional,
            tolerance: CERTIFICATION_TOLERANCE,
            eigenvalues,
        }
    }

    /// Nontrivial eigenvalues present in the report.
    pub fn nontrivial(&self) -> &[f64] {
        let end = self.eigenvalues.len() - usize::from(self.bipartite && self.eigenvalues.len() > 1);
        &self.eigenvalues[1.min(end)..end]
    }

    pub fn to_table(&self) -> Table {
        Table {
            meta: vec![
                ("n".into(), self.n.to_string()),
                ("d".into(), self.d.to_string()),
                ("partial".into(), self.partial.to_string()),
            ],
            columns: vec!["index".into(), "eigenvalue".into()],
            rows: self
                .eigenvalues
                .iter()
                .enumerate()
                .map(|(i, &x)| vec![Cell::Int(i as i64), Cell::Float(x)])
                .collect(),
        }
    }
}

pub fn adjacency_matrix(graph: &RegularGraph) -> DMatrix<f64> {
    let n = graph.n();
    let mut a = DMatrix::zeros(n, n);
    for u in 0..n {
        for &v in graph.neighbors(u) {
            a[(u, v)] = 1.0;
        }
    }
    a
}

/// Full adjacency eigendecomposition, eigenvalues descending with
/// orthonormal eigenvector columns in the same order.
#[derive(Debug, Clone)]
pub struct AdjacencyEigen {
    pub values: Vec<f64>,
    pub vectors: DMatrix<f64>,
}

pub fn adjacency_eigen(graph: &RegularGraph, cap: usize) -> Result<AdjacencyEigen> {
    let n = graph.n();
    if n > cap {
        return Err(Error::SizeCap { size: n, cap });
    }
    let eig = SymmetricEigen::new(adjacency_matrix(graph));
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    let gram = vectors.transpose() * &vectors;
    let residual = (gram - DMatrix::identity(n, n)).abs().max();
    if residual > 1e-10 {
        return Err(Error::EigenbasisNotOrthonormal(residual));
    }
    Ok(AdjacencyEigen { values, vectors })
}

/// Unit vectors spanning the trivial eigenspaces: constants, and the
/// side-signed vector on bipartite graphs.
fn trivial_vectors(graph: &RegularGraph) -> Vec<DVector<f64>> {
    let n = graph.n();
    let scale = 1.0 / (n as f64).sqrt();
    let mut out = vec![DVector::from_element(n, scale)];
    if let Some(sides) = graph.bipartition() {
        out.push(DVector::from_iterator(n, sides.iter().map(|&s| if s == 0 { scale } else { -scale })));
    }
    out
}

fn apply_adjacency(graph: &RegularGraph, x: &DVector<f64>) -> DVector<f64> {
    DVector::from_iterator(graph.n(), (0..graph.n()).map(|u| graph.neighbors(u).iter().map(|&v| x[v]).sum()))
}

fn orthogonalize(v: &mut DVector<f64>, basis: &[DVector<f64>]) {
    for _ in 0..2 {
        for b in basis {
            let c = b.dot(v);
            v.axpy(-c, b, 1.0);
        }
    }
}

/// Ritz values of the adjacency restricted to the orthogonal complement of
/// the trivial eigenvectors, by Lanczos with full reorthogonalization.
/// Returns all Ritz values, descending.
pub fn lanczos_nontrivial(graph: &RegularGraph, steps: usize, seed: u64) -> Vec<f64> {
    let n = graph.n();
    let trivial = trivial_vectors(graph);
    let steps = steps.min(n - trivial.len());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut q = DVector::from_fn(n, |_, _| rng.random_range(-1.0..1.0));
    orthogonalize(&mut q, &trivial);
    q /= q.norm();
    let mut basis: Vec<DVector<f64>> = Vec::with_capacity(steps);
    let (mut alphas, mut betas) = (Vec::new(), Vec::new());
    for j in 0..steps {
        let mut w = apply_adjacency(graph, &q);
        let a = q.dot(&w);
        alphas.push(a);
        basis.push(q.clone());
        orthogonalize(&mut w, &trivial);
        orthogonalize(&mut w, &basis);
        let b = w.norm();
        if b < 1e-10 || j + 1 == steps {
            break;
        }
        betas.push(b);
        q = w / b;
    }
    let m = alphas.len();
    let t = DMatrix::from_fn(m, m, |i, j| {
        if i == j {
            alphas[i]
        } else if i + 1 == j || j + 1 == i {
            betas[i.min(j)]
        } else {
            0.0
        }
    });
    let mut ritz: Vec<f64> = SymmetricEigen::new(t).eigenvalues.iter().copied().collect();
    ritz.sort_by(|a, b| b.total_cmp(a));
    ritz
}

/// Full spectrum when `n <= cap`, otherwise a partial report holding the
/// trivial eigenvalues and the extreme nontrivial Ritz values.
pub fn adjacency_spectrum(graph: &RegularGraph, cap: usize) -> Result<SpectrumReport> {
    let (n, d) = (graph.n(), graph.d());
    if n <= cap {
        let eig = adjacency_eigen(graph, cap)?;
        let report = SpectrumReport::from_eigenvalues(d, graph.is_bipartite(), eig.values, false, n);
        return Ok(report);
    }
    let ritz = lanczos_nontrivial(graph, LANCZOS_STEPS, 0);
    let k = LANCZOS_REPORTED.min(ritz.len() / 2);
    let mut values = vec![d as f64];
    values.extend_from_slice(&ritz[..k]);
    values.extend_from_slice(&ritz[ritz.len() - k..]);
    if graph.is_bipartite() {
        values.push(-(d as f64));
    }
    Ok(SpectrumReport::from_eigenvalues(d, graph.is_bipartite(), values, true, n))
}

/// Like [`adjacency_spectrum`] but refuses to fall back to a partial report.
pub fn adjacency_spectrum_full(graph: &RegularGraph, cap: usize) -> Result<SpectrumReport> {
    if graph.n() > cap {
        return Err(Error::SizeCap { size: graph.n(), cap });
    }
    adjacency_spectrum(graph, cap)
}

/// Certification parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CertifyConfig {
    /// Largest accepted excess `delta` over `2 sqrt(d-1)`.
    pub delta_threshold: f64,
    /// Maximal number of exceptional eigenvalues.
    pub exceptional_budget: usize,
    /// Exceptional eigenvalues must satisfy `|lambda| < d - gap_floor`.
    pub gap_floor: f64,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig { delta_threshold: 0.0, exceptional_budget: 0, gap_floor: 1e-6 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Certificate {
    Ramanujan,
    WeaklyRamanujan { delta: f64 },
    WeaklyWithExceptions { delta: f64, count: usize, max_exceptional: f64 },
    NotCertified { reason: String },
}

impl Certificate {
    pub fn label(&self) -> &'static str {
        match self {
            Certificate::Ramanujan => "Ramanujan",
            Certificate::WeaklyRamanujan { .. } => "WeaklyRamanujan",
            Certificate::WeaklyWithExceptions { .. } => "WeaklyWithExceptions",
            Certificate::NotCertified { .. } => "NotCertified",
        }
    }

    pub fn is_ramanujan(&self) -> bool {
        matches!(self, Certificate::Ramanujan)
    }
}

/// Classifies a spectrum. Partial reports can be certified from their
/// extreme eigenvalues, but exceptions are only counted on full spectra.
pub fn certify(report: &SpectrumReport, config: &CertifyConfig) -> Certificate {
    let d = report.d as f64;
    let bound = ramanujan_bound(report.d);
    let nontrivial = report.nontrivial();
    if nontrivial.iter().any(|x| x.abs() >= d - report.tolerance) {
        return Certificate::NotCertified { reason: "a nontrivial eigenvalue reaches the degree".into() };
    }
    if report.ramanujan {
        return Certificate::Ramanujan;
    }
    let delta = report.weak_margin;
    if delta <= config.delta_threshold + report.tolerance {
        return Certificate::WeaklyRamanujan { delta };
    }
    if report.partial {
        return Certificate::NotCertified { reason: "exceptional eigenvalues need a full spectrum".into() };
    }
    let cutoff = bound + config.delta_threshold + report.tolerance;
    let (exc, rest): (Vec<f64>, Vec<f64>) = nontrivial.iter().partition(|x| x.abs() > cutoff);
    let max_exceptional = exc.iter().map(|x| x.abs()).fold(0.0, f64::max);
    if exc.len() > config.exceptional_budget {
        return Certificate::NotCertified { reason: format!("{} exceptional eigenvalues exceed the budget", exc.len()) };
    }
    if max_exceptional >= d - config.gap_floor {
        return Certificate::NotCertified { reason: "exceptional eigenvalue too close to the degree".into() };
    }
    let delta = (rest.iter().map(|x| x.abs()).fold(0.0, f64::max) - bound).max(0.0);
    Certificate::WeaklyWithExceptions { delta, count: exc.len(), max_exceptional }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_random_regular, named};

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-10)
    }

    #[test]
    fn named_spectra() {
        let k4 = adjacency_spectrum(&named::complete(4).unwrap(), DENSE_CAP).unwrap();
        assert!(close(&k4.eigenvalues, &[3.0, -1.0, -1.0, -1.0]));
        assert!(k4.ramanujan && !k4.partial);
        let p = adjacency_spectrum(&named::petersen(), DENSE_CAP).unwrap();
        assert!(close(&p.eigenvalues, &[3.0, 1.0, 1.0, 1.0, 1.0, 1.0, -2.0, -2.0, -2.0, -2.0]));
        assert!(p.ramanujan);
        let k33 = adjacency_spectrum(&named::complete_bipartite(3).unwrap(), DENSE_CAP).unwrap();
        assert!(close(&k33.eigenvalues, &[3.0, 0.0, 0.0, 0.0, 0.0, -3.0]));
        assert_eq!(k33.trivial.len(), 2);
        assert!(k33.ramanujan);
    }

    #[test]
    fn trace_and_top_eigenvalue() {
        let g = build_random_regular(60, 4, 3).unwrap();
        let r = adjacency_spectrum(&g, DENSE_CAP).unwrap();
        assert!((r.eigenvalues[0] - 4.0).abs() < 1e-10);
        assert!(r.eigenvalues.iter().sum::<f64>().abs() < 1e-9);
    }

    #[test]
    fn size_cap() {
        let g = named::petersen();
        assert_eq!(adjacency_spectrum_full(&g, 5), Err(Error::SizeCap { size: 10, cap: 5 }));
        let partial = adjacency_spectrum(&g, 5).unwrap();
        assert!(partial.partial);
        assert!((partial.eigenvalues[1] - 1.0).abs() < 1e-8);
        assert!((partial.eigenvalues.last().unwrap() + 2.0).abs() < 1e-8);
        assert_eq!(certify(&partial, &CertifyConfig::default()), Certificate::Ramanujan);
    }

    #[test]
    fn lanczos_matches_dense_extremes() {
        let g = build_random_regular(300, 3, 11).unwrap();
        let dense = adjacency_spectrum(&g, DENSE_CAP).unwrap();
        let ritz = lanczos_nontrivial(&g, 200, 1);
        assert!((ritz[0] - dense.eigenvalues[1]).abs() < 1e-8);
        assert!((ritz.last().unwrap() - dense.eigenvalues.last().unwrap()).abs() < 1e-8);
    }

    #[test]
    fn certificates() {
        let p = adjacency_spectrum(&named::petersen(), DENSE_CAP).unwrap();
        assert_eq!(certify(&p, &CertifyConfig::default()), Certificate::Ramanujan);
        let bound = ramanujan_bound(3);
        let weak = SpectrumReport::from_eigenvalues(3, false, vec![3.0, bound + 0.1, 1.0, -1.0], false, 4);
        let cfg = CertifyConfig { delta_threshold: 0.2, ..Default::default() };
        match certify(&weak, &cfg) {
            Certificate::WeaklyRamanujan { delta } => assert!((delta - 0.1).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
        let disconnected = SpectrumReport::from_eigenvalues(3, false, vec![3.0, 3.0, 0.0, -1.0], false, 4);
        assert!(matches!(certify(&disconnected, &cfg), Certificate::NotCertified { .. }));
        let exc = SpectrumReport::from_eigenvalues(3, false, vec![3.0, 2.95, 1.0, -1.0], false, 4);
        let cfg = CertifyConfig { delta_threshold: 0.0, exceptional_budget: 1, gap_floor: 0.01 };
        match certify(&exc, &cfg) {
            Certificate::WeaklyWithExceptions { count, max_exceptional, .. } => {
                assert_eq!(count, 1);
                assert_eq!(max_exceptional, 2.95);
            }
            other => panic!("{other:?}"),
        }
        let cfg = CertifyConfig { gap_floor: 0.1, ..cfg };
        assert!(matches!(certify(&exc, &cfg), Certificate::NotCertified { .. }));
    }
}
