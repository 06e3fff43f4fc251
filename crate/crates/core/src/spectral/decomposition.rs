//! Unitary block-triangularization of the nonbacktracking operator built
//! from an orthonormal adjacency eigenbasis.
//!
//! Every nontrivial eigenpair `(lambda, f)` spans, through
//! `T_x f (u, v) = x f(v) - f(u)`, a two-dimensional `B`-invariant space on
//! which `B` is upper triangular with diagonal `(theta, theta')`, the roots
//! of `theta^2 - lambda theta + d - 1`. The remaining directions are the
//! `+1` and `-1` eigenspaces: antisymmetric, respectively symmetric, edge
//! functions with zero sum around every vertex.

use nalgebra::{DMatrix, Schur, SymmetricEigen};
use num_complex::Complex64;
use serde::Serialize;

use super::operator::{alpha_exact, build_b, theta_pair};
use super::spectrum::AdjacencyEigen;
use crate::error::{Error, Result};
use crate::graph::{DirectedEdgeSpace, RegularGraph};

/// `||lambda| - 2 sqrt(d-1)|` below which the Jordan construction is used.
pub const JORDAN_TOLERANCE: f64 = 1e-9;
const NULL_TOLERANCE: f64 = 1e-8;

type Vector = Vec<Complex64>;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairBlock {
    pub lambda: f64,
    pub theta: Complex64,
    pub theta_prime: Complex64,
    /// Upper-right entry of the block.
    pub alpha: Complex64,
    pub jordan: bool,
    /// Index of the block's first column in `U`.
    pub column: usize,
}

/// `B = U Lambda U^*` with `Lambda` ordered as: `d-1`, then `-(d-1)` for
/// bipartite graphs, then the 2x2 blocks, then the `-1` and `+1` columns.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub n: usize,
    pub d: usize,
    pub bipartite: bool,
    pub pairs: Vec<PairBlock>,
    pub minus_one: usize,
    pub plus_one: usize,
    pub u: DMatrix<Complex64>,
}

impl BlockDecomposition {
    pub fn num_directed_edges(&self) -> usize {
        self.u.nrows()
    }

    /// `(N/2 - n, N/2 - n + 1)` or `(N/2 - n + 1, N/2 - n + 1)` when bipartite.
    pub fn expected_multiplicities(&self) -> (usize, usize) {
        let half = self.num_directed_edges() / 2;
        let minus = half + usize::from(self.bipartite) - self.n;
        (minus, half + 1 - self.n)
    }

    fn one(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    /// Diagonal of `Lambda`, column by column.
    pub fn diagonal(&self) -> Vec<Complex64> {
        let dm1 = (self.d - 1) as f64;
        let mut diag = vec![Self::one(dm1)];
        if self.bipartite {
            diag.push(Self::one(-dm1));
        }
        for p in &self.pairs {
            diag.push(p.theta);
            diag.push(p.theta_prime);
        }
        diag.extend(std::iter::repeat_n(Self::one(-1.0), self.minus_one));
        diag.extend(std::iter::repeat_n(Self::one(1.0), self.plus_one));
        diag
    }

    pub fn lambda_matrix(&self) -> DMatrix<Complex64> {
        let mut l = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(self.diagonal()));
        for p in &self.pairs {
            l[(p.column, p.column + 1)] = p.alpha;
        }
        l
    }
}

fn inner(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

fn norm(x: &[Complex64]) -> f64 {
    x.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

fn scaled(x: &[Complex64], s: Complex64) -> Vector {
    x.iter().map(|a| a * s).collect()
}

/// Orthonormal basis of the null space of `M^T M`, with `M^T M` given
/// through `gram`.
fn null_space(m: usize, gram: impl Fn(usize, usize) -> f64) -> Vec<Vec<f64>> {
    let eig = SymmetricEigen::new(DMatrix::from_fn(m, m, gram));
    (0..m)
        .filter(|&i| eig.eigenvalues[i].abs() < NULL_TOLERANCE)
        .map(|i| eig.eigenvectors.column(i).iter().copied().collect())
        .collect()
}

/// Builds `U` and the block structure of `B`. Requires `N <= cap`.
pub fn build_decomposition(
    graph: &RegularGraph,
    edges: &DirectedEdgeSpace,
    eigen: &AdjacencyEigen,
    cap: usize,
) -> Result<BlockDecomposition> {
    let (n, d) = (graph.n(), graph.d());
    let big_n = edges.len();
    if big_n > cap {
        return Err(Error::SizeCap { size: big_n, cap });
    }
    let gram = eigen.vectors.transpose() * &eigen.vectors;
    let residual = (gram - DMatrix::identity(n, n)).abs().max();
    if residual > 1e-10 {
        return Err(Error::EigenbasisNotOrthonormal(residual));
    }
    let bipartite = graph.is_bipartite();
    let scale = 1.0 / (big_n as f64).sqrt();
    let mut columns: Vec<Vector> = vec![vec![Complex64::new(scale, 0.0); big_n]];
    if let Some(sides) = graph.bipartition() {
        columns.push(
            (0..big_n)
                .map(|e| Complex64::new(if sides[edges.tail(e)] == 0 { scale } else { -scale }, 0.0))
                .collect(),
        );
    }

    let threshold = 2.0 * ((d - 1) as f64).sqrt();
    let nontrivial = 1..n - usize::from(bipartite);
    let mut pairs = Vec::with_capacity(nontrivial.len());
    for i in nontrivial {
        let lambda = eigen.values[i];
        let f = eigen.vectors.column(i);
        let t_op = |x: Complex64| -> Vector { (0..big_n).map(|e| x * f[edges.head(e)] - f[edges.tail(e)]).collect() };
        let jordan = (lambda.abs() - threshold).abs() <= JORDAN_TOLERANCE;
        let (theta, theta_prime) = if jordan {
            let half = Complex64::new(lambda / 2.0, 0.0);
            (half, half)
        } else {
            theta_pair(lambda, d)
        };
        let t_theta = t_op(theta);
        let t_norm = norm(&t_theta);
        let w = scaled(&t_theta, Complex64::new(1.0 / t_norm, 0.0));
        let second = if jordan { t_op(theta + 1.0) } else { t_op(theta_prime) };
        let a = inner(&second, &w);
        let rest: Vector = second.iter().zip(&w).map(|(s, x)| s - a * x).collect();
        let b = norm(&rest);
        let w2 = scaled(&rest, Complex64::new(1.0 / b, 0.0));
        let alpha = if jordan {
            // B T_{1+theta} f = theta T_{1+theta} f + T_theta f
            Complex64::new(t_norm / b, 0.0)
        } else {
            let beta = a / norm(&second);
            beta * (theta_prime - theta) / (1.0 - beta.norm_sqr()).sqrt()
        };
        pairs.push(PairBlock { lambda, theta, theta_prime, alpha, jordan, column: columns.len() });
        columns.push(w);
        columns.push(w2);
    }

    // Undirected edges j = {u, v}, u < v, with directed ids (u, v) and (v, u).
    let undirected: Vec<(usize, usize)> = graph.edges().collect();
    let m = undirected.len();
    let ids: Vec<(usize, usize)> = undirected
        .iter()
        .map(|&(u, v)| (edges.id(u, v).expect("edge exists"), edges.id(v, u).expect("edge exists")))
        .collect();
    // shared endpoint of two distinct edges and its sign under the orientation u -> v
    let incidence = |j: usize, k: usize, signed: bool| -> f64 {
        if j == k {
            return 2.0;
        }
        let (a, b) = undirected[j];
        let (c, e) = undirected[k];
        let sign = |x: usize, ends: (usize, usize)| if x == ends.0 { 1.0 } else { -1.0 };
        for x in [a, b] {
            if x == c || x == e {
                return if signed { sign(x, (a, b)) * sign(x, (c, e)) } else { 1.0 };
            }
        }
        0.0
    };
    let half = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let symmetric = null_space(m, |j, k| incidence(j, k, false));
    let antisymmetric = null_space(m, |j, k| incidence(j, k, true));
    let (minus_one, plus_one) = (symmetric.len(), antisymmetric.len());
    for (basis, sign) in [(&symmetric, 1.0), (&antisymmetric, -1.0)] {
        for c in basis.iter() {
            let mut col = vec![Complex64::new(0.0, 0.0); big_n];
            for (j, &(e1, e2)) in ids.iter().enumerate() {
                col[e1] = half * c[j];
                col[e2] = half * c[j] * sign;
            }
            columns.push(col);
        }
    }
    let dec = BlockDecomposition {
        n,
        d,
        bipartite,
        pairs,
        minus_one,
        plus_one,
        u: DMatrix::from_fn(big_n, columns.len().min(big_n), |r, c| columns[c][r]),
    };
    if columns.len() != big_n || (minus_one, plus_one) != dec.expected_multiplicities() {
        return Err(Error::InvariantViolation(format!(
            "built {} columns with (-1, +1) multiplicities ({minus_one}, {plus_one}); expected {big_n} and {:?}",
            columns.len(),
            dec.expected_multiplicities()
        )));
    }
    Ok(dec)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VerifyTolerances {
    pub similarity: f64,
    pub unitarity: f64,
    pub bass: f64,
    pub alpha: f64,
    pub operator_norm: f64,
}

impl Default for VerifyTolerances {
    fn default() -> Self {
        VerifyTolerances { similarity: 1e-8, unitarity: 1e-10, bass: 1e-6, alpha: 1e-8, operator_norm: 1e-8 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    /// `max |B - U Lambda U^*|`.
    pub similarity_residual: f64,
    /// `max |B U - U Lambda|`.
    pub intertwining_residual: f64,
    /// `max |U^* U - I|`.
    pub unitarity_residual: f64,
    /// `max_e | sum_j |U[e, j]|^2 - 1 |`.
    pub parseval_residual: f64,
    /// Largest distance in the greedy matching of the eigenvalues of `B`
    /// against the predicted multiset (infinite if some stay unmatched).
    pub bass_distance: f64,
    /// `||B||_2`, from the largest eigenvalue of `B B^*`.
    pub operator_norm: f64,
    /// `max_i ||alpha_i| - alpha_exact(lambda_i)|`.
    pub alpha_residual: f64,
    pub max_abs_alpha: f64,
    pub multiplicities: (usize, usize),
    pub expected_multiplicities: (usize, usize),
    pub jordan_blocks: usize,
}

impl VerificationReport {
    /// Name of the first component exceeding its tolerance.
    pub fn failure(&self, d: usize, tol: &VerifyTolerances) -> Option<String> {
        let dm1 = (d - 1) as f64;
        if self.multiplicities != self.expected_multiplicities {
            return Some(format!("multiplicities {:?} != {:?}", self.multiplicities, self.expected_multiplicities));
        }
        let checks = [
            ("similarity", self.similarity_residual, tol.similarity),
            ("unitarity", self.unitarity_residual, tol.unitarity),
            ("bass", self.bass_distance, tol.bass),
            ("operator_norm", (self.operator_norm - dm1).abs(), tol.operator_norm),
            ("alpha", self.alpha_residual, tol.alpha),
        ];
        checks
            .iter()
            .find(|(_, value, limit)| !(value <= limit))
            .map(|(name, value, limit)| format!("{name} residual {value:e} exceeds {limit:e}"))
    }
}

/// Greedy matching within `tol`; returns the largest matched distance, or
/// infinity if some expected value has no partner.
fn match_multisets(expected: &[Complex64], computed: &[Complex64], tol: f64) -> f64 {
    if expected.len() != computed.len() {
        return f64::INFINITY;
    }
    let mut used = vec![false; computed.len()];
    let mut worst: f64 = 0.0;
    for x in expected {
        let best = computed
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .map(|(i, y)| (i, (x - y).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1));
        match best {
            Some((i, dist)) if dist <= tol => {
                used[i] = true;
                worst = worst.max(dist);
            }
            _ => return f64::INFINITY,
        }
    }
    worst
}

/// Eigenvalues of a general real matrix via the real Schur form. The QR
/// sweep can stall at machine precision on the highly degenerate spectra of
/// `B`, so the deflation threshold is relaxed step by step.
fn general_eigenvalues(m: &DMatrix<f64>) -> Option<Vec<Complex64>> {
    let max_iter = 50 * m.nrows().max(1);
    [1.0, 4.0, 16.0, 64.0].iter().find_map(|&k| {
        Schur::try_new(m.clone(), k * f64::EPSILON, max_iter)
            .map(|schur| schur.complex_eigenvalues().iter().copied().collect())
    })
}

/// Residuals of the decomposition against the dense operator.
pub fn measure_decomposition(b_dense: &DMatrix<f64>, dec: &BlockDecomposition, bass_tol: f64) -> VerificationReport {
    let big_n = b_dense.nrows();
    let b_c = b_dense.map(|x| Complex64::new(x, 0.0));
    let u = &dec.u;
    let ul = u * dec.lambda_matrix();
    let max_abs = |m: DMatrix<Complex64>| m.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let similarity_residual = max_abs(&b_c - &ul * u.adjoint());
    let intertwining_residual = max_abs(&b_c * u - &ul);
    let unitarity_residual = max_abs(u.adjoint() * u - DMatrix::identity(big_n, big_n));
    let parseval_residual = (0..big_n)
        .map(|r| (u.row(r).iter().map(|z| z.norm_sqr()).sum::<f64>() - 1.0).abs())
        .fold(0.0, f64::max);
    let bass_distance = match general_eigenvalues(b_dense) {
        Some(computed) => match_multisets(&dec.diagonal(), &computed, bass_tol),
        None => f64::INFINITY,
    };
    let operator_norm = (b_dense * b_dense.transpose())
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .fold(0.0, f64::max)
        .sqrt();
    let alpha_residual =
        dec.pairs.iter().map(|p| (p.alpha.norm() - alpha_exact(p.lambda, dec.d)).abs()).fold(0.0, f64::max);
    let max_abs_alpha = dec.pairs.iter().map(|p| p.alpha.norm()).fold(0.0, f64::max);
    VerificationReport {
        similarity_residual,
        intertwining_residual,
        unitarity_residual,
        parseval_residual,
        bass_distance,
        operator_norm,
        alpha_residual,
        max_abs_alpha,
        multiplicities: (dec.minus_one, dec.plus_one),
        expected_multiplicities: dec.expected_multiplicities(),
        jordan_blocks: dec.pairs.iter().filter(|p| p.jordan).count(),
    }
}

/// [`measure_decomposition`], failing with the first violated component.
pub fn verify_decomposition(
    b_dense: &DMatrix<f64>,
    dec: &BlockDecomposition,
    tol: &VerifyTolerances,
) -> Result<VerificationReport> {
    let report = measure_decomposition(b_dense, dec, tol.bass);
    match report.failure(dec.d, tol) {
        Some(msg) => Err(Error::VerificationFailed(msg)),
        None => Ok(report),
    }
}

/// Dense `B` for a graph, convenience for verification.
pub fn dense_b(edges: &DirectedEdgeSpace, cap: usize) -> Result<DMatrix<f64>> {
    build_b(edges).dense(cap)
}
