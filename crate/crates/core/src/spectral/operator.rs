//! The nonbacktracking operator and the scalar identities attached to its
//! 2x2 blocks.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::DirectedEdgeSpace;
use crate::scalar::ceil_tol;

/// `B[(u,v),(x,y)] = 1` iff `v = x` and `y != u`, applied matrix-free.
#[derive(Debug, Clone, Copy)]
pub struct NonBacktracking<'a> {
    edges: &'a DirectedEdgeSpace,
}

pub fn build_b(edges: &DirectedEdgeSpace) -> NonBacktracking<'_> {
    NonBacktracking { edges }
}

impl<'a> NonBacktracking<'a> {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Successors of `e = (u, v)`: the edges `(v, w)` with `w != u`.
    pub fn successors(&self, e: usize) -> impl Iterator<Item = usize> + 'a {
        let edges = self.edges;
        let back = edges.rev(e);
        edges.out_edges(edges.head(e)).filter(move |&f| f != back)
    }

    /// `(B x)(e) = sum over successors f of x(f)`.
    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        (0..self.len()).map(|e| self.successors(e).map(|f| x[f]).sum()).collect()
    }

    pub fn apply_real(&self, x: &[f64]) -> Vec<f64> {
        (0..self.len()).map(|e| self.successors(e).map(|f| x[f]).sum()).collect()
    }

    pub fn dense(&self, cap: usize) -> Result<DMatrix<f64>> {
        let n = self.len();
        if n > cap {
            return Err(Error::SizeCap { size: n, cap });
        }
        let mut b = DMatrix::zeros(n, n);
        for e in 0..n {
            for f in self.successors(e) {
                b[(e, f)] = 1.0;
            }
        }
        Ok(b)
    }

    /// `(B B^*)[e, f]`: `d-1` on the diagonal, `d-2` for a common head and
    /// different tails, 0 otherwise.
    pub fn gram_entry(&self, e: usize, f: usize) -> usize {
        let d = self.edges.degree();
        if self.edges.head(e) != self.edges.head(f) {
            0
        } else if e == f {
            d - 1
        } else {
            d - 2
        }
    }
}

/// Roots of `theta^2 - lambda theta + (d - 1) = 0`, larger real part first
/// (then larger imaginary part).
pub fn theta_pair(lambda: f64, d: usize) -> (Complex64, Complex64) {
    let disc = Complex64::new(lambda * lambda - 4.0 * (d - 1) as f64, 0.0).sqrt();
    let a = (lambda + disc) / 2.0;
    let b = (lambda - disc) / 2.0;
    let key = |z: Complex64| (z.re, z.im);
    if key(a) >= key(b) {
        (a, b)
    } else {
        (b, a)
    }
}

/// Exact `|alpha|` of the block attached to a nontrivial eigenvalue.
pub fn alpha_exact(lambda: f64, d: usize) -> f64 {
    let df = d as f64;
    if (lambda + df).abs() < 1e-12 {
        0.0
    } else if lambda.abs() <= 2.0 * (df - 1.0).sqrt() {
        df - 2.0
    } else {
        (df * df - lambda * lambda).max(0.0).sqrt()
    }
}

/// `alpha sum_{j<t} theta^j conj(theta)^{t-1-j}` in closed form (zero at `t = 0`).
pub fn gamma(theta: Complex64, alpha: Complex64, t: usize) -> Complex64 {
    if t == 0 {
        return Complex64::new(0.0, 0.0);
    }
    let bar = theta.conj();
    let gap = bar - theta;
    if gap.norm() <= 1e-12 * theta.norm().max(1.0) {
        alpha * t as f64 * theta.powu(t as u32 - 1)
    } else {
        alpha * (bar.powu(t as u32) - theta.powu(t as u32)) / gap
    }
}

/// `2 d n (d-1)^{-t} (4(d-1) t^2 + 1)`, an upper bound on the squared L^2
/// distance of the nonbacktracking walk on a non-bipartite Ramanujan graph.
pub fn nbrw_l2_bound(n: usize, d: usize, t: usize) -> f64 {
    let b = (d - 1) as f64;
    let tf = t as f64;
    2.0 * (d * n) as f64 * b.powf(-tf) * (4.0 * b * tf * tf + 1.0)
}

/// `ceil(log_{d-1} n + 3 log_{d-1} ln n)`.
pub fn nbrw_l2_threshold_time(n: usize, d: usize) -> i64 {
    let lb = ((d - 1) as f64).ln();
    let nf = n as f64;
    ceil_tol(nf.ln() / lb + 3.0 * nf.ln().ln() / lb)
}

/// `8(d-1) / ln^2(d-1) + 1`.
pub fn nbrw_l2_constant(d: usize) -> f64 {
    let b = (d - 1) as f64;
    8.0 * b / (b.ln() * b.ln()) + 1.0
}
