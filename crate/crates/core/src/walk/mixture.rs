//! The simple walk as a mixture of projected nonbacktracking walks.
//!
//! Conditioned on its distance `k` from the start in the universal cover,
//! the simple walk is uniform on the `k`-sphere of the tree, so
//! `P^t(x, .) = sum_k P(|X_t| = k) mu_k(x, .)` where `mu_k` is the head of
//! the nonbacktracking walk started uniformly on the edges out of `x`, after
//! `k - 1` steps.

use super::kernel::{Evolution, Kernel};
use super::tree::radial_row;
use super::vector::{ProbabilityVector, Space};
use crate::error::{Error, Result};
use crate::graph::{DirectedEdgeSpace, RegularGraph};
use crate::scalar::Real;

fn project_heads<T: Real>(edges: &DirectedEdgeSpace, n: usize, dist: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); n];
    for (e, &m) in dist.iter().enumerate() {
        out[edges.head(e)] = out[edges.head(e)] + m;
    }
    out
}

/// Calls `visit(k, mu_k)` for `k = 0..=k_max`.
fn for_each_projection<T: Real>(
    graph: &RegularGraph,
    edges: &DirectedEdgeSpace,
    x: usize,
    k_max: usize,
    mut visit: impl FnMut(usize, &[T]),
) -> Result<()> {
    let n = graph.n();
    if x >= n {
        return Err(Error::VertexOutOfRange(x, n));
    }
    let mut delta = vec![T::zero(); n];
    delta[x] = T::one();
    visit(0, &delta);
    if k_max == 0 {
        return Ok(());
    }
    let mut start = vec![T::zero(); edges.len()];
    let w = T::one() / T::from_count(graph.d());
    for e in edges.out_edges(x) {
        start[e] = w;
    }
    let mut evo = Evolution::new(graph, edges, Kernel::Nbrw, start);
    for k in 1..=k_max {
        visit(k, &project_heads(edges, n, evo.current()));
        if k < k_max {
            evo.advance();
        }
    }
    Ok(())
}

/// Law of the head vertex after `k` nonbacktracking steps from `x`
/// (`k = 0` is the point mass at `x`).
pub fn nbrw_projected<T: Real>(
    graph: &RegularGraph,
    edges: &DirectedEdgeSpace,
    x: usize,
    k: usize,
) -> Result<ProbabilityVector<T>> {
    let mut out = Vec::new();
    for_each_projection::<T>(graph, edges, x, k, |j, mu| {
        if j == k {
            out = mu.to_vec();
        }
    })?;
    Ok(ProbabilityVector::from_raw(Space::Vertices, out))
}

/// Sup-norm gap between `P^t(x, .)` evolved directly and its mixture
/// representation.
pub fn srw_mixture_residual<T: Real>(graph: &RegularGraph, edges: &DirectedEdgeSpace, x: usize, t: usize) -> Result<T> {
    let n = graph.n();
    let radial = radial_row::<T>(graph.d(), t);
    let mut mixture = vec![T::zero(); n];
    for_each_projection::<T>(graph, edges, x, t, |k, mu| {
        let w = radial[k];
        if w > T::zero() {
            mixture.iter_mut().zip(mu).for_each(|(m, &v)| *m = *m + w * v);
        }
    })?;
    let start = ProbabilityVector::<T>::point_mass(Space::Vertices, n, x)?.into_values();
    let mut evo = Evolution::new(graph, edges, Kernel::Srw, start);
    for _ in 0..t {
        evo.advance();
    }
    Ok(evo
        .current()
        .iter()
        .zip(&mixture)
        .map(|(&a, &b)| (a - b).abs())
        .fold(T::zero(), T::max))
}
