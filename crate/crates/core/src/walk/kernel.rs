use rayon::prelude::*;
use serde::Serialize;

use super::vector::{ProbabilityVector, Space};
use crate::error::Result;
use crate::graph::{DirectedEdgeSpace, RegularGraph};
use crate::scalar::Real;

/// Below this many states a step runs sequentially.
const PARALLEL_THRESHOLD: usize = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kernel {
    /// Simple random walk on vertices.
    Srw,
    /// Nonbacktracking walk on directed edges.
    Nbrw,
}

impl Kernel {
    pub fn space(self) -> Space {
        match self {
            Kernel::Srw => Space::Vertices,
            Kernel::Nbrw => Space::DirectedEdges,
        }
    }
}

fn fill<T: Real>(out: &mut [T], f: impl Fn(usize) -> T + Sync) {
    if out.len() >= PARALLEL_THRESHOLD {
        out.par_iter_mut().enumerate().for_each(|(i, x)| *x = f(i));
    } else {
        out.iter_mut().enumerate().for_each(|(i, x)| *x = f(i));
    }
}

/// Pulls one step of the kernel from `cur` into `next`.
/// Mean of `values`; a constant input returns its value exactly, so uniform
/// measures are fixed points without rounding drift.
fn neighbor_mean<T: Real>(mut values: impl Iterator<Item = T>, inv: T) -> T {
    let Some(first) = values.next() else {
        return T::zero();
    };
    let (sum, constant) = values.fold((first, true), |(s, c), x| (s + x, c && x == first));
    if constant {
        first
    } else {
        sum * inv
    }
}

pub(crate) fn advance<T: Real>(graph: &RegularGraph, edges: &DirectedEdgeSpace, kernel: Kernel, cur: &[T], next: &mut [T]) {
    let d = graph.d();
    match kernel {
        Kernel::Srw => {
            let inv = T::one() / T::from_count(d);
            fill(next, |v| neighbor_mean(graph.neighbors(v).iter().map(|&u| cur[u]), inv));
        }
        Kernel::Nbrw => {
            // Edge f = (v, z) collects mass from every (u, v) with u != z;
            // (u, v) is the reversal of the out-edge (v, u).
            let inv = T::one() / T::from_count(d - 1);
            fill(next, |f| {
                let v = edges.tail(f);
                neighbor_mean(edges.out_edges(v).filter(|&g| g != f).map(|g| cur[edges.rev(g)]), inv)
            });
        }
    }
}

/// One application of the simple walk `P` or of `B/(d-1)`.
pub fn step<T: Real>(
    graph: &RegularGraph,
    edges: &DirectedEdgeSpace,
    kernel: Kernel,
    dist: &ProbabilityVector<T>,
) -> Result<ProbabilityVector<T>> {
    let space = kernel.space();
    dist.check_space(space, space.size(graph))?;
    let mut next = vec![T::zero(); dist.len()];
    advance(graph, edges, kernel, dist.values(), &mut next);
    Ok(ProbabilityVector::from_raw(space, next))
}

/// Iterates a kernel from a starting distribution, yielding times 0, 1, ...
pub(crate) struct Evolution<'a, T> {
    graph: &'a RegularGraph,
    edges: &'a DirectedEdgeSpace,
    kernel: Kernel,
    cur: Vec<T>,
    next: Vec<T>,
}

impl<'a, T: Real> Evolution<'a, T> {
    pub(crate) fn new(graph: &'a RegularGraph, edges: &'a DirectedEdgeSpace, kernel: Kernel, start: Vec<T>) -> Self {
        let next = vec![T::zero(); start.len()];
        Evolution { graph, edges, kernel, cur: start, next }
    }

    pub(crate) fn current(&self) -> &[T] {
        &self.cur
    }

    pub(crate) fn advance(&mut self) {
        advance(self.graph, self.edges, self.kernel, &self.cur, &mut self.next);
        std::mem::swap(&mut self.cur, &mut self.next);
    }
}
