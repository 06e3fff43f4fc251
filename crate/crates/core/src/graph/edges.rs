use std::ops::Range;

use super::RegularGraph;
use crate::error::{Error, Result};

/// Indexing of the `N = d n` directed edges of a regular graph.
///
/// The directed edge `(u, v)` gets id `d*u + r` where `r` is the rank of `v`
/// in the sorted neighbor list of `u`, so the head of edge `e` is simply the
/// `e`-th entry of the flattened adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedEdgeSpace {
    d: usize,
    heads: Vec<usize>,
    rev: Vec<usize>,
}

impl DirectedEdgeSpace {
    pub fn len(&self) -> usize {
        self.heads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heads.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn num_vertices(&self) -> usize {
        self.heads.len() / self.d
    }

    pub fn tail(&self, e: usize) -> usize {
        e / self.d
    }

    pub fn head(&self, e: usize) -> usize {
        self.heads[e]
    }

    /// The reversed edge: `(u, v) -> (v, u)`.
    pub fn rev(&self, e: usize) -> usize {
        self.rev[e]
    }

    pub fn reversal(&self) -> &[usize] {
        &self.rev
    }

    /// Ids of the `d` edges leaving `u`.
    pub fn out_edges(&self, u: usize) -> Range<usize> {
        u * self.d..(u + 1) * self.d
    }

    /// Id of the directed edge `(u, v)`, if it exists.
    pub fn id(&self, u: usize, v: usize) -> Option<usize> {
        let out = self.out_edges(u);
        self.heads[out.clone()].binary_search(&v).ok().map(|r| out.start + r)
    }
}

/// Re-checks the regular-graph invariants and builds the edge indexing.
pub fn validate_and_index(graph: &RegularGraph) -> Result<DirectedEdgeSpace> {
    let (n, d) = (graph.n(), graph.d());
    let heads = graph.adjacency().to_vec();
    if heads.len() != n * d {
        return Err(Error::IrregularGraph { vertex: 0, expected: d, found: heads.len() / n.max(1) });
    }
    let mut rev = vec![usize::MAX; n * d];
    for u in 0..n {
        for (r, &v) in graph.neighbors(u).iter().enumerate() {
            if v == u {
                return Err(Error::SelfLoop(u));
            }
            let back = graph.neighbors(v).binary_search(&u).map_err(|_| Error::Asymmetric(u, v))?;
            rev[d * u + r] = d * v + back;
        }
    }
    Ok(DirectedEdgeSpace { d, heads, rev })
}
