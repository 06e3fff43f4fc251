//! Immutable regular graphs, the directed-edge state space, and BFS metrics.

mod edges;
pub mod io;
mod metrics;
mod provenance;

pub use edges::{validate_and_index, DirectedEdgeSpace};
pub use metrics::{
    all_eccentricities, bfs_distances, diameter_volume_lower_bound, distance_profile, girth,
    graph_metrics, DistanceProfile, GraphMetrics,
};
pub use provenance::{LpsGroup, Provenance};

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A connected simple `d`-regular graph with `d >= 3`, stored in compressed
/// row form with each neighbor list sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularGraph {
    n: usize,
    d: usize,
    neighbors: Vec<usize>,
    /// Side (0 or 1) of every vertex when the graph is bipartite.
    bipartition: Option<Vec<u8>>,
    provenance: Provenance,
}

impl RegularGraph {
    /// Builds a graph from per-vertex neighbor lists, checking every invariant.
    pub fn from_adjacency(mut lists: Vec<Vec<usize>>, provenance: Provenance) -> Result<Self> {
        let n = lists.len();
        if n == 0 {
            return Err(Error::BadParams("graph has no vertices".into()));
        }
        let d = lists[0].len();
        if d < 3 {
            return Err(Error::DegreeTooSmall(d));
        }
        for (u, list) in lists.iter_mut().enumerate() {
            if list.len() != d {
                return Err(Error::IrregularGraph { vertex: u, expected: d, found: list.len() });
            }
            list.sort_unstable();
            for (i, &v) in list.iter().enumerate() {
                if v >= n {
                    return Err(Error::VertexOutOfRange(v, n));
                }
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                if i > 0 && list[i - 1] == v {
                    return Err(Error::ParallelEdge(u, v));
                }
            }
        }
        for (u, list) in lists.iter().enumerate() {
            for &v in list {
                if lists[v].binary_search(&u).is_err() {
                    return Err(Error::Asymmetric(u, v));
                }
            }
        }
        let neighbors: Vec<usize> = lists.into_iter().flatten().collect();
        let mut graph = RegularGraph { n, d, neighbors, bipartition: None, provenance };
        graph.bipartition = graph.two_coloring()?;
        Ok(graph)
    }

    /// Builds a graph on `n` vertices from an undirected edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)], provenance: Provenance) -> Result<Self> {
        let mut lists = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            lists[u].push(v);
            lists[v].push(u);
        }
        Self::from_adjacency(lists, provenance)
    }

    /// BFS 2-coloring; `Err(Disconnected)` if some vertex is unreachable.
    fn two_coloring(&self) -> Result<Option<Vec<u8>>> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = VecDeque::from([0usize]);
        color[0] = 0;
        let mut seen = 1;
        let mut bipartite = true;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    seen += 1;
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    bipartite = false;
                }
            }
        }
        if seen != self.n {
            return Err(Error::Disconnected);
        }
        Ok(bipartite.then_some(color))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of directed edges, `d * n`.
    pub fn num_directed_edges(&self) -> usize {
        self.n * self.d
    }

    pub fn num_edges(&self) -> usize {
        self.n * self.d / 2
    }

    /// Sorted neighbor list of `u`.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[u * self.d..(u + 1) * self.d]
    }

    /// Flattened adjacency: entry `d*u + r` is the `r`-th neighbor of `u`.
    pub fn adjacency(&self) -> &[usize] {
        &self.neighbors
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }

    /// Side of `u` in the bipartition (the side of vertex 0 is 0).
    pub fn side(&self, u: usize) -> Option<u8> {
        self.bipartition.as_ref().map(|c| c[u])
    }

    pub fn bipartition(&self) -> Option<&[u8]> {
        self.bipartition.as_deref()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    /// Undirected edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u).iter().filter(move |&&v| v > u).map(move |&v| (u, v))
        })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }
}
