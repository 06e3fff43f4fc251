use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use super::RegularGraph;
use crate::error::{Error, Result};

const UNSEEN: usize = usize::MAX;

/// Exact shortest-path distances from `x`.
pub fn bfs_distances(graph: &RegularGraph, x: usize) -> Result<Vec<usize>> {
    if x >= graph.n() {
        return Err(Error::VertexOutOfRange(x, graph.n()));
    }
    let mut dist = vec![UNSEEN; graph.n()];
    let mut queue = VecDeque::with_capacity(graph.n());
    dist[x] = 0;
    queue.push_back(x);
    while let Some(u) = queue.pop_front() {
        for &v in graph.neighbors(u) {
            if dist[v] == UNSEEN {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    if dist.contains(&UNSEEN) {
        return Err(Error::Disconnected);
    }
    Ok(dist)
}

/// Histogram of distances from a source, with window-exceedance count around
/// `log_{d-1} n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceProfile {
    pub source: usize,
    pub histogram: Vec<usize>,
    /// Lower median of the distance distribution.
    pub median: usize,
    pub window_radius: f64,
    /// Number of `y` with `|dist(x,y) - log_{d-1} n| > window_radius`.
    pub exceedance: usize,
}

impl DistanceProfile {
    pub fn exceedance_fraction(&self) -> f64 {
        self.exceedance as f64 / self.histogram.iter().sum::<usize>() as f64
    }
}

pub fn distance_profile(graph: &RegularGraph, x: usize, window_radius: f64) -> Result<DistanceProfile> {
    if !(window_radius >= 0.0) {
        return Err(Error::BadParams(format!("window radius {window_radius} must be >= 0")));
    }
    let dist = bfs_distances(graph, x)?;
    let max = dist.iter().copied().max().unwrap_or(0);
    let mut histogram = vec![0usize; max + 1];
    for &l in &dist {
        histogram[l] += 1;
    }
    let n = graph.n();
    let mut cumulative = 0;
    let mut median = 0;
    for (l, &c) in histogram.iter().enumerate() {
        cumulative += c;
        if 2 * cumulative >= n {
            median = l;
            break;
        }
    }
    let center = (n as f64).ln() / ((graph.d() - 1) as f64).ln();
    let exceedance = histogram
        .iter()
        .enumerate()
        .filter(|&(l, _)| (l as f64 - center).abs() > window_radius)
        .map(|(_, &c)| c)
        .sum();
    Ok(DistanceProfile { source: x, histogram, median, window_radius, exceedance })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    pub diameter: usize,
    pub girth: usize,
    pub bipartite: bool,
}

/// Eccentricity of every vertex via all-pairs BFS, parallel over sources.
pub fn all_eccentricities(graph: &RegularGraph) -> Result<Vec<usize>> {
    (0..graph.n())
        .into_par_iter()
        .map(|x| bfs_distances(graph, x).map(|d| d.into_iter().max().unwrap_or(0)))
        .collect()
}

/// Length of the shortest cycle, by BFS from every root truncated once no
/// shorter cycle can be found.
pub fn girth(graph: &RegularGraph) -> usize {
    (0..graph.n())
        .into_par_iter()
        .map(|root| shortest_cycle_through_ball(graph, root))
        .min()
        .unwrap_or(usize::MAX)
}

fn shortest_cycle_through_ball(graph: &RegularGraph, root: usize) -> usize {
    let mut dist = vec![UNSEEN; graph.n()];
    let mut parent = vec![UNSEEN; graph.n()];
    let mut queue = VecDeque::from([root]);
    dist[root] = 0;
    let mut best = usize::MAX;
    while let Some(u) = queue.pop_front() {
        if 2 * dist[u] + 1 >= best {
            break;
        }
        for &v in graph.neighbors(u) {
            if dist[v] == UNSEEN {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            } else if parent[u] != v {
                best = best.min(dist[u] + dist[v] + 1);
            }
        }
    }
    best
}

pub fn graph_metrics(graph: &RegularGraph) -> Result<GraphMetrics> {
    let diameter = all_eccentricities(graph)?.into_iter().max().unwrap_or(0);
    Ok(GraphMetrics { diameter, girth: girth(graph), bipartite: graph.is_bipartite() })
}

/// Ball-volume lower bound on the diameter of a `d`-regular graph on `n`
/// vertices: `log_{d-1}((n-1)(d-2)/d + 1) - 1`.
pub fn diameter_volume_lower_bound(n: usize, d: usize) -> f64 {
    let (n, d) = (n as f64, d as f64);
    ((n - 1.0) * (d - 2.0) / d + 1.0).ln() / (d - 1.0).ln() - 1.0
}
