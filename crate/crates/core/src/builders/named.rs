//! Small named graphs.

use crate::error::{Error, Result};
use crate::graph::{Provenance, RegularGraph};

fn named(name: String) -> Provenance {
    Provenance::Named { name }
}

/// The complete graph `K_k` (degree `k - 1`).
pub fn complete(k: usize) -> Result<RegularGraph> {
    let edges: Vec<_> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
    RegularGraph::from_edges(k, &edges, named(format!("complete({k})")))
}

/// The complete bipartite graph `K_{k,k}` (degree `k`), sides `0..k` and `k..2k`.
pub fn complete_bipartite(k: usize) -> Result<RegularGraph> {
    let edges: Vec<_> = (0..k).flat_map(|u| (k..2 * k).map(move |v| (u, v))).collect();
    RegularGraph::from_edges(2 * k, &edges, named(format!("complete_bipartite({k})")))
}

/// The Petersen graph: outer 5-cycle, spokes, inner pentagram.
pub fn petersen() -> RegularGraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    RegularGraph::from_edges(10, &edges, named("petersen".into())).expect("petersen is 3-regular")
}

/// Parses `complete(k)`, `complete_bipartite(k)`, `petersen` or `cycle[(k)]`.
pub fn build_named(name: &str) -> Result<RegularGraph> {
    let name = name.trim();
    let (head, arg) = match name.split_once('(') {
        Some((h, rest)) => {
            let arg = rest.strip_suffix(')').ok_or_else(|| Error::UnknownName(name.into()))?;
            let k: usize = arg.trim().parse().map_err(|_| Error::UnknownName(name.into()))?;
            (h.trim(), Some(k))
        }
        None => (name, None),
    };
    match (head, arg) {
        ("complete", Some(k)) => complete(k),
        ("complete_bipartite", Some(k)) => complete_bipartite(k),
        ("petersen", None) => Ok(petersen()),
        ("cycle", _) => Err(Error::DegreeTooSmall(2)),
        _ => Err(Error::UnknownName(name.into())),
    }
}
