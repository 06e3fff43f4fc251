//! Random `n`-lifts: each base edge becomes a uniform perfect matching
//! between the two fibers.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::RETRY_BUDGET;
use crate::error::{Error, Result};
use crate::graph::{Provenance, RegularGraph};

#[derive(Debug, Clone)]
pub struct LiftSpec {
    pub base: RegularGraph,
    /// Fiber size.
    pub cover: usize,
    pub seed: u64,
}

/// Vertex `(u, i)` of the lift (base vertex `u`, fiber index `i`) gets id
/// `u * cover + i`, so the covering map is `id / cover`.
pub fn build_random_lift(spec: &LiftSpec) -> Result<RegularGraph> {
    let base = &spec.base;
    let cover = spec.cover;
    if cover == 0 {
        return Err(Error::BadParams("cover number must be positive".into()));
    }
    if let Some(u) = (0..base.n()).find(|&u| base.has_edge(u, u)) {
        return Err(Error::BaseHasSelfLoop(u));
    }
    let base_edges: Vec<_> = base.edges().collect();
    for attempt in 0..RETRY_BUDGET {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed.wrapping_add(attempt as u64));
        let mut perm: Vec<usize> = (0..cover).collect();
        let mut edges = Vec::with_capacity(base_edges.len() * cover);
        for &(u, v) in &base_edges {
            perm.shuffle(&mut rng);
            edges.extend(perm.iter().enumerate().map(|(i, &j)| (u * cover + i, v * cover + j)));
        }
        let provenance = Provenance::RandomLift {
            base: Box::new(base.provenance().clone()),
            cover,
            seed: spec.seed,
            attempt,
        };
        match RegularGraph::from_edges(base.n() * cover, &edges, provenance) {
            Ok(g) => return Ok(g),
            Err(Error::Disconnected) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Disconnected)
}

/// Whether `phi` is a covering map from `lift` onto `base`: a homomorphism
/// that is bijective on every neighborhood.
pub fn is_covering_map(lift: &RegularGraph, base: &RegularGraph, phi: impl Fn(usize) -> usize) -> bool {
    if lift.d() != base.d() {
        return false;
    }
    (0..lift.n()).all(|x| {
        let fx = phi(x);
        if fx >= base.n() {
            return false;
        }
        let mut image: Vec<usize> = lift.neighbors(x).iter().map(|&y| phi(y)).collect();
        image.sort_unstable();
        image == base.neighbors(fx)
    })
}
