//! Random regular graphs from the configuration model.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::RETRY_BUDGET;
use crate::error::{Error, Result};
use crate::graph::{Provenance, RegularGraph};

/// Consecutive rejected pairs after which a pairing is abandoned as stuck.
const STUCK_LIMIT: usize = 10_000;

/// Pairs the `n d` half-edges uniformly at random, rejecting any pair that
/// would close a loop or duplicate an edge. `None` if the pairing gets stuck.
fn pair_half_edges(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(usize, usize)>> {
    let mut points: Vec<usize> = (0..n).flat_map(|u| std::iter::repeat_n(u, d)).collect();
    let mut edges = Vec::with_capacity(n * d / 2);
    let mut present = HashSet::with_capacity(n * d);
    let mut rejected = 0;
    while !points.is_empty() {
        let i = rng.random_range(0..points.len());
        let mut j = rng.random_range(0..points.len() - 1);
        if j >= i {
            j += 1;
        }
        let (u, v) = (points[i].min(points[j]), points[i].max(points[j]));
        if u == v || present.contains(&(u, v)) {
            rejected += 1;
            if rejected > STUCK_LIMIT {
                return None;
            }
            continue;
        }
        rejected = 0;
        present.insert((u, v));
        edges.push((u, v));
        let (hi, lo) = (i.max(j), i.min(j));
        points.swap_remove(hi);
        points.swap_remove(lo);
    }
    Some(edges)
}

/// A simple connected `d`-regular graph on `n` vertices; attempt `i` uses
/// seed `seed + i`.
pub fn build_random_regular_with_budget(n: usize, d: usize, seed: u64, budget: usize) -> Result<RegularGraph> {
    if d < 3 {
        return Err(Error::DegreeTooSmall(d));
    }
    if n <= d || (n * d) % 2 != 0 {
        return Err(Error::BadParams(format!("need n > d and n d even, got n = {n}, d = {d}")));
    }
    for attempt in 0..budget {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt as u64));
        let Some(edges) = pair_half_edges(n, d, &mut rng) else { continue };
        let provenance = Provenance::RandomRegular { n, d, seed, attempt };
        match RegularGraph::from_edges(n, &edges, provenance) {
            Ok(g) => return Ok(g),
            Err(Error::Disconnected) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::SamplingExhausted(budget))
}

pub fn build_random_regular(n: usize, d: usize, seed: u64) -> Result<RegularGraph> {
    build_random_regular_with_budget(n, d, seed, RETRY_BUDGET)
}
