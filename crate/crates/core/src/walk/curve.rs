use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::distance::{lp_distance, tv_distance};
use super::kernel::{Evolution, Kernel};
use super::vector::{stationary, ProbabilityVector};
use crate::error::{Error, Result};
use crate::export::{Cell, Table};
use crate::graph::{DirectedEdgeSpace, RegularGraph};
use crate::scalar::Real;
use crate::theory::PExponent;

/// Walk selection for a mixing curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WalkSpec {
    pub kernel: Kernel,
    /// Replace the time-`t` law by the average of the time-`t` and time-`t+1`
    /// laws of the pure chain, and compare against the full uniform measure.
    pub lazy_first_step: bool,
}

impl WalkSpec {
    pub fn plain(kernel: Kernel) -> Self {
        WalkSpec { kernel, lazy_first_step: false }
    }

    pub fn lazy(kernel: Kernel) -> Self {
        WalkSpec { kernel, lazy_first_step: true }
    }
}

/// Stationary reference used at a given time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reference {
    Uniform,
    /// Uniform on the parity class with this side.
    Parity(u8),
}

/// Distances to stationarity of one start state, at times `0..=t_max`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MixingCurve<T> {
    pub walk: WalkSpec,
    pub start: usize,
    pub p_list: Vec<PExponent>,
    pub d_tv: Vec<T>,
    /// `d_p[i][t]` is the distance in `L^{p_list[i]}`.
    pub d_p: Vec<Vec<T>>,
    pub d_inf: Vec<T>,
    pub references: Vec<Reference>,
}

/// Which distance a threshold applies to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Metric {
    Tv,
    Lp(PExponent),
}

impl<T: Real> MixingCurve<T> {
    pub fn t_max(&self) -> usize {
        self.d_tv.len() - 1
    }

    /// The column for `metric`, if the curve recorded it.
    pub fn column(&self, metric: Metric) -> Option<Vec<T>> {
        match metric {
            Metric::Tv => Some(self.d_tv.clone()),
            Metric::Lp(PExponent::Infinite) => Some(self.d_inf.clone()),
            Metric::Lp(p) => match self.p_list.iter().position(|&q| q == p) {
                Some(i) => Some(self.d_p[i].clone()),
                None if p == PExponent::Finite(1.0) => Some(self.d_tv.iter().map(|&x| x + x).collect()),
                None => None,
            },
        }
    }

    pub fn to_table(&self, provenance_json: &str) -> Table {
        let mut columns = vec!["t".to_string(), "d_tv".to_string()];
        columns.extend(self.p_list.iter().map(|p| format!("d_{p}")));
        columns.push("d_inf".into());
        let rows = (0..self.d_tv.len())
            .map(|t| {
                let mut row = vec![Cell::Int(t as i64), Cell::Float(self.d_tv[t].to_f64_lossy())];
                row.extend(self.d_p.iter().map(|col| Cell::Float(col[t].to_f64_lossy())));
                row.push(Cell::Float(self.d_inf[t].to_f64_lossy()));
                row
            })
            .collect();
        let kernel = match (self.walk.kernel, self.walk.lazy_first_step) {
            (Kernel::Srw, false) => "srw",
            (Kernel::Nbrw, false) => "nbrw",
            (Kernel::Srw, true) => "srw_lazy_first_step",
            (Kernel::Nbrw, true) => "nbrw_lazy_first_step",
        };
        Table {
            meta: vec![
                ("kernel".into(), kernel.into()),
                ("start".into(), self.start.to_string()),
                ("graph".into(), provenance_json.into()),
            ],
            columns,
            rows,
        }
    }
}

fn start_side(graph: &RegularGraph, kernel: Kernel, start: usize) -> Option<u8> {
    let vertex = match kernel {
        Kernel::Srw => start,
        Kernel::Nbrw => start / graph.d(),
    };
    graph.side(vertex)
}

/// Evolves the walk from `start` (a vertex for the simple walk, a directed
/// edge id for the nonbacktracking walk) and records every requested
/// distance at every time up to `t_max`.
///
/// On bipartite graphs the plain walk is compared with the uniform measure on
/// the parity class it occupies at each time.
pub fn mixing_curve<T: Real>(
    graph: &RegularGraph,
    edges: &DirectedEdgeSpace,
    walk: WalkSpec,
    start: usize,
    t_max: usize,
    p_list: &[PExponent],
) -> Result<MixingCurve<T>> {
    for p in p_list {
        if let PExponent::Finite(x) = *p {
            if !(x >= 1.0) {
                return Err(Error::POutOfRange(x));
            }
        }
    }
    let space = walk.kernel.space();
    let len = space.size(graph);
    let init = ProbabilityVector::<T>::point_mass(space, len, start)?.into_values();
    let side = start_side(graph, walk.kernel, start);
    let uniform = stationary::<T>(space, graph, None)?.into_values();
    let parity_refs = match side {
        Some(_) if !walk.lazy_first_step => Some([
            stationary::<T>(space, graph, Some(0))?.into_values(),
            stationary::<T>(space, graph, Some(1))?.into_values(),
        ]),
        _ => None,
    };

    let mut evo = Evolution::new(graph, edges, walk.kernel, init);
    let mut prev: Option<Vec<T>> = None;
    if walk.lazy_first_step {
        prev = Some(evo.current().to_vec());
        evo.advance();
    }
    let mut curve = MixingCurve {
        walk,
        start,
        p_list: p_list.to_vec(),
        d_tv: Vec::with_capacity(t_max + 1),
        d_p: vec![Vec::with_capacity(t_max + 1); p_list.len()],
        d_inf: Vec::with_capacity(t_max + 1),
        references: Vec::with_capacity(t_max + 1),
    };
    let half = T::lit(0.5);
    for t in 0..=t_max {
        let averaged: Vec<T>;
        let dist: &[T] = match &prev {
            Some(p) => {
                averaged = p.iter().zip(evo.current()).map(|(&a, &b)| half * (a + b)).collect();
                &averaged
            }
            None => evo.current(),
        };
        let (reference, tag) = match (&parity_refs, side) {
            (Some(refs), Some(s)) => {
                let parity = ((s as usize + t) % 2) as u8;
                (&refs[parity as usize], Reference::Parity(parity))
            }
            _ => (&uniform, Reference::Uniform),
        };
        curve.d_tv.push(tv_distance(dist, reference));
        for (i, &p) in p_list.iter().enumerate() {
            curve.d_p[i].push(lp_distance(dist, reference, p));
        }
        curve.d_inf.push(lp_distance(dist, reference, PExponent::Infinite));
        curve.references.push(tag);
        if t < t_max {
            if let Some(p) = prev.as_mut() {
                p.copy_from_slice(evo.current());
            }
            evo.advance();
        }
    }
    Ok(curve)
}

/// First index with `values[t] <= eps`.
pub fn first_crossing<T: Real>(values: &[T], eps: T) -> Option<usize> {
    values.iter().position(|&v| v <= eps)
}

/// Smallest recorded `t` with distance at most `eps` under `metric`.
pub fn mixing_time<T: Real>(curve: &MixingCurve<T>, eps: T, metric: Metric) -> Result<usize> {
    let column = curve
        .column(metric)
        .ok_or_else(|| Error::BadParams(format!("curve does not record {metric:?}")))?;
    first_crossing(&column, eps).ok_or(Error::NotReached(curve.t_max()))
}

/// Start states for a worst-case maximum: all of them when `len <= exhaustive`,
/// otherwise `sample_size` distinct states drawn with the given seed, sorted.
pub fn start_sample(len: usize, exhaustive: usize, sample_size: usize, seed: u64) -> Vec<usize> {
    if len <= exhaustive || sample_size >= len {
        return (0..len).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut starts = sample(&mut rng, len, sample_size).into_vec();
    starts.sort_unstable();
    starts
}

/// Exhaustive-start cap and default sample size for worst-case maxima.
pub const EXHAUSTIVE_STARTS: usize = 2000;
pub const DEFAULT_START_SAMPLE: usize = 16;
