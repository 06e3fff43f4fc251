use rayon::prelude::*;
use serde::Serialize;

use super::curve::{mixing_curve, WalkSpec};
use super::kernel::Kernel;
use crate::error::Result;
use crate::export::{Cell, Table};
use crate::graph::{DirectedEdgeSpace, RegularGraph};
use crate::theory::cutoff_prediction;

/// Worst measured total-variation distance inside the cutoff window against
/// the Gaussian prediction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProfileSample {
    pub s: f64,
    pub t: usize,
    pub empirical: f64,
    pub predicted: f64,
}

/// For each `s`, the maximum over `starts` of the simple walk's
/// total-variation distance at `t = round(t_star + s window)`.
pub fn empirical_cutoff_profile(
    graph: &RegularGraph,
    edges: &DirectedEdgeSpace,
    starts: &[usize],
    s_grid: &[f64],
) -> Result<Vec<ProfileSample>> {
    let cut = cutoff_prediction::<f64>(graph.n(), graph.d());
    let times: Vec<usize> = s_grid.iter().map(|&s| cut.time_at(s).round().max(0.0) as usize).collect();
    let t_max = times.iter().copied().max().unwrap_or(0);
    let curves = starts
        .par_iter()
        .map(|&x| mixing_curve::<f64>(graph, edges, WalkSpec::plain(Kernel::Srw), x, t_max, &[]))
        .collect::<Result<Vec<_>>>()?;
    Ok(s_grid
        .iter()
        .zip(&times)
        .map(|(&s, &t)| ProfileSample {
            s,
            t,
            empirical: curves.iter().map(|c| c.d_tv[t]).fold(0.0, f64::max),
            predicted: cut.profile(s),
        })
        .collect())
}

pub fn profile_table(samples: &[ProfileSample], meta: Vec<(String, String)>) -> Table {
    Table {
        meta,
        columns: ["s", "t", "empirical", "predicted"].map(String::from).to_vec(),
        rows: samples
            .iter()
            .map(|p| vec![Cell::Float(p.s), Cell::Int(p.t as i64), Cell::Float(p.empirical), Cell::Float(p.predicted)])
            .collect(),
    }
}
