//! Exact evolution of simple and nonbacktracking walk distributions and
//! their distances to stationarity.

mod curve;
mod distance;
mod kernel;
mod mixture;
mod profile;
mod tree;
mod vector;

pub use curve::{
    first_crossing, mixing_curve, mixing_time, start_sample, Metric, MixingCurve, Reference, WalkSpec,
    DEFAULT_START_SAMPLE, EXHAUSTIVE_STARTS,
};
pub use distance::{distance_to_stationarity, l2_distance_by_expansion, total_variation};
pub use kernel::{step, Kernel};
pub use mixture::{nbrw_projected, srw_mixture_residual};
pub use profile::{empirical_cutoff_profile, profile_table, ProfileSample};
pub use tree::{
    radial_lp_norm, radial_moments, radial_row, radial_step, reflection_ratio_range, tilted_return_ratios,
    tree_lp_norm, tree_radial, TreeRadialTable,
};
pub use vector::{stationary, ProbabilityVector, Space};
