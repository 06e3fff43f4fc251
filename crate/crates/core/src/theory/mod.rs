//! Closed-form cutoff locations, profiles, L^p mixing predictions and
//! diameter bounds for `d`-regular graphs on `n` vertices.

mod bounds;
mod cutoff;
mod lp;
mod normal;

pub use bounds::{
    diameter_bounds, l1_l2_gap, nbrw_tmix_lower, weakly_adjusted_time, DiameterBounds, L1L2Gap,
};
pub use cutoff::{cutoff_prediction, profile_value, srw_lower_profile, CutoffPrediction, LowerProfile};
pub use lp::{
    grid_minimize, lp_lower_bound, lp_prediction, relative_entropy, LpPrediction, PExponent,
};
pub use normal::{normal_cdf, normal_sf};

use serde_json::{json, Map, Value};

use crate::error::Result;

/// Predictions for `(n, d)` keyed by formula name, ready to be joined with
/// measurements. `p` adds the L^p block, `lambda` the diameter bounds.
pub fn predictions_json(n: usize, d: usize, p: Option<PExponent>, lambda: Option<f64>) -> Result<Value> {
    let cut = cutoff_prediction::<f64>(n, d);
    let mut out = Map::new();
    out.insert("n".into(), json!(n));
    out.insert("d".into(), json!(d));
    out.insert("t_star".into(), json!(cut.t_star));
    out.insert("window".into(), json!(cut.window));
    out.insert("c_d".into(), json!(cut.profile_constant));
    out.insert("rho".into(), json!(cut.rho));
    out.insert("half_log_inv_rho_n".into(), json!(cut.l2_location()));
    out.insert("nbrw_tmix_lower_eps_0_2".into(), json!(nbrw_tmix_lower(n, d, 0.2)));
    out.insert("weakly_adjusted_time_0".into(), json!(weakly_adjusted_time(n, d, 0.0)));
    let gap = l1_l2_gap(d as f64);
    out.insert("l1_l2_gap".into(), json!(gap.f));
    out.insert("l1_l2_location_ratio".into(), json!(gap.location_ratio));
    if let Some(p) = p {
        let lp = lp_prediction::<f64>(p, d, n)?;
        out.insert("p".into(), json!(p.to_string()));
        out.insert("beta_star".into(), json!(lp.beta_star));
        out.insert("c_dp".into(), json!(lp.c_dp));
        out.insert("lp_location".into(), json!(lp.location));
    }
    if let Some(lambda) = lambda {
        let b = diameter_bounds(n, d, lambda)?;
        out.insert("lambda".into(), json!(lambda));
        out.insert("alon_milman_bound".into(), json!(b.alon_milman));
        out.insert("chung_bound".into(), json!(b.chung));
        out.insert("cfm_bound".into(), json!(b.cfm));
    }
    Ok(Value::Object(out))
}
