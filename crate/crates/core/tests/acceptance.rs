//! End-to-end acceptance suite. Each criterion prints one PASS/FAIL line
//! plus indented diagnostics; the process exits non-zero if any fail.

mod common;

use std::time::Instant;

use num_rational::BigRational;
use num_traits::One;

use common::{lps_5_29, small_graphs, Named};
use ramlab::graph::{diameter_volume_lower_bound, distance_profile, graph_metrics, validate_and_index};
use ramlab::spectral::{
    adjacency_eigen, adjacency_spectrum, build_decomposition, certify, dense_b, measure_decomposition,
    nbrw_l2_bound, nbrw_l2_constant, nbrw_l2_threshold_time, upsilon_l2_transitive, CertifyConfig,
    VerifyTolerances, DENSE_CAP,
};
use ramlab::theory::{
    cutoff_prediction, diameter_bounds, grid_minimize, l1_l2_gap, lp_lower_bound, lp_prediction,
    nbrw_tmix_lower, normal_sf, PExponent,
};
use ramlab::walk::{
    empirical_cutoff_profile, mixing_curve, radial_moments, srw_mixture_residual, start_sample, stationary, step,
    tilted_return_ratios, total_variation, distance_to_stationarity, tree_radial, Kernel, ProbabilityVector,
    WalkSpec,
};
use ramlab::{DirectedEdgeSpace, ExactTreeRadialTable, RegularGraph};

struct Outcome {
    pass: bool,
    summary: String,
    notes: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, summary: impl Into<String>, notes: Vec<String>) -> Self {
        Outcome { pass, summary: summary.into(), notes }
    }
}

/// Distances from a point mass to the uniform measure at `t = 0..=t_max`,
/// with no parity correction on bipartite graphs. Column 0 is total
/// variation, then one column per exponent.
fn uniform_reference_curve(
    graph: &RegularGraph,
    edges: &DirectedEdgeSpace,
    kernel: Kernel,
    start: usize,
    t_max: usize,
    ps: &[PExponent],
) -> Vec<Vec<f64>> {
    let space = kernel.space();
    let len = space.size(graph);
    let uniform = stationary::<f64>(space, graph, None).unwrap();
    let mut dist = ProbabilityVector::<f64>::point_mass(space, len, start).unwrap();
    let mut cols = vec![Vec::with_capacity(t_max + 1); ps.len() + 1];
    for t in 0..=t_max {
        cols[0].push(total_variation(&dist, &uniform).unwrap());
        for (i, &p) in ps.iter().enumerate() {
            cols[i + 1].push(distance_to_stationarity(&dist, &uniform, p).unwrap());
        }
        if t < t_max {
            dist = step(graph, edges, kernel, &dist).unwrap();
        }
    }
    cols
}

fn decomposition_exactness(graphs: &[Named]) -> Outcome {
    let tol = VerifyTolerances::default();
    let mut pass = true;
    let mut notes = Vec::new();
    for g in graphs {
        let edges = validate_and_index(&g.graph).unwrap();
        let eigen = adjacency_eigen(&g.graph, DENSE_CAP).unwrap();
        let dec = build_decomposition(&g.graph, &edges, &eigen, DENSE_CAP).unwrap();
        let b = dense_b(&edges, DENSE_CAP).unwrap();
        let report = measure_decomposition(&b, &dec, tol.bass);
        let failure = report.failure(g.graph.d(), &tol);
        pass &= failure.is_none();
        notes.push(format!(
            "{}: N={} sim={:.2e} unit={:.2e} bass={:.2e} alpha={:.2e} mult={:?}/{:?}{}",
            g.label,
            edges.len(),
            report.similarity_residual,
            report.unitarity_residual,
            report.bass_distance,
            report.alpha_residual,
            report.multiplicities,
            report.expected_multiplicities,
            failure.map(|f| format!(" FAILED: {f}")).unwrap_or_default()
        ));
    }
    Outcome::new(pass, format!("{} graphs", graphs.len()), notes)
}

fn mixture_identity(graphs: &[Named]) -> Outcome {
    let mut worst = 0.0f64;
    let mut notes = Vec::new();
    for g in graphs.iter().filter(|g| g.graph.n() <= 5000) {
        let edges = validate_and_index(&g.graph).unwrap();
        let mut graph_worst = 0.0f64;
        for x in start_sample(g.graph.n(), 10, 3, 11) {
            for t in 0..=30 {
                let r: f64 = srw_mixture_residual(&g.graph, &edges, x, t).unwrap();
                graph_worst = graph_worst.max(r);
            }
        }
        notes.push(format!("{}: max residual {graph_worst:.2e}", g.label));
        worst = worst.max(graph_worst);
    }
    Outcome::new(worst <= 1e-11, format!("max sup-norm residual {worst:.2e} (limit 1e-11)"), notes)
}

fn nbrw_l2_on_lps(lps: &RegularGraph) -> Outcome {
    let edges = validate_and_index(lps).unwrap();
    let (n, d) = (lps.n(), lps.d());
    let starts = start_sample(edges.len(), 0, 6, 3);
    let mut worst = vec![0.0f64; 31];
    for &s in &starts {
        let curve =
            mixing_curve::<f64>(lps, &edges, WalkSpec::plain(Kernel::Nbrw), s, 30, &[PExponent::Finite(2.0)]).unwrap();
        for t in 0..=30 {
            worst[t] = worst[t].max(curve.d_p[0][t] * curve.d_p[0][t]);
        }
    }
    let mut pass = true;
    let mut notes = Vec::new();
    let mut tightest = f64::INFINITY;
    for t in 1..=30 {
        let bound = nbrw_l2_bound(n, d, t);
        pass &= worst[t] <= bound;
        tightest = tightest.min(bound - worst[t]);
    }
    notes.push(format!("smallest slack over 1..=30: {tightest:.3e}"));
    let ln_n = (n as f64).ln();
    let target = nbrw_l2_constant(d) / ln_n;
    let t_formula = nbrw_l2_threshold_time(n, d) as usize;
    for t in [t_formula, 9] {
        let ok = worst[t] <= target;
        pass &= ok;
        notes.push(format!("t={t}: measured {:.3e} vs c(d)/ln n = {target:.4} {}", worst[t], if ok { "ok" } else { "exceeded" }));
    }
    Outcome::new(pass, format!("N={} starts={} threshold time {t_formula}", edges.len(), starts.len()), notes)
}

fn cutoff_profile_on_lps(lps: &RegularGraph) -> Outcome {
    let edges = validate_and_index(lps).unwrap();
    let starts = start_sample(lps.n(), 0, 4, 5);
    let s_grid = [-2.0, -1.0, 0.0, 1.0, 2.0];
    let samples = empirical_cutoff_profile(lps, &edges, &starts, &s_grid).unwrap();
    let cut = cutoff_prediction::<f64>(lps.n(), lps.d());
    let mut worst = 0.0f64;
    let mut notes = vec![format!("t_star={:.4} window={:.4} c_d={:.4}", cut.t_star, cut.window, cut.profile_constant)];
    for p in &samples {
        let oracle = normal_sf(cut.profile_constant * p.s);
        let dev = (p.empirical - oracle).abs();
        worst = worst.max(dev);
        notes.push(format!("s={:+} t={} D_tv={:.4} P(Z>c s)={:.4} dev={:.4}", p.s, p.t, p.empirical, oracle, dev));
    }
    Outcome::new(worst <= 0.1, format!("max deviation {worst:.4} (limit 0.1)"), notes)
}

fn nbrw_lower_bound(graphs: &[(String, RegularGraph)]) -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for (label, graph) in graphs {
        let edges = validate_and_index(graph).unwrap();
        let starts = start_sample(edges.len(), 300, 6, 13);
        let t_max = 60;
        let curves: Vec<Vec<f64>> = starts
            .iter()
            .map(|&s| uniform_reference_curve(graph, &edges, Kernel::Nbrw, s, t_max, &[]).swap_remove(0))
            .collect();
        for eps in [0.2, 0.5] {
            let bound = nbrw_tmix_lower(graph.n(), graph.d(), eps);
            // earliest crossing over all starts; never crossing counts as infinite
            let earliest = curves.iter().filter_map(|c| c.iter().position(|&v| v <= 1.0 - eps)).min();
            let ok = earliest.is_none_or(|t| t as i64 >= bound);
            pass &= ok;
            notes.push(format!(
                "{label} eps={eps}: bound {bound}, earliest crossing {}",
                earliest.map(|t| t.to_string()).unwrap_or_else(|| format!(">{t_max}"))
            ));
        }
    }
    Outcome::new(pass, format!("{} graphs", graphs.len()), notes)
}

fn distance_profile_on_lps(lps: &RegularGraph) -> Outcome {
    let (n, d) = (lps.n(), lps.d());
    let base = ((d - 1) as f64).ln();
    let radius = 3.0 * (n as f64).ln().ln() / base;
    let mut worst = 0.0f64;
    for x in start_sample(n, 0, 10, 17) {
        worst = worst.max(distance_profile(lps, x, radius).unwrap().exceedance_fraction());
    }
    let metrics = graph_metrics(lps).unwrap();
    let spectrum = adjacency_spectrum(lps, DENSE_CAP).unwrap();
    let lambda = spectrum.max_nontrivial;
    let bounds = diameter_bounds(n, d, lambda).unwrap();
    let lower = diameter_volume_lower_bound(n, d);
    let diam = metrics.diameter;
    let pass = worst <= 0.05 && (diam as i64) <= bounds.cfm && bounds.cfm == 13 && diam as f64 >= lower;
    Outcome::new(
        pass,
        format!("exceedance {worst:.4}, diameter {diam} in [{lower:.3}, cfm {}]", bounds.cfm),
        vec![format!(
            "window radius {radius:.4}, lambda {lambda:.6}, chung {}, alon-milman {:.2}, girth {}",
            bounds.chung, bounds.alon_milman, metrics.girth
        )],
    )
}

fn transitive_l2_formula() -> Outcome {
    let petersen = ramlab::builders::named::petersen();
    let edges = validate_and_index(&petersen).unwrap();
    let report = adjacency_spectrum(&petersen, DENSE_CAP).unwrap();
    let mut pass = true;
    let mut notes = Vec::new();
    for eps in [0.5, 0.1, 0.01] {
        let check = upsilon_l2_transitive(&petersen, &edges, &report, eps).unwrap();
        pass &= check.matches;
        notes.push(format!(
            "eps={eps}: closed form {} measured {} (exact spectral average {}, Upsilon={:.4})",
            check.predicted, check.measured, check.spectral_average, check.upsilon_at_log_n
        ));
    }
    Outcome::new(pass, "Petersen", notes)
}

fn lp_theory() -> Outcome {
    let mut notes = Vec::new();
    let n = 12180;
    let mut continuity = 0.0f64;
    let mut grid_gap = 0.0f64;
    let mut limit_gap = 0.0f64;
    for d in 3..=12 {
        let at_two = lp_prediction::<f64>(PExponent::Finite(2.0), d, n).unwrap();
        let below = lp_prediction::<f64>(PExponent::Finite(2.0 - 1e-12), d, n).unwrap();
        let base = ((d - 1) as f64).ln();
        // lower-regime formula evaluated at p = 2 against the upper regime
        let lower_formula = at_two.c_dp * (n as f64).ln() / base;
        continuity = continuity.max((lower_formula - at_two.location).abs()).max((below.location - at_two.location).abs());
        for p in [1.1, 1.3, 1.5, 1.8, 1.95] {
            let pred = lp_prediction::<f64>(PExponent::Finite(p), d, n).unwrap();
            let alpha = (d - 1) as f64 / d as f64;
            let grid = grid_minimize(|b| pred.objective(b), 0.5, alpha);
            grid_gap = grid_gap.max((grid - pred.beta_star).abs());
        }
        let near_one = lp_prediction::<f64>(PExponent::Finite(1.0001), d, n).unwrap();
        limit_gap = limit_gap.max((near_one.c_dp - d as f64 / (d - 2) as f64).abs());
    }
    let min_f = (3..=50).map(|d| l1_l2_gap(d as f64).f).fold(f64::INFINITY, f64::min);
    notes.push(format!("continuity gap {continuity:.2e} (limit 1e-9)"));
    notes.push(format!("grid vs closed-form beta gap {grid_gap:.2e} (limit 1e-6)"));
    notes.push(format!("|c(d,1.0001) - d/(d-2)| max {limit_gap:.2e} (limit 1e-2)"));
    notes.push(format!("min f(d) over 3..=50: {min_f:.4e}"));
    let pass = continuity <= 1e-9 && grid_gap <= 1e-6 && limit_gap <= 1e-2 && min_f > 0.0;
    Outcome::new(pass, "d in 3..=12", notes)
}

fn tree_oracle() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for d in [3usize, 4, 6] {
        let table: ExactTreeRadialTable = tree_radial::<BigRational>(d, 4);
        let df = BigRational::from_integer(d.into());
        let q2 = BigRational::one() / df.clone();
        let q4 = (BigRational::from_integer((2 * d - 1).into())) / (df.clone() * df.clone() * df);
        let exact = table.return_probability(1) == q2 && table.return_probability(2) == q4;
        pass &= exact;

        let t = 2000usize;
        let ratio = tilted_return_ratios(d, t)[t] * (t as f64).powf(1.5);
        let rho = 2.0 * ((d - 1) as f64).sqrt() / d as f64;
        let stated = 2.0 * rho * rho / ((1.0 - rho * rho) * std::f64::consts::PI.sqrt());
        let generating = (d * (d - 1)) as f64 / (((d - 2) * (d - 2)) as f64 * std::f64::consts::PI.sqrt());
        let asym_ok = ((ratio - stated) / stated).abs() <= 0.02;
        pass &= asym_ok;

        let big_t = 10_000usize;
        let (mean, var) = radial_moments(d, big_t);
        let drift = (d - 2) as f64 / d as f64 * big_t as f64;
        let spread = 4.0 * (d - 1) as f64 / (d * d) as f64 * big_t as f64;
        let mean_rel = ((mean - drift) / drift).abs();
        let var_rel = ((var - spread) / spread).abs();
        pass &= mean_rel <= 5e-3 && var_rel <= 5e-3;

        notes.push(format!(
            "d={d}: Q^2={} Q^4={} exact={exact}",
            table.return_probability(1),
            table.return_probability(2)
        ));
        notes.push(format!(
            "d={d}: Q^(2t) rho^(-2t) t^1.5 at t={t} = {ratio:.5}; constant 2rho^2/((1-rho^2)sqrt(pi)) = {stated:.5} ({}); \
             generating-function constant d(d-1)/((d-2)^2 sqrt(pi)) = {generating:.5} (rel {:.2e})",
            if asym_ok { "ok" } else { "off" },
            ((ratio - generating) / generating).abs()
        ));
        notes.push(format!(
            "d={d}: radial mean rel err {mean_rel:.2e}, variance rel err {var_rel:.2e} at t={big_t}"
        ));
    }
    Outcome::new(pass, "d in {3,4,6}", notes)
}

fn lp_dominance(graphs: &[(String, RegularGraph)]) -> Outcome {
    let lower_ps = [PExponent::Finite(1.5), PExponent::Finite(2.0), PExponent::Finite(3.0), PExponent::Infinite];
    let upper_ps = [PExponent::Finite(2.0), PExponent::Finite(4.0), PExponent::Infinite];
    let t_max = 15;
    let mut pass = true;
    let mut notes = Vec::new();
    for (label, graph) in graphs {
        let (n, d) = (graph.n(), graph.d());
        let edges = validate_and_index(graph).unwrap();
        let report = adjacency_spectrum(graph, DENSE_CAP).unwrap();
        let ramanujan = !graph.is_bipartite() && certify(&report, &CertifyConfig::default()).is_ramanujan();
        let starts = start_sample(n, 200, 4, 19);
        let rho = 2.0 * ((d - 1) as f64).sqrt() / d as f64;
        let mut lower_slack = f64::INFINITY;
        let mut upper_slack = f64::INFINITY;
        for &x in &starts {
            let all: Vec<PExponent> = lower_ps.iter().chain(&upper_ps).copied().collect();
            let cols = uniform_reference_curve(graph, &edges, Kernel::Srw, x, t_max, &all);
            for t in 0..=t_max {
                for (i, &p) in lower_ps.iter().enumerate() {
                    let measured = cols[i + 1][t];
                    let lower: f64 = lp_lower_bound(n, d, p, t);
                    lower_slack = lower_slack.min(measured - lower + 1e-9 * measured.abs().max(1.0));
                }
                if ramanujan {
                    for (i, &p) in upper_ps.iter().enumerate() {
                        let measured = cols[lower_ps.len() + i + 1][t];
                        let upper = (n as f64).powf(p.conjugate_ratio()) * rho.powi(t as i32);
                        upper_slack = upper_slack.min(upper - measured + 1e-9 * upper.max(1.0));
                    }
                }
            }
        }
        let ok = lower_slack >= 0.0 && (!ramanujan || upper_slack >= 0.0);
        pass &= ok;
        notes.push(format!(
            "{label}: lower slack {lower_slack:.3e}{}",
            if ramanujan { format!(", certified Ramanujan, upper slack {upper_slack:.3e}") } else { String::new() }
        ));
    }
    Outcome::new(pass, format!("{} graphs, t <= {t_max}", graphs.len()), notes)
}

fn main() {
    let small = small_graphs();
    let lps = lps_5_29();
    let mut with_lps: Vec<(String, RegularGraph)> = small.iter().map(|g| (g.label.clone(), g.graph.clone())).collect();
    with_lps.push(("LPS(5,29)".to_string(), lps.clone()));

    let criteria: Vec<(u32, &str, Box<dyn Fn() -> Outcome>)> = vec![
        (1, "decomposition exactness", Box::new(|| decomposition_exactness(&small))),
        (2, "SRW mixture identity", Box::new(|| mixture_identity(&small))),
        (3, "NBRW L2 bound on LPS(5,29)", Box::new(|| nbrw_l2_on_lps(&lps))),
        (4, "cutoff profile on LPS(5,29)", Box::new(|| cutoff_profile_on_lps(&lps))),
        (5, "NBRW mixing lower bound", Box::new(|| nbrw_lower_bound(&with_lps))),
        (6, "distance profile on LPS(5,29)", Box::new(|| distance_profile_on_lps(&lps))),
        (7, "transitive L2 formula on Petersen", Box::new(transitive_l2_formula)),
        (8, "L^p theory consistency", Box::new(lp_theory)),
        (9, "tree oracle", Box::new(tree_oracle)),
        (10, "L^p dominance chain", Box::new(|| lp_dominance(&with_lps))),
    ];

    let mut failed = Vec::new();
    for (id, name, run) in &criteria {
        let clock = Instant::now();
        let outcome = run();
        let secs = clock.elapsed().as_secs_f64();
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {verdict} {name}: {} [{secs:.1}s]", outcome.summary);
        for note in &outcome.notes {
            println!("      {note}");
        }
        if !outcome.pass {
            failed.push(*id);
        }
    }
    let passed = criteria.len() - failed.len();
    println!("acceptance: {passed}/{} criteria passed", criteria.len());
    if !failed.is_empty() {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
