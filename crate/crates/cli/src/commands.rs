use rayon::prelude::*;
use serde_json::{json, Value};

use ramlab::builders::io;
use ramlab::export::{Cell, Table};
use ramlab::graph::{diameter_volume_lower_bound, distance_profile, graph_metrics, validate_and_index};
use ramlab::spectral::{
    adjacency_eigen, adjacency_spectrum, alpha_exact, build_decomposition, certify, dense_b, measure_decomposition,
    ramanujan_bound, CertifyConfig, SpectrumReport, VerifyTolerances, CERTIFICATION_TOLERANCE,
};
use ramlab::theory::{cutoff_prediction, predictions_json, PExponent};
use ramlab::walk::{
    empirical_cutoff_profile, first_crossing, mixing_curve, profile_table, start_sample, tree_radial, Kernel,
    MixingCurve, WalkSpec, EXHAUSTIVE_STARTS,
};
use ramlab::{Error, ExactTreeRadialTable, RegularGraph, Result, TreeRadialTable64};

use crate::args::{
    DecomposeCmd, GraphCmd, GraphSource, KernelArg, MetricsCmd, MixCmd, Output, ProfileCmd, SpectrumCmd, TheoryCmd,
    TreeCmd,
};
use crate::output::Run;
use crate::source::load_graph;

fn start_run(command: &'static str, out: &Output, config: Value, graph: Option<&RegularGraph>) -> Result<Run> {
    Run::new(command, out.out.clone(), config, graph.map(|g| g.provenance().to_json()))
}

fn source_config(src: &GraphSource) -> Value {
    serde_json::to_value(src).expect("graph source serializes")
}

pub fn build(cmd: &GraphCmd) -> Result<String> {
    let graph = load_graph(&cmd.source)?;
    let config = json!({ "source": source_config(&cmd.source), "out": cmd.output.out });
    let mut run = start_run("build", &cmd.output, config, Some(&graph))?;
    io::save(&graph, &run.path("graph.edges"))?;
    run.record_existing("graph.edges")?;
    run.record_existing("graph.edges.json")?;
    run.finish()
}

pub fn metrics(cmd: &MetricsCmd) -> Result<String> {
    let graph = load_graph(&cmd.source)?;
    let (n, d) = (graph.n(), graph.d());
    let window = cmd.window.unwrap_or(3.0 * (n as f64).ln().ln() / ((d - 1) as f64).ln());
    let config = json!({
        "source": source_config(&cmd.source),
        "out": cmd.output.out,
        "sources": cmd.sources,
        "window": window,
    });
    let mut run = start_run("metrics", &cmd.output, config, Some(&graph))?;
    let m = graph_metrics(&graph)?;
    let profiles = start_sample(n, 0, cmd.sources, cmd.source.seed)
        .into_iter()
        .map(|x| distance_profile(&graph, x, window))
        .collect::<Result<Vec<_>>>()?;
    let worst = profiles.iter().map(|p| p.exceedance_fraction()).fold(0.0, f64::max);
    run.write_json(
        "metrics.json",
        json!({
            "n": n,
            "d": d,
            "diameter": m.diameter,
            "girth": m.girth,
            "bipartite": m.bipartite,
            "diameter_lower_bound": diameter_volume_lower_bound(n, d),
            "max_exceedance_fraction": worst,
            "profiles": profiles,
        }),
    )?;
    run.finish()
}

fn exponents(cmd: &MixCmd) -> Result<Vec<PExponent>> {
    let mut ps = match cmd.pmax {
        Some(pmax) => (2..=pmax).map(|p| PExponent::Finite(p as f64)).collect(),
        None if cmd.lp.is_empty() => vec![PExponent::Finite(2.0)],
        None => cmd.lp.iter().map(|s| s.parse()).collect::<Result<Vec<PExponent>>>()?,
    };
    // the sup-norm distance is always recorded
    ps.retain(|p| *p != PExponent::Infinite);
    ps.dedup();
    Ok(ps)
}

fn kernel(arg: KernelArg) -> Kernel {
    match arg {
        KernelArg::Srw => Kernel::Srw,
        KernelArg::Nbrw => Kernel::Nbrw,
    }
}

/// Pointwise maximum over starts of every recorded column.
fn worst_case(curves: &[MixingCurve<f64>], provenance: &str, kernel_name: &str) -> Table {
    let first = &curves[0];
    let mut table = first.to_table(provenance);
    for (t, row) in table.rows.iter_mut().enumerate() {
        let mut values = vec![curves.iter().map(|c| c.d_tv[t]).fold(0.0, f64::max)];
        for i in 0..first.p_list.len() {
            values.push(curves.iter().map(|c| c.d_p[i][t]).fold(0.0, f64::max));
        }
        values.push(curves.iter().map(|c| c.d_inf[t]).fold(0.0, f64::max));
        for (cell, v) in row.iter_mut().skip(1).zip(values) {
            *cell = Cell::Float(v);
        }
    }
    table.meta = vec![
        ("kernel".into(), kernel_name.into()),
        ("starts".into(), curves.len().to_string()),
        ("graph".into(), provenance.into()),
    ];
    table
}

pub fn mix(cmd: &MixCmd) -> Result<String> {
    let graph = load_graph(&cmd.source)?;
    let edges = validate_and_index(&graph)?;
    let ps = exponents(cmd)?;
    let walk = WalkSpec { kernel: kernel(cmd.kernel), lazy_first_step: cmd.lazy_first_step };
    let len = walk.kernel.space().size(&graph);
    let starts = match cmd.start {
        Some(s) => vec![s],
        None => start_sample(len, EXHAUSTIVE_STARTS, cmd.starts, cmd.source.seed),
    };
    let config = json!({
        "source": source_config(&cmd.source),
        "out": cmd.output.out,
        "kernel": cmd.kernel,
        "lazy_first_step": cmd.lazy_first_step,
        "p_list": ps,
        "t_max": cmd.tmax,
        "eps": cmd.eps,
        "start": cmd.start,
        "start_sample": cmd.starts,
        "exhaustive_starts": EXHAUSTIVE_STARTS,
        "starts_used": starts.len(),
    });
    let mut run = start_run("mix", &cmd.output, config, Some(&graph))?;
    let curves = starts
        .par_iter()
        .map(|&s| mixing_curve::<f64>(&graph, &edges, walk, s, cmd.tmax, &ps))
        .collect::<Result<Vec<_>>>()?;
    let provenance = graph.provenance().to_json();
    let table = if curves.len() == 1 {
        curves[0].to_table(&provenance)
    } else {
        let base = match cmd.kernel {
            KernelArg::Srw => "srw",
            KernelArg::Nbrw => "nbrw",
        };
        let name = if cmd.lazy_first_step { format!("{base}_lazy_first_step") } else { base.to_string() };
        worst_case(&curves, &provenance, &name)
    };
    if let Some(eps) = cmd.eps {
        let mut times = serde_json::Map::new();
        for (j, column) in table.columns.iter().enumerate().skip(1) {
            let values: Vec<f64> = table
                .rows
                .iter()
                .map(|r| match r[j] {
                    Cell::Float(x) => x,
                    _ => unreachable!("distance columns are floats"),
                })
                .collect();
            times.insert(column.clone(), json!(first_crossing(&values, eps)));
        }
        run.write_json("mixing_times.json", json!({ "eps": eps, "first_crossing": times }))?;
    }
    run.write_table("mix.csv", table)?;
    run.finish()
}

pub fn profile(cmd: &ProfileCmd) -> Result<String> {
    let graph = load_graph(&cmd.source)?;
    let edges = validate_and_index(&graph)?;
    let starts = start_sample(graph.n(), EXHAUSTIVE_STARTS, cmd.starts, cmd.source.seed);
    let config = json!({
        "source": source_config(&cmd.source),
        "out": cmd.output.out,
        "s": cmd.s,
        "start_sample": cmd.starts,
        "exhaustive_starts": EXHAUSTIVE_STARTS,
        "starts_used": starts.len(),
    });
    let mut run = start_run("profile", &cmd.output, config, Some(&graph))?;
    let samples = empirical_cutoff_profile(&graph, &edges, &starts, &cmd.s)?;
    let cut = cutoff_prediction::<f64>(graph.n(), graph.d());
    let meta = vec![
        ("t_star".into(), ramlab::export::format_float(cut.t_star)),
        ("window".into(), ramlab::export::format_float(cut.window)),
        ("c_d".into(), ramlab::export::format_float(cut.profile_constant)),
        ("graph".into(), graph.provenance().to_json()),
    ];
    run.write_table("profile.csv", profile_table(&samples, meta))?;
    run.finish()
}

fn certify_config(cmd: &SpectrumCmd) -> CertifyConfig {
    CertifyConfig { delta_threshold: cmd.delta, exceptional_budget: cmd.exceptions, gap_floor: cmd.gap_floor }
}

fn spectrum_config(cmd: &SpectrumCmd) -> Value {
    json!({
        "source": source_config(&cmd.source),
        "out": cmd.output.out,
        "dense_cap": cmd.dense_cap,
        "certify": certify_config(cmd),
        "certification_tolerance": CERTIFICATION_TOLERANCE,
    })
}

fn certificate_json(report: &SpectrumReport, config: &CertifyConfig) -> Value {
    json!({
        "certificate": certify(report, config),
        "n": report.n,
        "d": report.d,
        "bipartite": report.bipartite,
        "partial": report.partial,
        "max_nontrivial": report.max_nontrivial,
        "ramanujan_bound": ramanujan_bound(report.d),
        "weak_margin": report.weak_margin,
        "exceptional": report.exceptional,
    })
}

pub fn spectrum(cmd: &SpectrumCmd) -> Result<String> {
    let graph = load_graph(&cmd.source)?;
    let mut run = start_run("spectrum", &cmd.output, spectrum_config(cmd), Some(&graph))?;
    let report = adjacency_spectrum(&graph, cmd.dense_cap)?;
    run.write_table("spectrum.csv", report.to_table())?;
    run.write_json("certificate.json", certificate_json(&report, &certify_config(cmd)))?;
    run.finish()
}

pub fn certify_cmd(cmd: &SpectrumCmd) -> Result<String> {
    let graph = load_graph(&cmd.source)?;
    let mut run = start_run("certify", &cmd.output, spectrum_config(cmd), Some(&graph))?;
    let report = adjacency_spectrum(&graph, cmd.dense_cap)?;
    run.write_json("certificate.json", certificate_json(&report, &certify_config(cmd)))?;
    run.finish()
}

pub fn decompose(cmd: &DecomposeCmd) -> Result<String> {
    let graph = load_graph(&cmd.source)?;
    let tol = VerifyTolerances::default();
    let config = json!({
        "source": source_config(&cmd.source),
        "out": cmd.output.out,
        "dense_cap": cmd.dense_cap,
        "tolerances": tol,
    });
    let mut run = start_run("decompose", &cmd.output, config, Some(&graph))?;
    let edges = validate_and_index(&graph)?;
    let eigen = adjacency_eigen(&graph, cmd.dense_cap)?;
    let dec = build_decomposition(&graph, &edges, &eigen, cmd.dense_cap)?;
    let b = dense_b(&edges, cmd.dense_cap)?;
    let report = measure_decomposition(&b, &dec, tol.bass);
    let failure = report.failure(graph.d(), &tol);

    let rows = dec
        .pairs
        .iter()
        .map(|p| {
            vec![
                Cell::Float(p.lambda),
                Cell::Float(p.theta.re),
                Cell::Float(p.theta.im),
                Cell::Float(p.theta_prime.re),
                Cell::Float(p.theta_prime.im),
                Cell::Float(p.alpha.norm()),
                Cell::Float(alpha_exact(p.lambda, dec.d)),
                Cell::Int(i64::from(p.jordan)),
            ]
        })
        .collect();
    let columns = ["lambda", "theta_re", "theta_im", "theta_prime_re", "theta_prime_im", "abs_alpha", "alpha_exact", "jordan"];
    let table = Table {
        meta: vec![("graph".into(), graph.provenance().to_json())],
        columns: columns.map(String::from).to_vec(),
        rows,
    };
    run.write_table("theta.csv", table)?;
    run.write_json(
        "decomposition.json",
        json!({
            "n": dec.n,
            "d": dec.d,
            "num_directed_edges": dec.num_directed_edges(),
            "bipartite": dec.bipartite,
            "report": report,
            "passed": failure.is_none(),
            "failure": failure,
        }),
    )?;
    let manifest = run.finish()?;
    match failure {
        Some(msg) => Err(Error::VerificationFailed(msg)),
        None => Ok(manifest),
    }
}

pub fn theory(cmd: &TheoryCmd) -> Result<String> {
    let p = cmd.p.as_deref().map(str::parse::<PExponent>).transpose()?;
    let config = json!({ "out": cmd.output.out, "n": cmd.n, "d": cmd.d, "p": p, "lambda": cmd.lambda });
    if cmd.d < 3 {
        return Err(Error::DegreeTooSmall(cmd.d));
    }
    let mut run = start_run("theory", &cmd.output, config, None)?;
    run.write_json("theory.json", predictions_json(cmd.n, cmd.d, p, cmd.lambda)?)?;
    run.finish()
}

pub fn tree(cmd: &TreeCmd) -> Result<String> {
    if cmd.d < 3 {
        return Err(Error::DegreeTooSmall(cmd.d));
    }
    let config = json!({ "out": cmd.output.out, "d": cmd.d, "t_max": cmd.tmax, "exact": cmd.exact });
    let mut run = start_run("tree", &cmd.output, config, None)?;
    let table: TreeRadialTable64 = tree_radial(cmd.d, cmd.tmax);
    let exact: Option<ExactTreeRadialTable> = cmd.exact.then(|| tree_radial(cmd.d, cmd.tmax));
    let mut columns = vec!["t".to_string(), "k".to_string(), "probability".to_string()];
    if exact.is_some() {
        columns.push("exact".into());
    }
    let mut rows = Vec::new();
    for t in 0..=cmd.tmax {
        for (k, &prob) in table.row(t).iter().enumerate() {
            let mut row = vec![Cell::Int(t as i64), Cell::Int(k as i64), Cell::Float(prob)];
            if let Some(ex) = &exact {
                row.push(Cell::Text(ex.prob(t, k).to_string()));
            }
            rows.push(row);
        }
    }
    let meta = vec![("d".into(), cmd.d.to_string())];
    run.write_table("tree.csv", Table { meta, columns, rows })?;
    run.finish()
}
