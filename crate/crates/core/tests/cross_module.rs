mod common;

use num_complex::Complex64;

use common::{lps_5_29, small_graphs};
use ramlab::builders::{build_lps, io, named, LpsParams};
use ramlab::export::Table;
use ramlab::graph::{distance_profile, validate_and_index};
use ramlab::spectral::{
    adjacency_eigen, adjacency_spectrum, build_decomposition, certify, dense_b, measure_decomposition,
    upsilon_l2_transitive, CertifyConfig, DENSE_CAP,
};
use ramlab::theory::PExponent;
use ramlab::walk::{mixing_curve, tree_radial, Kernel, WalkSpec};
use ramlab::{ExactTreeRadialTable, MixingCurve32, MixingCurve64, TreeRadialTable64};

#[test]
fn sup_norm_after_split_is_bounded_by_l2_product() {
    for g in small_graphs().iter().filter(|g| !g.graph.is_bipartite()) {
        let edges = validate_and_index(&g.graph).unwrap();
        let two = [PExponent::Finite(2.0)];
        let curves: Vec<MixingCurve64> = (0..edges.len())
            .map(|e| mixing_curve(&g.graph, &edges, WalkSpec::plain(Kernel::Nbrw), e, 20, &two).unwrap())
            .collect();
        let worst = |f: &dyn Fn(&MixingCurve64) -> f64| curves.iter().map(f).fold(0.0, f64::max);
        for s in 0..=10 {
            for t in 0..=10 {
                let sup = worst(&|c| c.d_inf[s + t]);
                let product = worst(&|c| c.d_p[0][s]) * worst(&|c| c.d_p[0][t]);
                assert!(sup <= product * (1.0 + 1e-10) + 1e-12, "{} s={s} t={t}: {sup} > {product}", g.label);
            }
        }
    }
}

#[test]
fn ramanujan_blocks_have_conjugate_roots_and_parseval_holds() {
    for g in small_graphs() {
        let edges = validate_and_index(&g.graph).unwrap();
        let eigen = adjacency_eigen(&g.graph, DENSE_CAP).unwrap();
        let dec = build_decomposition(&g.graph, &edges, &eigen, DENSE_CAP).unwrap();
        let report = measure_decomposition(&dense_b(&edges, DENSE_CAP).unwrap(), &dec, 1e-6);
        assert!(report.parseval_residual <= 1e-10, "{}: {}", g.label, report.parseval_residual);
        assert!(report.max_abs_alpha < 2.0 * (g.graph.d() - 1) as f64);

        let spectrum = adjacency_spectrum(&g.graph, DENSE_CAP).unwrap();
        if g.graph.is_bipartite() || !certify(&spectrum, &CertifyConfig::default()).is_ramanujan() {
            continue;
        }
        let root = ((g.graph.d() - 1) as f64).sqrt();
        for pair in &dec.pairs {
            assert!((pair.theta_prime - pair.theta.conj()).norm() < 1e-9, "{}: {pair:?}", g.label);
            assert!((pair.theta.norm() - root).abs() < 1e-9);
        }
    }
}

#[test]
fn riesz_thorin_upper_bounds_to_thirty_steps() {
    let ps = [PExponent::Finite(2.0), PExponent::Finite(4.0)];
    for g in small_graphs() {
        let spectrum = adjacency_spectrum(&g.graph, DENSE_CAP).unwrap();
        if g.graph.is_bipartite() || !certify(&spectrum, &CertifyConfig::default()).is_ramanujan() {
            continue;
        }
        let (n, d) = (g.graph.n(), g.graph.d());
        let rho = 2.0 * ((d - 1) as f64).sqrt() / d as f64;
        let edges = validate_and_index(&g.graph).unwrap();
        for x in 0..n.min(8) {
            let c: MixingCurve64 = mixing_curve(&g.graph, &edges, WalkSpec::plain(Kernel::Srw), x, 30, &ps).unwrap();
            for t in 0..=30 {
                let cols = [(2.0, c.d_p[0][t]), (4.0, c.d_p[1][t]), (f64::INFINITY, c.d_inf[t])];
                for (p, value) in cols {
                    let exponent = if p.is_infinite() { 1.0 } else { (p - 1.0) / p };
                    let bound = (n as f64).powf(exponent) * rho.powi(t as i32);
                    assert!(value <= bound * (1.0 + 1e-9), "{} p={p} t={t}: {value} > {bound}", g.label);
                }
            }
        }
    }
}

#[test]
fn lps_distance_profile_is_the_same_from_every_source() {
    for (p, q) in [(5, 13), (5, 29), (13, 17)] {
        let g = build_lps(&LpsParams { p, q }).unwrap();
        assert_eq!(g.d() as u64, p + 1);
        let reference = distance_profile(&g, 0, 1.0).unwrap().histogram;
        for x in ramlab::walk::start_sample(g.n(), 0, 10, 23) {
            assert_eq!(distance_profile(&g, x, 1.0).unwrap().histogram, reference, "LPS({p},{q}) from {x}");
        }
    }
}

#[test]
fn bipartite_flag_matches_spectrum() {
    let mut graphs = vec![build_lps(&LpsParams { p: 5, q: 13 }).unwrap(), build_lps(&LpsParams { p: 13, q: 17 }).unwrap()];
    graphs.extend(small_graphs().into_iter().map(|g| g.graph));
    for g in graphs {
        let report = adjacency_spectrum(&g, DENSE_CAP).unwrap();
        let has_minus_d = report.eigenvalues.iter().any(|&x| (x + g.d() as f64).abs() < 1e-8);
        assert_eq!(g.is_bipartite(), has_minus_d, "{:?}", g.provenance());
    }
}

#[test]
fn averaged_l2_identity_matches_walk_on_petersen() {
    let g = named::petersen();
    let edges = validate_and_index(&g).unwrap();
    let report = adjacency_spectrum(&g, DENSE_CAP).unwrap();
    for eps in [0.5, 0.1, 0.01, 0.001] {
        let check = upsilon_l2_transitive(&g, &edges, &report, eps).unwrap();
        assert_eq!(check.spectral_average, check.measured, "eps={eps}");
        assert_eq!(check.starts.len(), edges.len());
    }
}

#[test]
fn single_precision_curve_tracks_double() {
    let g = lps_5_29();
    let edges = validate_and_index(&g).unwrap();
    let ps = [PExponent::Finite(2.0)];
    let hi: MixingCurve64 = mixing_curve(&g, &edges, WalkSpec::plain(Kernel::Srw), 0, 15, &ps).unwrap();
    let lo: MixingCurve32 = mixing_curve(&g, &edges, WalkSpec::plain(Kernel::Srw), 0, 15, &ps).unwrap();
    // single precision sums over n entries
    let tol = g.n() as f64 * f32::EPSILON as f64;
    for t in 0..=15 {
        assert!((hi.d_tv[t] - lo.d_tv[t] as f64).abs() < tol, "t={t}: {} vs {}", hi.d_tv[t], lo.d_tv[t]);
        assert!(((hi.d_p[0][t] - lo.d_p[0][t] as f64) / hi.d_p[0][t]).abs() < tol);
    }
}

#[test]
fn exact_and_floating_tree_tables_agree() {
    for d in [3, 5, 8] {
        let exact: ExactTreeRadialTable = tree_radial(d, 40);
        let float: TreeRadialTable64 = tree_radial(d, 40);
        for t in 0..=40 {
            for k in 0..=t {
                let e: f64 = num_traits::ToPrimitive::to_f64(&exact.prob(t, k)).unwrap();
                let f = float.prob(t, k);
                assert!((e - f).abs() <= 1e-14 * e.max(1e-300) + 1e-300, "d={d} t={t} k={k}");
            }
        }
    }
}

#[test]
fn graphs_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for g in small_graphs() {
        let path = dir.path().join("g.edges");
        io::save(&g.graph, &path).unwrap();
        let back = io::load(&path).unwrap();
        assert_eq!(back, g.graph, "{}", g.label);
        assert_eq!(back.provenance(), g.graph.provenance());
    }
}

#[test]
fn curve_table_layout() {
    let g = named::complete(4).unwrap();
    let edges = validate_and_index(&g).unwrap();
    let ps = [PExponent::Finite(1.5), PExponent::Finite(2.0)];
    let c: MixingCurve64 = mixing_curve(&g, &edges, WalkSpec::plain(Kernel::Nbrw), 0, 3, &ps).unwrap();
    let csv = c.to_table(&g.provenance().to_json()).to_csv();
    let mut lines = csv.lines().filter(|l| !l.starts_with('#'));
    assert_eq!(lines.next(), Some("t,d_tv,d_1.5,d_2,d_inf"));
    assert_eq!(lines.count(), 4);

    let empty = Table { meta: vec![], columns: vec!["a".into(), "b".into()], rows: vec![] };
    assert_eq!(empty.to_csv(), "a,b\n");
}

#[test]
fn decomposition_diagonal_has_unit_entries_for_incidence_columns() {
    let g = named::petersen();
    let edges = validate_and_index(&g).unwrap();
    let dec = build_decomposition(&g, &edges, &adjacency_eigen(&g, DENSE_CAP).unwrap(), DENSE_CAP).unwrap();
    let diag = dec.diagonal();
    let minus = diag.iter().filter(|z| (**z + Complex64::new(1.0, 0.0)).norm() < 1e-12).count();
    let plus = diag.iter().filter(|z| (**z - Complex64::new(1.0, 0.0)).norm() < 1e-12).count();
    // -1 and +1 appear as incidence columns; the pair blocks of Petersen avoid them
    assert_eq!((minus, plus), (dec.minus_one, dec.plus_one));
    assert_eq!(dec.minus_one, edges.len() / 2 - g.n());
}
