#![allow(dead_code)]

use ramlab::builders::{build_lps, build_random_lift, build_random_regular, named, LiftSpec, LpsParams};
use ramlab::RegularGraph;

pub struct Named {
    pub label: String,
    pub graph: RegularGraph,
}

fn named(label: impl Into<String>, graph: RegularGraph) -> Named {
    Named { label: label.into(), graph }
}

/// K4, K33, Petersen, five random cubic graphs on 50 vertices and a 20-lift
/// of Petersen.
pub fn small_graphs() -> Vec<Named> {
    let mut out = vec![
        named("K4", named::complete(4).unwrap()),
        named("K33", named::complete_bipartite(3).unwrap()),
        named("petersen", named::petersen()),
    ];
    for seed in 1..=5 {
        out.push(named(format!("rrg(50,3,seed={seed})"), build_random_regular(50, 3, seed).unwrap()));
    }
    let lift = build_random_lift(&LiftSpec { base: named::petersen(), cover: 20, seed: 7 }).unwrap();
    out.push(named("petersen-20-lift", lift));
    out
}

pub fn lps_5_29() -> RegularGraph {
    build_lps(&LpsParams { p: 5, q: 29 }).unwrap()
}
