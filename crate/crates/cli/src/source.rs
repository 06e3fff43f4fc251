use ramlab::builders::{build_lps, build_named, build_random_lift, build_random_regular, io, LiftSpec, LpsParams};
use ramlab::{Error, RegularGraph, Result};

use crate::args::{Family, GraphSource};

fn need<T: Copy>(value: Option<T>, flag: &str, family: &str) -> Result<T> {
    value.ok_or_else(|| Error::BadParams(format!("--{flag} is required for --family {family}")))
}

pub fn load_graph(src: &GraphSource) -> Result<RegularGraph> {
    if let Some(path) = &src.file {
        return io::load(path);
    }
    let name = || src.name.clone().ok_or_else(|| Error::BadParams("--name is required".into()));
    match src.family.expect("clap requires --family or --file") {
        Family::Lps => build_lps(&LpsParams { p: need(src.p, "p", "lps")?, q: need(src.q, "q", "lps")? }),
        Family::RandomRegular => {
            build_random_regular(need(src.n, "n", "random-regular")?, need(src.d, "d", "random-regular")?, src.seed)
        }
        Family::Lift => build_random_lift(&LiftSpec {
            base: build_named(&name()?)?,
            cover: need(src.cover, "cover", "lift")?,
            seed: src.seed,
        }),
        Family::Named => build_named(&name()?),
    }
}
