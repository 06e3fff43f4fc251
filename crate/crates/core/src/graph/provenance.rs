use serde::{Deserialize, Serialize};

/// Which projective group an LPS graph lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum LpsGroup {
    /// `p` is a square mod `q`: non-bipartite, `q(q^2-1)/2` vertices.
    Psl,
    /// `p` is a non-square mod `q`: bipartite, `q(q^2-1)` vertices.
    Pgl,
}

/// How a graph was constructed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Provenance {
    Named { name: String },
    Lps { p: u64, q: u64, group: LpsGroup, bipartite: bool },
    RandomRegular { n: usize, d: usize, seed: u64, attempt: usize },
    RandomLift { base: Box<Provenance>, cover: usize, seed: u64, attempt: usize },
    File { path: String },
    Synthetic,
}

impl Provenance {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("provenance serializes")
    }
}
