//! Saving and loading graphs with a JSON provenance sidecar at `<path>.json`.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::io::{parse_edge_list, to_edge_list};
use crate::graph::{Provenance, RegularGraph};

pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

/// Writes the canonical edge list and its provenance sidecar.
pub fn save(graph: &RegularGraph, path: &Path) -> Result<()> {
    fs::write(path, to_edge_list(graph))?;
    fs::write(sidecar_path(path), graph.provenance().to_json() + "\n")?;
    Ok(())
}

/// Loads and validates a graph. Provenance comes from the sidecar when
/// present; a recorded bipartite flag must agree with the recomputed one.
pub fn load(path: &Path) -> Result<RegularGraph> {
    let text = fs::read_to_string(path)?;
    let sidecar = sidecar_path(path);
    let provenance = if sidecar.exists() {
        let raw = fs::read_to_string(&sidecar)?;
        serde_json::from_str(&raw).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?
    } else {
        Provenance::File { path: path.display().to_string() }
    };
    let graph = parse_edge_list(&text, provenance)?;
    if let Provenance::Lps { bipartite, .. } = graph.provenance() {
        if *bipartite != graph.is_bipartite() {
            return Err(Error::InvariantViolation(format!(
                "provenance records bipartite = {bipartite}, graph has bipartite = {}",
                graph.is_bipartite()
            )));
        }
    }
    Ok(graph)
}
