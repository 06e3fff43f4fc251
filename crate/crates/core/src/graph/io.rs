//! Plain-text edge-list format.
//!
//! The first line is `n d`; each following line is one undirected edge
//! `u v` with `u < v`, 0-indexed, in lexicographic order. Every line,
//! including the last, ends with `\n`.

use std::fmt::Write as _;

use super::{Provenance, RegularGraph};
use crate::error::{Error, Result};

/// Canonical text form of `graph`.
pub fn to_edge_list(graph: &RegularGraph) -> String {
    let mut out = String::with_capacity(16 * graph.num_edges() + 16);
    writeln!(out, "{} {}", graph.n(), graph.d()).unwrap();
    for (u, v) in graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let bad = |message: String| Error::Parse { line: lineno, message };
    let mut fields = line.split_whitespace();
    let a = fields.next().ok_or_else(|| bad("expected two integers".into()))?;
    let b = fields.next().ok_or_else(|| bad("expected two integers".into()))?;
    if fields.next().is_some() {
        return Err(bad("trailing fields".into()));
    }
    let a = a.parse().map_err(|_| bad(format!("`{a}` is not a nonnegative integer")))?;
    let b = b.parse().map_err(|_| bad(format!("`{b}` is not a nonnegative integer")))?;
    Ok((a, b))
}

/// Parses the edge-list format and validates every graph invariant.
pub fn parse_edge_list(text: &str, provenance: Provenance) -> Result<RegularGraph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing header".into() })?;
    let (n, d) = parse_pair(header, hline)?;
    let mut edges = Vec::with_capacity(n * d / 2);
    for (lineno, line) in lines {
        let (u, v) = parse_pair(line, lineno)?;
        if u >= v {
            return Err(Error::Parse { line: lineno, message: format!("edge `{u} {v}` must satisfy u < v") });
        }
        if v >= n {
            return Err(Error::Parse { line: lineno, message: format!("vertex {v} out of range for n = {n}") });
        }
        edges.push((u, v));
    }
    let graph = RegularGraph::from_edges(n, &edges, provenance)?;
    if graph.d() != d {
        return Err(Error::IrregularGraph { vertex: 0, expected: d, found: graph.d() });
    }
    Ok(graph)
}
