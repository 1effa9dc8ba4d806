use std::collections::BTreeSet;
use std::io::Write;

use crate::alphabet::AlphabetIndex;
use crate::error::{Result, SgtError};
use crate::io::csv::format_value;
use crate::matrix::SgtMatrix;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DotOptions {
    /// Edges with `ψ_uv` below this are dropped.
    pub threshold: f64,
    /// Emit one undirected edge per pair when the matrix is symmetric.
    pub collapse_symmetric: bool,
}

impl Default for DotOptions {
    fn default() -> Self {
        Self { threshold: 0.0, collapse_symmetric: true }
    }
}

/// Writes the matrix as a Graphviz graph: alphabets are nodes, `ψ_uv` are
/// edge weights (`psi` attribute and label) and pen widths scale with weight.
/// Zero cells never produce edges; self-loops are kept.
pub fn write_dot<W: Write>(
    sgt: &SgtMatrix,
    alphabet: &AlphabetIndex,
    options: &DotOptions,
    mut dest: W,
) -> Result<()> {
    if !(options.threshold >= 0.0) {
        return Err(SgtError::invalid(format!("threshold must be non-negative, got {}", options.threshold)));
    }
    if alphabet.len() != sgt.size() {
        return Err(SgtError::invalid(format!(
            "alphabet of {} tokens for a {}x{} matrix",
            alphabet.len(),
            sgt.size(),
            sgt.size()
        )));
    }
    let undirected = options.collapse_symmetric && sgt.is_symmetric(1e-12);
    let n = sgt.size();
    let mut edges = Vec::new();
    for u in 0..n {
        let start = if undirected { u } else { 0 };
        for v in start..n {
            let w = sgt.get(u, v);
            if w > 0.0 && w >= options.threshold {
                edges.push((u, v, w));
            }
        }
    }
    let max_weight = edges.iter().map(|e| e.2).fold(0.0f64, f64::max);
    let nodes: BTreeSet<usize> = edges.iter().flat_map(|&(u, v, _)| [u, v]).collect();

    let (keyword, arrow) = if undirected { ("graph", "--") } else { ("digraph", "->") };
    writeln!(dest, "{keyword} sgt {{")?;
    for &node in &nodes {
        writeln!(dest, "  {};", quote(alphabet.token(node).unwrap_or_default()))?;
    }
    for &(u, v, w) in &edges {
        let penwidth = 1.0 + 4.0 * w / max_weight;
        writeln!(
            dest,
            "  {} {arrow} {} [psi={}, label=\"{}\", penwidth={}];",
            quote(alphabet.token(u).unwrap_or_default()),
            quote(alphabet.token(v).unwrap_or_default()),
            format_value(w),
            format_value(round_to(w, 3)),
            format_value(round_to(penwidth, 3)),
        )?;
    }
    writeln!(dest, "}}")?;
    Ok(())
}

fn round_to(x: f64, decimals: i32) -> f64 {
    let scale = 10f64.powi(decimals);
    (x * scale).round() / scale
}

fn quote(token: &str) -> String {
    let mut out = String::with_capacity(token.len() + 2);
    out.push('"');
    for c in token.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}
