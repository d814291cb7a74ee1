//! Graphviz export of the two solver digraphs.
//!
//! Parallel edges between the same pair of vertices collapse into one arrow
//! whose label lists the weights (`"3,4"`).  Compact edges are dashed.
//! Vertices with no incident arc are omitted; labels use the augmented
//! 1-based indexing (artificial vertices are 1..=3 and n-2..=n).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::reduced::{EdgeKind, RVertex, ReducedDag};
use crate::reference::WeightedDag;

fn merge_labels(weights: &[u32]) -> String {
    let mut ws = weights.to_vec();
    ws.sort_unstable();
    ws.iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// DOT form of the reference digraph `D`.
pub fn export_d(dag: &WeightedDag) -> String {
    let name = |id: usize| -> String {
        match dag.pair(id) {
            Some((u, v)) => format!("\"{u}|{v}\""),
            None => "\"t\"".to_string(),
        }
    };
    let mut grouped: BTreeMap<(usize, usize), Vec<u32>> = BTreeMap::new();
    for id in 0..dag.vertex_count() {
        for &(target, w) in dag.out_edges(id) {
            grouped.entry((id, target)).or_default().push(w);
        }
    }
    let mut out = String::from("digraph D {\n  rankdir=LR;\n");
    let mut touched: Vec<usize> = grouped
        .keys()
        .flat_map(|&(a, b)| [a, b])
        .collect();
    touched.sort_unstable();
    touched.dedup();
    for id in touched {
        let _ = writeln!(out, "  {};", name(id));
    }
    for ((a, b), ws) in &grouped {
        let _ = writeln!(out, "  {} -> {} [label=\"{}\"];", name(*a), name(*b), merge_labels(ws));
    }
    out.push_str("}\n");
    out
}

/// DOT form of the reduced digraph `R`.  Bar copies carry a `'` suffix.
pub fn export_r(dag: &ReducedDag) -> String {
    let name = |id: usize| -> String {
        match dag.vertex(id) {
            RVertex::Edge { pair: (u, v), copy } => match copy {
                crate::reduced::EdgeCopy::Under => format!("\"{u}|{v}\""),
                crate::reduced::EdgeCopy::Bar => format!("\"{u}|{v}'\""),
            },
            RVertex::Sink => "\"t\"".to_string(),
        }
    };
    let mut grouped: BTreeMap<(usize, usize, bool), Vec<u32>> = BTreeMap::new();
    for id in 0..dag.vertex_count() {
        for e in dag.out_edges(id) {
            grouped
                .entry((id, e.target, e.kind == EdgeKind::Compact))
                .or_default()
                .push(e.weight);
        }
    }
    let mut out = String::from("digraph R {\n  rankdir=LR;\n");
    let mut touched: Vec<usize> = grouped
        .keys()
        .flat_map(|&(a, b, _)| [a, b])
        .collect();
    touched.sort_unstable();
    touched.dedup();
    for id in touched {
        let _ = writeln!(out, "  {};", name(id));
    }
    for ((a, b, compact), ws) in &grouped {
        let style = if *compact { " style=dashed" } else { "" };
        let _ = writeln!(
            out,
            "  {} -> {} [label=\"{}\"{}];",
            name(*a),
            name(*b),
            merge_labels(ws),
            style
        );
    }
    out.push_str("}\n");
    out
}
