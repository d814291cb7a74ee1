//! The quadratic reference model: the weighted acyclic digraph `D(G)` over
//! the edges of `G`.
//!
//! `D(G)` has one vertex per edge of the augmented graph plus a sink `t`; an
//! edge of weight `j` runs from `e` to `g` exactly when `g` is the
//! j-extension of `e`, and a single weight-3 edge runs from the pre-sink
//! edge to `t`.  A source-to-sink path of minimum weight decodes block by
//! block into a minimum 2-dom.  Building `D` costs `O(nm)`; the reduced
//! pipeline supersedes it, and this module stays as the mid-scale oracle the
//! fast path is differentially tested against.

use crate::expansive::{build_block, max_extension_enumeration};
use crate::solution::{assemble, Block, Solution};
use crate::straight::{AugmentedGraph, StraightGraph, Vertex};

/// Vertex ids are positions in the lexicographic edge order; the sink is the
/// extra last id.  Parallel edges of distinct weights may coexist.
#[derive(Debug, Clone)]
pub struct WeightedDag {
    edges_of_g: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(usize, u32)>>,
    source: usize,
    sink: usize,
}

impl WeightedDag {
    pub fn vertex_count(&self) -> usize {
        self.edges_of_g.len() + 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    /// The graph edge a vertex id stands for; `None` for the sink.
    pub fn pair(&self, id: usize) -> Option<(Vertex, Vertex)> {
        self.edges_of_g.get(id).copied()
    }

    pub fn id_of(&self, pair: (Vertex, Vertex)) -> Option<usize> {
        self.edges_of_g.binary_search(&pair).ok()
    }

    pub fn out_edges(&self, id: usize) -> &[(usize, u32)] {
        &self.adj[id]
    }
}

/// Builds `D` for an augmented graph.
pub fn build_d(aug: &AugmentedGraph) -> WeightedDag {
    let g = aug.graph();
    let edges_of_g: Vec<(Vertex, Vertex)> = g.edges().collect();
    let m = edges_of_g.len();
    let mut offsets = vec![0usize; g.n() + 2];
    for i in 1..=g.n() {
        offsets[i + 1] = offsets[i] + g.out_degree(i);
    }
    let id_of = |(u, v): (Vertex, Vertex)| offsets[u] + (v - u - 1);

    let mut adj = vec![Vec::new(); m + 1];
    for (id, &e) in edges_of_g.iter().enumerate() {
        for (j, target) in max_extension_enumeration(g, e) {
            adj[id].push((id_of(target), j as u32));
        }
    }
    let pre_sink = id_of(aug.pre_sink_edge());
    adj[pre_sink].push((m, 3));

    WeightedDag {
        edges_of_g,
        adj,
        source: id_of(aug.source_edge()),
        sink: m,
    }
}

/// Single-source shortest path over a DAG whose edges all increase the
/// vertex id, so id order is a topological order.  Ties prefer the smallest
/// predecessor id; with predecessors relaxed in increasing id order, a
/// strict-improvement rule delivers exactly that.
pub(crate) fn relax_in_id_order(
    vertex_count: usize,
    source: usize,
    mut out_edges: impl FnMut(usize, &mut dyn FnMut(usize, u32)),
) -> (Vec<u32>, Vec<u32>) {
    let mut dist = vec![u32::MAX; vertex_count];
    let mut pred = vec![u32::MAX; vertex_count];
    dist[source] = 0;
    for id in 0..vertex_count {
        let d = dist[id];
        if d == u32::MAX {
            continue;
        }
        out_edges(id, &mut |target, weight| {
            debug_assert!(target > id, "DAG edges must increase the id");
            let cand = d + weight;
            if cand < dist[target] {
                dist[target] = cand;
                pred[target] = id as u32;
            }
        });
    }
    (dist, pred)
}

/// Minimum 2-dom via `D(G)`: augment, build, run the DAG shortest path in
/// topological order, decode the path into blocks, strip the artificial
/// blocks.  `None` when the graph has no 2-dom.
pub fn solve_reference(g: &StraightGraph) -> Option<Solution> {
    if !g.is_feasible() {
        return None;
    }
    let aug = g.augment();
    let dag = build_d(&aug);
    let (dist, pred) = relax_in_id_order(dag.vertex_count(), dag.source, |id, relax| {
        for &(t, w) in dag.out_edges(id) {
            relax(t, w);
        }
    });
    if dist[dag.sink] == u32::MAX {
        debug_assert!(false, "feasible graphs always reach the sink");
        return None;
    }

    let mut path = vec![dag.sink];
    while *path.last().unwrap() != dag.source {
        path.push(pred[*path.last().unwrap()] as usize);
    }
    path.reverse();

    let blocks: Vec<Block> = path
        .windows(2)
        .map(|w| {
            let size = (dist[w[1]] - dist[w[0]]) as usize;
            let e = dag.pair(w[0]).expect("only the sink lacks a pair");
            let b = build_block(aug.graph(), e, size)
                .expect("every path edge encodes an expansive set");
            Block {
                repr: b.repr,
                vertices: b.vertices,
            }
        })
        .collect();
    Some(assemble(&aug, blocks, dist[dag.sink] as usize))
}
