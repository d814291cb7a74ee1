//! The linear-time pipeline: the compressed digraph `R(G)`.
//!
//! `R` holds two copies of every edge of the augmented graph — an *under*
//! copy for blocks of size 3 or 4 and a *bar* copy for longer ones.  From an
//! under copy, regular edges of weight 3 and 4 lead to both copies of the
//! corresponding extension.  From the bar copy of an edge with width `kappa`,
//! one *compact* edge of weight `kappa` advances along the reach chain to the
//! bar copy of `(z, z+1)`, and regular edges of weight `kappa + 4` lead to
//! both copies of the `(kappa+4)`-extension.  A maximal run of compact edges
//! closed by one regular edge (a *D-edge*) plays the role of a single edge of
//! the reference digraph, so shortest source-to-sink paths agree with it
//! while `R` keeps `O(m)` size.  Everything here — construction, shortest
//! path, decoding — is `O(m)`.

use thiserror::Error;

use crate::expansive::{build_block, extension_candidate, j_extension, WidthMap};
use crate::expansive::build_width_map;
use crate::solution::{assemble, Block, Solution};
use crate::straight::{AugmentedGraph, StraightGraph, Vertex};

/// Which copy of an edge an `R` vertex is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeCopy {
    Under = 0,
    Bar = 1,
}

/// A vertex of `R(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RVertex {
    Edge {
        pair: (Vertex, Vertex),
        copy: EdgeCopy,
    },
    Sink,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Regular,
    Compact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct REdge {
    pub target: usize,
    pub weight: u32,
    pub kind: EdgeKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("path ends with a compact edge")]
    MalformedPath,
}

/// Shared id scheme and O(1) out-edge generation.  Vertex ids are
/// `2 * edge_index + copy` with edges in lexicographic order; the sink is
/// `2m`.  Every edge strictly increases the underlying edge index, so id
/// order is a topological order.
struct RContext<'a> {
    g: &'a StraightGraph,
    widths: &'a WidthMap,
    /// `offsets[i]` = number of edges whose first endpoint precedes `i`.
    offsets: Vec<usize>,
    pre_sink_eid: usize,
    m: usize,
}

impl<'a> RContext<'a> {
    fn new(aug: &'a AugmentedGraph, widths: &'a WidthMap) -> Self {
        let g = aug.graph();
        let n = g.n();
        let mut offsets = vec![0usize; n + 2];
        for i in 1..=n {
            offsets[i + 1] = offsets[i] + g.out_degree(i);
        }
        let m = offsets[n + 1];
        let pre_sink = aug.pre_sink_edge();
        let pre_sink_eid = offsets[pre_sink.0] + (pre_sink.1 - pre_sink.0 - 1);
        RContext {
            g,
            widths,
            offsets,
            pre_sink_eid,
            m,
        }
    }

    #[inline]
    fn eid(&self, (x, y): (Vertex, Vertex)) -> usize {
        self.offsets[x] + (y - x - 1)
    }

    fn pair_of(&self, eid: usize) -> (Vertex, Vertex) {
        let i = self.offsets.partition_point(|&o| o <= eid) - 1;
        (i, i + 1 + (eid - self.offsets[i]))
    }

    fn sink(&self) -> usize {
        2 * self.m
    }

    /// Calls `emit(target_id, weight, kind)` for every out-edge of the given
    /// copy of edge `(i, j)`.  O(1).
    fn for_each_out_edge(
        &self,
        eid: usize,
        (i, j): (Vertex, Vertex),
        copy: EdgeCopy,
        emit: &mut impl FnMut(usize, u32, EdgeKind),
    ) {
        match copy {
            EdgeCopy::Under => {
                for size in [3u32, 4] {
                    if let Some(target) = j_extension(self.g, (i, j), size as usize) {
                        let t = self.eid(target);
                        emit(2 * t, size, EdgeKind::Regular);
                        emit(2 * t + 1, size, EdgeKind::Regular);
                    }
                }
                if eid == self.pre_sink_eid {
                    emit(self.sink(), 3, EdgeKind::Regular);
                }
            }
            EdgeCopy::Bar => {
                if j >= self.g.reach(i) {
                    return; // bar copies of (i, reach(i)) have no edges
                }
                let Some((kappa, a)) = self.widths.finite(i) else {
                    return;
                };
                let ct = self.eid((a, a + 1));
                emit(2 * ct + 1, kappa as u32, EdgeKind::Compact);
                // Last two vertices of the size-(kappa+4) block are
                // (b - 1, b) for b = f_r(a); the acceptance test inside
                // `extension_candidate` decides in O(1) whether the
                // (kappa+4)-extension exists.
                let b = self.g.reach(a);
                if let Some(target) = extension_candidate(self.g, b - 1, b) {
                    let t = self.eid(target);
                    let w = (kappa + 4) as u32;
                    emit(2 * t, w, EdgeKind::Regular);
                    emit(2 * t + 1, w, EdgeKind::Regular);
                }
            }
        }
    }
}

/// `R(G)`, materialized.  [`solve`] streams the same edges without building
/// this; the explicit form serves inspection, export, and tests.
#[derive(Debug, Clone)]
pub struct ReducedDag {
    edges_of_g: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<REdge>>,
    source: usize,
    sink: usize,
}

impl ReducedDag {
    /// `2m + 1`.
    pub fn vertex_count(&self) -> usize {
        2 * self.edges_of_g.len() + 1
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

    pub fn out_edges(&self, id: usize) -> &[REdge] {
        &self.adj[id]
    }

    pub fn vertex(&self, id: usize) -> RVertex {
        if id == self.sink {
            RVertex::Sink
        } else {
            RVertex::Edge {
                pair: self.edges_of_g[id / 2],
                copy: if id % 2 == 0 {
                    EdgeCopy::Under
                } else {
                    EdgeCopy::Bar
                },
            }
        }
    }

    pub fn id_of(&self, pair: (Vertex, Vertex), copy: EdgeCopy) -> Option<usize> {
        self.edges_of_g
            .binary_search(&pair)
            .ok()
            .map(|e| 2 * e + copy as usize)
    }
}

/// Step 1: build `R(G)` from an augmented graph and its width map.
pub fn build_r(aug: &AugmentedGraph, widths: &WidthMap) -> ReducedDag {
    let ctx = RContext::new(aug, widths);
    let edges_of_g: Vec<(Vertex, Vertex)> = aug.graph().edges().collect();
    let mut adj = vec![Vec::new(); 2 * ctx.m + 1];
    for (eid, &pair) in edges_of_g.iter().enumerate() {
        for copy in [EdgeCopy::Under, EdgeCopy::Bar] {
            let id = 2 * eid + copy as usize;
            ctx.for_each_out_edge(eid, pair, copy, &mut |target, weight, kind| {
                adj[id].push(REdge {
                    target,
                    weight,
                    kind,
                });
            });
        }
    }
    ReducedDag {
        edges_of_g,
        adj,
        source: 0,
        sink: 2 * ctx.m,
    }
}

/// A source-to-sink path of `R(G)` with its per-hop weights and kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RPath {
    pub vertices: Vec<RVertex>,
    pub weights: Vec<u32>,
    pub kinds: Vec<EdgeKind>,
    pub total: u32,
}

/// Step 2: minimum-weight source-to-sink path, or `None` when the sink is
/// unreachable.  Relaxation runs in id order (a topological order); among
/// equal-weight paths the smallest predecessor id wins.
pub fn shortest_path(dag: &ReducedDag) -> Option<RPath> {
    let vcount = dag.vertex_count();
    let mut dist = vec![u32::MAX; vcount];
    let mut pred = vec![u32::MAX; vcount];
    dist[dag.source] = 0;
    for id in 0..vcount {
        let d = dist[id];
        if d == u32::MAX {
            continue;
        }
        for e in dag.out_edges(id) {
            let cand = d + e.weight;
            if cand < dist[e.target] {
                dist[e.target] = cand;
                pred[e.target] = id as u32;
            }
        }
    }
    if dist[dag.sink] == u32::MAX {
        return None;
    }

    let mut ids = vec![dag.sink];
    while *ids.last().unwrap() != dag.source {
        ids.push(pred[*ids.last().unwrap()] as usize);
    }
    ids.reverse();

    let mut weights = Vec::with_capacity(ids.len() - 1);
    let mut kinds = Vec::with_capacity(ids.len() - 1);
    for hop in ids.windows(2) {
        let w = dist[hop[1]] - dist[hop[0]];
        // (source, target, weight) identifies the edge uniquely: parallel
        // edges out of one copy always differ in weight.
        let kind = dag
            .out_edges(hop[0])
            .iter()
            .find(|e| e.target == hop[1] && e.weight == w)
            .expect("predecessor edge exists")
            .kind;
        weights.push(w);
        kinds.push(kind);
    }
    Some(RPath {
        vertices: ids.iter().map(|&id| dag.vertex(id)).collect(),
        weights,
        kinds,
        total: dist[dag.sink],
    })
}

/// Step 3a: cut a path after every regular edge.  Each piece — a maximal run
/// of compact edges closed by one regular edge — is a D-edge, reported as
/// its starting vertex and total weight.
pub fn split_into_d_edges(path: &RPath) -> Result<Vec<(RVertex, u32)>, PathError> {
    if path.kinds.last() == Some(&EdgeKind::Compact) {
        return Err(PathError::MalformedPath);
    }
    let mut out = Vec::new();
    let mut start = 0usize;
    let mut acc = 0u32;
    for (hop, (&w, &kind)) in path.weights.iter().zip(&path.kinds).enumerate() {
        acc += w;
        if kind == EdgeKind::Regular {
            out.push((path.vertices[start], acc));
            start = hop + 1;
            acc = 0;
        }
    }
    Ok(out)
}

/// Steps 0–3 end to end: feasibility, augmentation, width map, `R(G)`
/// shortest path, block decoding.  `O(m)` given the straight encoding; the
/// digraph is never materialized — edges are generated on the fly during
/// relaxation.  `None` when the graph has no 2-dom.
pub fn solve(g: &StraightGraph) -> Option<Solution> {
    if !g.is_feasible() {
        return None;
    }
    let aug = g.augment();
    let ag = aug.graph();
    let widths = build_width_map(ag);
    let ctx = RContext::new(&aug, &widths);
    let m = ctx.m;
    assert!(
        2 * m + 1 < (1usize << 31),
        "instance too large for 32-bit vertex ids"
    );

    const COMPACT_BIT: u32 = 1 << 31;
    let vcount = 2 * m + 1;
    let mut dist = vec![u32::MAX; vcount];
    let mut pred = vec![u32::MAX; vcount];
    dist[0] = 0; // the under copy of the source edge (1, 2) is id 0

    let n = ag.n();
    let mut eid = 0usize;
    for i in 1..=n {
        for j in i + 1..=ag.reach(i) {
            for copy in [EdgeCopy::Under, EdgeCopy::Bar] {
                let id = 2 * eid + copy as usize;
                let d = dist[id];
                if d == u32::MAX {
                    continue;
                }
                ctx.for_each_out_edge(eid, (i, j), copy, &mut |target, weight, kind| {
                    let cand = d + weight;
                    if cand < dist[target] {
                        dist[target] = cand;
                        pred[target] = id as u32
                            | if kind == EdgeKind::Compact {
                                COMPACT_BIT
                            } else {
                                0
                            };
                    }
                });
            }
            eid += 1;
        }
    }

    let sink = ctx.sink();
    if dist[sink] == u32::MAX {
        debug_assert!(false, "feasible graphs always reach the sink");
        return None;
    }

    // Backtrack: `compact_into[k]` is the kind of the edge into `ids[k]`.
    let mut ids = vec![sink];
    let mut compact_into = vec![false];
    while *ids.last().unwrap() != 0 {
        let cur = *ids.last().unwrap();
        let raw = pred[cur];
        *compact_into.last_mut().unwrap() = raw & COMPACT_BIT != 0;
        ids.push((raw & !COMPACT_BIT) as usize);
        compact_into.push(false);
    }
    ids.reverse();
    compact_into.reverse();

    // Split into D-edges (each ends at the regular hop) and rebuild each
    // block from its representative edge and segment weight.
    let mut blocks = Vec::new();
    let mut start = 0usize;
    for hop in 1..ids.len() {
        if !compact_into[hop] {
            let weight = (dist[ids[hop]] - dist[ids[start]]) as usize;
            let repr = ctx.pair_of(ids[start] / 2);
            let b = build_block(ag, repr, weight)
                .expect("every D-edge of the shortest path encodes an expansive set");
            blocks.push(Block {
                repr,
                vertices: b.vertices,
            });
            start = hop;
        }
    }
    Some(assemble(&aug, blocks, dist[sink] as usize))
}
