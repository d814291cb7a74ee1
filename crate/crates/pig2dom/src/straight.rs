//! The straight encoding of a proper interval graph.
//!
//! A straight graph is given by a vertex order `v_1 < … < v_n` and a reach
//! map `f_r` with `i <= reach(i) <= n`, monotone in `i`, such that `v_i v_j`
//! is an edge iff `i < j <= reach(i)`.  Vertices are 1-based throughout;
//! indices `0` and `n + 1` act as sentinels and are never real vertices.

use thiserror::Error;

use crate::recognition;

/// 1-based vertex index.
pub type Vertex = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    /// The reach sequence is not a straight orientation.
    #[error("malformed reach map at index {index}: {reason}")]
    MalformedReach { index: usize, reason: &'static str },
    /// One interval strictly contains another, so the family is not proper.
    #[error("interval {outer} strictly contains interval {inner} (input positions, 1-based)")]
    InclusionViolation { outer: usize, inner: usize },
    /// An interval is empty or has a non-finite endpoint.
    #[error("invalid interval at input position {index}")]
    InvalidInterval { index: usize },
    /// The edge list is not a simple graph on the declared vertex set.
    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge { u: usize, v: usize, reason: &'static str },
    /// No vertex order of the input graph admits a straight orientation.
    #[error("the graph is not a proper interval graph")]
    NotProperInterval,
}

/// A proper interval graph in straight form: the reach map is the entire
/// graph encoding, so the structure is `O(n)` space regardless of `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StraightGraph {
    /// `reach[i]` for `i` in `1..=n`; slot 0 is unused.
    reach: Vec<Vertex>,
}

impl StraightGraph {
    /// Builds a graph from its reach sequence (`reach[k]` is the 1-based
    /// index of the farthest neighbor of `v_{k+1}`).
    pub fn from_reach(n: usize, reach: &[usize]) -> Result<Self, GraphError> {
        if reach.len() != n {
            return Err(GraphError::MalformedReach {
                index: 0,
                reason: "sequence length differs from n",
            });
        }
        let mut table = Vec::with_capacity(n + 1);
        table.push(0);
        table.extend_from_slice(reach);
        for i in 1..=n {
            if table[i] < i {
                return Err(GraphError::MalformedReach {
                    index: i,
                    reason: "reach below its own index",
                });
            }
            if table[i] > n {
                return Err(GraphError::MalformedReach {
                    index: i,
                    reason: "reach beyond the last vertex",
                });
            }
            if i > 1 && table[i] < table[i - 1] {
                return Err(GraphError::MalformedReach {
                    index: i,
                    reason: "reach not monotone",
                });
            }
        }
        Ok(StraightGraph { reach: table })
    }

    /// Builds a graph from an inclusion-free family of intervals.
    ///
    /// Intervals are sorted by `(left, right)`; equal intervals (twins) are
    /// accepted, strict containment is rejected.  Returns the graph together
    /// with the sort permutation `perm`, where `perm[k]` is the 1-based input
    /// position of internal vertex `k + 1`.
    pub fn from_intervals(pairs: &[(f64, f64)]) -> Result<(Self, Vec<usize>), GraphError> {
        let n = pairs.len();
        for (k, &(l, r)) in pairs.iter().enumerate() {
            if !l.is_finite() || !r.is_finite() || l > r {
                return Err(GraphError::InvalidInterval { index: k + 1 });
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            pairs[a]
                .partial_cmp(&pairs[b])
                .expect("finite endpoints compare totally")
        });

        // In sorted order, an earlier interval contains a later one iff the
        // later right endpoint does not exceed the running maximum (twins
        // excepted), and a later interval contains an earlier one iff both
        // share the left endpoint.
        let mut max_r = f64::NEG_INFINITY;
        let mut max_holder = 0usize; // input position of the interval attaining max_r
        for (k, &idx) in order.iter().enumerate() {
            let (l, r) = pairs[idx];
            if k > 0 {
                let prev = pairs[order[k - 1]];
                if prev.0 == l && prev.1 < r {
                    return Err(GraphError::InclusionViolation {
                        outer: idx + 1,
                        inner: order[k - 1] + 1,
                    });
                }
                if r < max_r || (r == max_r && pairs[max_holder].0 < l) {
                    return Err(GraphError::InclusionViolation {
                        outer: max_holder + 1,
                        inner: idx + 1,
                    });
                }
            }
            if r > max_r {
                max_r = r;
                max_holder = idx;
            }
        }

        // reach[i] = last interval whose left endpoint is at most right_i;
        // rights are nondecreasing in sorted order, so a single forward
        // pointer suffices.
        let mut reach = vec![0usize; n];
        let mut hi = 0usize;
        for k in 0..n {
            if hi < k {
                hi = k;
            }
            let r = pairs[order[k]].1;
            while hi + 1 < n && pairs[order[hi + 1]].0 <= r {
                hi += 1;
            }
            reach[k] = hi + 1;
        }
        let graph = Self::from_reach(n, &reach)?;
        let perm = order.iter().map(|&idx| idx + 1).collect();
        Ok((graph, perm))
    }

    /// Builds a graph from an adjacency list, recognizing whether it is a
    /// proper interval graph along the way.
    ///
    /// Returns the graph and the ordering, where `ordering[k]` is the input
    /// vertex placed at internal position `k + 1`.  The candidate ordering
    /// comes from multi-sweep lexicographic BFS and is then verified against
    /// the input edge set, so a wrong candidate can only be rejected, never
    /// silently accepted.
    pub fn from_adjacency(
        n: usize,
        edges: &[(usize, usize)],
    ) -> Result<(Self, Vec<usize>), GraphError> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(GraphError::InvalidEdge {
                    u,
                    v,
                    reason: "endpoint outside 1..=n",
                });
            }
            if u == v {
                return Err(GraphError::InvalidEdge {
                    u,
                    v,
                    reason: "self-loop",
                });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::InvalidEdge {
                    u,
                    v,
                    reason: "duplicate edge",
                });
            }
            adj[u].push(v);
            adj[v].push(u);
        }

        let ordering = recognition::straight_ordering(n, &adj);

        let mut pos = vec![0usize; n + 1];
        for (k, &v) in ordering.iter().enumerate() {
            pos[v] = k + 1;
        }
        let mut reach = vec![0usize; n];
        for (k, &v) in ordering.iter().enumerate() {
            let best = adj[v].iter().map(|&w| pos[w]).max().unwrap_or(0);
            reach[k] = best.max(k + 1);
        }
        let graph = Self::from_reach(n, &reach).map_err(|_| GraphError::NotProperInterval)?;

        // The straight encoding implies exactly sum(reach[i] - i) edges; if
        // that count matches and every input edge is implied, the edge sets
        // are equal.
        if graph.m() != edges.len() {
            return Err(GraphError::NotProperInterval);
        }
        for &(u, v) in edges {
            if !graph.adjacent(pos[u], pos[v]) {
                return Err(GraphError::NotProperInterval);
            }
        }
        Ok((graph, ordering))
    }

    pub fn n(&self) -> usize {
        self.reach.len() - 1
    }

    /// Number of edges, `sum_i (reach(i) - i)`.
    pub fn m(&self) -> usize {
        (1..=self.n()).map(|i| self.reach[i] - i).sum()
    }

    /// `f_r(v_i)` as an index.  `i` must lie in `1..=n`.
    #[inline]
    pub fn reach(&self, i: Vertex) -> Vertex {
        self.reach[i]
    }

    /// Out-degree `d⁺(v_i) = reach(i) - i` under the straight orientation.
    #[inline]
    pub fn out_degree(&self, i: Vertex) -> usize {
        self.reach[i] - i
    }

    pub fn reach_slice(&self) -> &[Vertex] {
        &self.reach[1..]
    }

    /// O(1) adjacency test.
    #[inline]
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        if u == v {
            return false;
        }
        let (a, b) = (u.min(v), u.max(v));
        b <= self.reach[a]
    }

    /// Total degrees of all vertices in one O(n) sweep: the in-neighbors of
    /// `i` are exactly the `j < i` with `reach(j) >= i`, and by monotonicity
    /// the excluded set `{j : reach(j) < i}` is a prefix.
    pub fn degrees(&self) -> Vec<usize> {
        let n = self.n();
        let mut out = vec![0usize; n];
        let mut p = 0usize; // number of j with reach(j) < i
        for i in 1..=n {
            while p < n && self.reach[p + 1] < i {
                p += 1;
            }
            out[i - 1] = (self.reach[i] - i) + (i - 1 - p);
        }
        out
    }

    /// A 2-dom exists iff every vertex has total degree at least 2 (then the
    /// whole vertex set is one).  Vacuously true for the empty graph.
    pub fn is_feasible(&self) -> bool {
        self.degrees().into_iter().all(|d| d >= 2)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (1..=self.n()).flat_map(move |i| (i + 1..=self.reach[i]).map(move |j| (i, j)))
    }

    /// Inserts the source and pre-sink triangles around the graph.
    pub fn augment(&self) -> AugmentedGraph {
        let n = self.n();
        let mut reach = Vec::with_capacity(n + 7);
        reach.push(0);
        reach.extend([3, 3, 3]);
        reach.extend((1..=n).map(|i| self.reach[i] + 3));
        reach.extend([n + 6, n + 6, n + 6]);
        AugmentedGraph {
            graph: StraightGraph { reach },
        }
    }
}

/// A straight graph flanked by two artificial triangle components: the
/// *source* block `S = {1, 2, 3}` and the *pre-sink* block `T = {n+4, n+5,
/// n+6}` (inner indices are shifted up by 3).  Any 2-dom of the augmented
/// graph contains all of `S` and `T`, and they dominate only themselves, so
/// the minimum 2-dom size grows by exactly 6.
#[derive(Debug, Clone)]
pub struct AugmentedGraph {
    graph: StraightGraph,
}

impl AugmentedGraph {
    /// Shift between inner and original indices.
    pub const OFFSET: usize = 3;

    pub fn graph(&self) -> &StraightGraph {
        &self.graph
    }

    /// Vertex count of the original graph.
    pub fn inner_n(&self) -> usize {
        self.graph.n() - 6
    }

    /// The source edge `(1, 2)` inside `S`.
    pub fn source_edge(&self) -> (Vertex, Vertex) {
        (1, 2)
    }

    /// The pre-sink edge `(n+4, n+5)` inside `T`.
    pub fn pre_sink_edge(&self) -> (Vertex, Vertex) {
        let n = self.graph.n();
        (n - 2, n - 1)
    }

    /// Maps an augmented index back to the original one; `None` for the
    /// artificial vertices of `S` and `T`.
    pub fn to_original(&self, v: Vertex) -> Option<Vertex> {
        (v > Self::OFFSET && v <= Self::OFFSET + self.inner_n()).then(|| v - Self::OFFSET)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> StraightGraph {
        StraightGraph::from_reach(7, &[4, 4, 5, 7, 7, 7, 7]).unwrap()
    }

    #[test]
    fn from_reach_accepts_fig1() {
        let g = fig1();
        assert_eq!(g.n(), 7);
        assert_eq!(g.m(), 13);
        assert!(g.adjacent(1, 4));
        assert!(!g.adjacent(1, 5));
        assert!(g.adjacent(3, 5));
    }

    #[test]
    fn from_reach_empty() {
        let g = StraightGraph::from_reach(0, &[]).unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(g.m(), 0);
        assert!(g.is_feasible());
    }

    #[test]
    fn from_reach_rejects_non_monotone() {
        let err = StraightGraph::from_reach(3, &[3, 2, 3]).unwrap_err();
        assert!(matches!(err, GraphError::MalformedReach { index: 2, .. }));
    }

    #[test]
    fn from_reach_rejects_out_of_range() {
        assert!(StraightGraph::from_reach(3, &[3, 3, 4]).is_err());
        assert!(StraightGraph::from_reach(3, &[0, 2, 3]).is_err());
        assert!(StraightGraph::from_reach(2, &[2]).is_err());
    }

    #[test]
    fn from_intervals_matches_fig1() {
        let pairs = [
            (1.0, 5.0),
            (2.0, 6.0),
            (3.0, 8.0),
            (4.0, 11.0),
            (7.0, 12.0),
            (9.0, 13.0),
            (10.0, 14.0),
        ];
        let (g, perm) = StraightGraph::from_intervals(&pairs).unwrap();
        assert_eq!(g.reach_slice(), &[4, 4, 5, 7, 7, 7, 7]);
        assert_eq!(perm, vec![1, 2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn from_intervals_disjoint() {
        let (g, _) = StraightGraph::from_intervals(&[(0.0, 1.0), (2.0, 3.0), (4.0, 5.0)]).unwrap();
        assert_eq!(g.reach_slice(), &[1, 2, 3]);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn from_intervals_rejects_containment() {
        let err = StraightGraph::from_intervals(&[(0.0, 10.0), (1.0, 2.0)]).unwrap_err();
        assert!(matches!(err, GraphError::InclusionViolation { .. }));
        // Shared left endpoint, different right: still strict containment.
        assert!(StraightGraph::from_intervals(&[(0.0, 5.0), (0.0, 7.0)]).is_err());
        // Twins are fine.
        assert!(StraightGraph::from_intervals(&[(0.0, 5.0), (0.0, 5.0)]).is_ok());
    }

    #[test]
    fn from_intervals_unsorted_input_reports_permutation() {
        let pairs = [(4.0, 5.0), (0.0, 1.0), (2.0, 3.0)];
        let (g, perm) = StraightGraph::from_intervals(&pairs).unwrap();
        assert_eq!(g.m(), 0);
        assert_eq!(perm, vec![2, 3, 1]);
    }

    #[test]
    fn from_adjacency_triangle() {
        let (g, _) = StraightGraph::from_adjacency(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g.reach_slice(), &[3, 3, 3]);
    }

    #[test]
    fn from_adjacency_rejects_claw() {
        let err = StraightGraph::from_adjacency(4, &[(1, 2), (1, 3), (1, 4)]).unwrap_err();
        assert_eq!(err, GraphError::NotProperInterval);
    }

    #[test]
    fn from_adjacency_rejects_malformed_input() {
        assert!(StraightGraph::from_adjacency(2, &[(1, 1)]).is_err());
        assert!(StraightGraph::from_adjacency(2, &[(1, 3)]).is_err());
        assert!(StraightGraph::from_adjacency(2, &[(1, 2), (2, 1)]).is_err());
    }

    #[test]
    fn from_adjacency_recovers_fig4() {
        // Expand the fixture's edge set under a scrambled labeling and check
        // that recognition reproduces an isomorphic straight encoding.
        let reach = [3usize, 4, 5, 7, 7, 8, 9, 10, 10, 10];
        let g = StraightGraph::from_reach(10, &reach).unwrap();
        let relabel: Vec<usize> = vec![7, 2, 9, 4, 1, 10, 3, 8, 5, 6];
        let edges: Vec<(usize, usize)> = g
            .edges()
            .map(|(u, v)| (relabel[u - 1], relabel[v - 1]))
            .collect();
        let (h, ordering) = StraightGraph::from_adjacency(10, &edges).unwrap();
        assert_eq!(h.n(), 10);
        assert_eq!(h.m(), g.m());
        let mut gaps_g: Vec<usize> = (1..=10).map(|i| g.reach(i) - i).collect();
        let mut gaps_h: Vec<usize> = (1..=10).map(|i| h.reach(i) - i).collect();
        gaps_g.sort_unstable();
        gaps_h.sort_unstable();
        assert_eq!(gaps_g, gaps_h);
        assert_eq!(ordering.len(), 10);
    }

    #[test]
    fn degrees_fig1() {
        // Counting arrows incident to each vertex of the figure by hand:
        // v3 has out-neighbors {4, 5} and in-neighbors {1, 2}.
        assert_eq!(fig1().degrees(), vec![3, 3, 4, 6, 4, 3, 3]);
    }

    #[test]
    fn degrees_edge_cases() {
        let empty = StraightGraph::from_reach(3, &[1, 2, 3]).unwrap();
        assert_eq!(empty.degrees(), vec![0, 0, 0]);
        let k4 = StraightGraph::from_reach(4, &[4, 4, 4, 4]).unwrap();
        assert_eq!(k4.degrees(), vec![3, 3, 3, 3]);
    }

    #[test]
    fn degrees_match_naive_count() {
        let g = crate::gen::random_straight(60, 0.35, 99);
        let naive: Vec<usize> = (1..=g.n())
            .map(|v| (1..=g.n()).filter(|&u| g.adjacent(u, v)).count())
            .collect();
        assert_eq!(g.degrees(), naive);
    }

    #[test]
    fn feasibility() {
        let p3 = StraightGraph::from_reach(3, &[2, 3, 3]).unwrap();
        assert!(!p3.is_feasible());
        let k3 = StraightGraph::from_reach(3, &[3, 3, 3]).unwrap();
        assert!(k3.is_feasible());
        let fig4 = crate::gen::fixture_fig4();
        assert!(fig4.is_feasible());
        assert_eq!(fig4.degrees().into_iter().min(), Some(2));
    }

    #[test]
    fn augment_shape() {
        let aug = crate::gen::fixture_fig4().augment();
        let g = aug.graph();
        assert_eq!(g.n(), 16);
        assert_eq!(&g.reach_slice()[..3], &[3, 3, 3]);
        assert_eq!(&g.reach_slice()[13..], &[16, 16, 16]);
        assert_eq!(g.reach(4), 6);
        assert_eq!(aug.source_edge(), (1, 2));
        assert_eq!(aug.pre_sink_edge(), (14, 15));
        assert_eq!(aug.to_original(4), Some(1));
        assert_eq!(aug.to_original(3), None);
        assert_eq!(aug.to_original(14), None);
    }

    #[test]
    fn augment_empty_graph_is_two_triangles() {
        let aug = StraightGraph::from_reach(0, &[]).unwrap().augment();
        assert_eq!(aug.graph().reach_slice(), &[3, 3, 3, 6, 6, 6]);
        assert_eq!(aug.graph().m(), 6);
    }
}
