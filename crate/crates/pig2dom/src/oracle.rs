//! Ground truth for differential testing.
//!
//! Everything here works from the definition alone — a set is a 2-dom when
//! every vertex has at least two neighbors in it — and never touches the
//! solver modules, so it can arbitrate between them.

use thiserror::Error;

use crate::straight::{StraightGraph, Vertex};

/// Largest instance the exhaustive scan accepts.
pub const MAX_ORACLE_N: usize = 24;

/// Default cap on the number of optimal witnesses collected.
pub const DEFAULT_WITNESS_CAP: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("vertex {vertex} outside 1..={n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("n = {n} exceeds the brute-force cutoff {max}")]
    TooLarge { n: usize, max: usize },
}

/// A set of vertices, sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    items: Vec<Vertex>,
}

impl VertexSet {
    pub fn new(mut items: Vec<Vertex>) -> Self {
        items.sort_unstable();
        items.dedup();
        VertexSet { items }
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

impl From<&[Vertex]> for VertexSet {
    fn from(s: &[Vertex]) -> Self {
        VertexSet::new(s.to_vec())
    }
}

/// True iff every vertex of `g` (members of `w` included) has at least two
/// neighbors in `w`.  O(n + |w|) via difference arrays: the neighbors of a
/// member `w` are the out-range `(w, reach(w)]` plus the in-range
/// `[p_w, w)`, where `p_w` is the first vertex reaching `w`.
pub fn is_2dom(g: &StraightGraph, w: &VertexSet) -> Result<bool, OracleError> {
    let n = g.n();
    if let Some(&v) = w.items.iter().find(|&&v| v == 0 || v > n) {
        return Err(OracleError::OutOfRange { vertex: v, n });
    }
    let mut diff = vec![0i64; n + 2];
    let mut p = 1usize;
    for &v in &w.items {
        let hi = g.reach(v);
        if hi > v {
            diff[v + 1] += 1;
            diff[hi + 1] -= 1;
        }
        while p < v && g.reach(p) < v {
            p += 1;
        }
        if p < v {
            diff[p] += 1;
            diff[v] -= 1;
        }
    }
    let mut count = 0i64;
    for v in 1..=n {
        count += diff[v];
        if count < 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of the exhaustive scan: the optimum and every optimal witness (up
/// to the requested cap).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceResult {
    pub size: usize,
    pub witnesses: Vec<Vec<Vertex>>,
}

/// Minimum 2-dom by exhaustive subset scan in increasing cardinality, with
/// the default witness cap.  `None` when the graph has no 2-dom at all
/// (equivalently, some vertex has degree below 2).
pub fn brute_min_2dom(g: &StraightGraph) -> Result<Option<BruteForceResult>, OracleError> {
    brute_min_2dom_capped(g, DEFAULT_WITNESS_CAP)
}

pub fn brute_min_2dom_capped(
    g: &StraightGraph,
    witness_cap: usize,
) -> Result<Option<BruteForceResult>, OracleError> {
    let n = g.n();
    if n > MAX_ORACLE_N {
        return Err(OracleError::TooLarge {
            n,
            max: MAX_ORACLE_N,
        });
    }
    // Bit v-1 of a mask stands for vertex v.
    let nb: Vec<u32> = (1..=n)
        .map(|v| {
            let mut mask = 0u32;
            for u in 1..=n {
                if g.adjacent(u, v) {
                    mask |= 1 << (u - 1);
                }
            }
            mask
        })
        .collect();
    if nb.iter().any(|m| m.count_ones() < 2) {
        return Ok(None); // V(G) itself is no 2-dom, so nothing is
    }

    let dominated = |w: u32| nb.iter().all(|&m| (m & w).count_ones() >= 2);
    for k in 0..=n {
        let mut witnesses = Vec::new();
        let mut found = false;
        // All k-subsets of n bits in increasing numeric order.
        let mut mask: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
        loop {
            if mask >> n != 0 && k > 0 {
                break;
            }
            if dominated(mask as u32) {
                found = true;
                if witnesses.len() < witness_cap {
                    let set: Vec<usize> =
                        (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
                    witnesses.push(set);
                }
            }
            if k == 0 {
                break;
            }
            // Gosper's hack: next mask with the same popcount.
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        if found {
            return Ok(Some(BruteForceResult { size: k, witnesses }));
        }
    }
    unreachable!("the full vertex set always dominates once degrees are >= 2");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn fig4_augmented() -> StraightGraph {
        gen::fixture_fig4().augment().graph().clone()
    }

    #[test]
    fn caption_witness_is_a_2dom() {
        let g = fig4_augmented();
        // S, T and figure labels {4,5,6,10,11,12}, all shifted to internal.
        let w = VertexSet::new(vec![1, 2, 3, 14, 15, 16, 5, 6, 7, 11, 12, 13]);
        assert_eq!(is_2dom(&g, &w), Ok(true));
        let without_5 = VertexSet::new(vec![1, 2, 3, 14, 15, 16, 6, 7, 11, 12, 13]);
        assert_eq!(is_2dom(&g, &without_5), Ok(false));
    }

    #[test]
    fn whole_vertex_set_iff_feasible() {
        for (reach, n) in [
            (vec![3usize, 3, 3], 3),
            (vec![2, 3, 3], 3),
            (vec![4, 4, 5, 7, 7, 7, 7], 7),
            (vec![], 0),
        ] {
            let g = StraightGraph::from_reach(n, &reach).unwrap();
            let all = VertexSet::new((1..=n).collect());
            assert_eq!(is_2dom(&g, &all).unwrap(), g.is_feasible());
        }
    }

    #[test]
    fn out_of_range_is_reported() {
        let g = StraightGraph::from_reach(3, &[3, 3, 3]).unwrap();
        let w = VertexSet::new(vec![1, 4]);
        assert_eq!(
            is_2dom(&g, &w),
            Err(OracleError::OutOfRange { vertex: 4, n: 3 })
        );
    }

    #[test]
    fn fixture_has_exactly_three_optima() {
        let res = brute_min_2dom(&gen::fixture_fig4()).unwrap().unwrap();
        assert_eq!(res.size, 6);
        // In figure labels: {3,4,5,9,10,11}, {4,5,6,9,10,11} and
        // {4,5,6,10,11,12} (subtract 2 for the bare inner graph).  The first
        // is a minimum 2-dom that no solver path encodes.
        assert_eq!(
            res.witnesses,
            vec![
                vec![1, 2, 3, 7, 8, 9],
                vec![2, 3, 4, 7, 8, 9],
                vec![2, 3, 4, 8, 9, 10]
            ]
        );
    }

    #[test]
    fn triangle_and_path() {
        let k3 = StraightGraph::from_reach(3, &[3, 3, 3]).unwrap();
        let res = brute_min_2dom(&k3).unwrap().unwrap();
        assert_eq!(res.size, 3);
        assert_eq!(res.witnesses, vec![vec![1, 2, 3]]);

        let p5 = StraightGraph::from_reach(5, &[2, 3, 4, 5, 5]).unwrap();
        assert_eq!(brute_min_2dom(&p5).unwrap(), None);
    }

    #[test]
    fn empty_graph_has_empty_minimum() {
        let g = StraightGraph::from_reach(0, &[]).unwrap();
        let res = brute_min_2dom(&g).unwrap().unwrap();
        assert_eq!(res.size, 0);
        assert_eq!(res.witnesses, vec![Vec::<usize>::new()]);
    }

    #[test]
    fn size_guard() {
        let g = gen::path_power(25, 3);
        assert_eq!(
            brute_min_2dom(&g),
            Err(OracleError::TooLarge { n: 25, max: 24 })
        );
    }

    #[test]
    fn witnesses_are_optimal_and_valid() {
        for seed in 0..20u64 {
            let g = gen::random_straight(11, 0.35, seed);
            if let Some(res) = brute_min_2dom(&g).unwrap() {
                for w in &res.witnesses {
                    assert!(is_2dom(&g, &VertexSet::new(w.clone())).unwrap());
                }
                // Random spot-check: smaller sets must all fail.
                if res.size > 0 {
                    let mut rng = gen::SplitMix64::new(seed);
                    for _ in 0..50 {
                        let mut set: Vec<usize> = (1..=g.n())
                            .filter(|_| rng.next_u64() % 2 == 0)
                            .collect();
                        set.truncate(res.size - 1);
                        assert!(!is_2dom(&g, &VertexSet::new(set)).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn witness_cap_is_respected() {
        let k4 = StraightGraph::from_reach(4, &[4, 4, 4, 4]).unwrap();
        let res = brute_min_2dom_capped(&k4, 2).unwrap().unwrap();
        assert_eq!(res.size, 3);
        assert_eq!(res.witnesses.len(), 2);
        let full = brute_min_2dom(&k4).unwrap().unwrap();
        assert_eq!(full.witnesses.len(), 4);
    }
}
