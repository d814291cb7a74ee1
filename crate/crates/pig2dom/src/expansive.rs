//! Expansive connected sets, the extension rule, and the width map.
//!
//! An *expansive* connected set of size `j >= 3` represented by an edge
//! `(w1, w2)` is the farthest-reaching connected set of that size whose
//! first two vertices are `w1 < w2`: for `j >= 5` it follows the iterated
//! reach chain of `w1` and closes with the packed pair `(b - 1, b)`, where
//! `b` is the reach of the chain's last vertex; size 4 closes with
//! `f_r(w2)` preceded by `min(f_r(w1), f_r(w2) - 1)`; size 3 is
//! `{w1, w2, f_r(w1)}`.  Each set is fully determined by `(w1, w2, j)`.
//! The extension rule maps a set's last two vertices to the representative
//! edge of the farthest possible next block; candidate and acceptance test
//! together define the *j-extension* relation both solver digraphs are
//! built on.

use crate::straight::{StraightGraph, Vertex};

/// An expansive connected set, materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansiveBlock {
    /// Representative edge `(w1, w2)`.
    pub repr: (Vertex, Vertex),
    /// The full vertex sequence, strictly increasing, `repr.0` and `repr.1`
    /// first.
    pub vertices: Vec<Vertex>,
}

impl ExpansiveBlock {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

fn is_edge(g: &StraightGraph, (u, v): (Vertex, Vertex)) -> bool {
    u >= 1 && u < v && v <= g.reach(u)
}

/// Last two vertices of the expansive set of size `j` represented by `e`,
/// or `None` when no such set exists.  O(1) for `j <= 4`, O(j) otherwise.
fn block_last_two(g: &StraightGraph, e: (Vertex, Vertex), j: usize) -> Option<(Vertex, Vertex)> {
    let (w1, w2) = e;
    if !is_edge(g, e) || j < 3 {
        return None;
    }
    let f1 = g.reach(w1);
    if w2 >= f1 {
        return None; // w2 must precede f_r(w1) strictly
    }
    match j {
        3 => Some((w2, f1)),
        4 => {
            // w4 sits at f_r(w2); w3 at f_r(w1) when that leaves a gap,
            // otherwise packed right below w4.  The packed form matters when
            // f_r(w1) = f_r(w2): the set {w1, w2, f_r(w2)-1, f_r(w2)} is the
            // farthest size-4 set even though the two reaches collide.
            let f2 = g.reach(w2);
            (g.out_degree(w2) >= 2).then_some((f1.min(f2 - 1), f2))
        }
        _ => {
            // Walk the reach chain up to w_{j-2} = f_r^{j-4}(w1).
            let mut c = f1;
            for _ in 0..j - 5 {
                let next = g.reach(c);
                if next == c {
                    return None; // chain stalls, no set of this size
                }
                c = next;
            }
            if g.out_degree(c) < 2 {
                return None; // w_{j-1} = w_j - 1 would not clear the chain
            }
            let b = g.reach(c);
            Some((b - 1, b))
        }
    }
}

/// The candidate edge of the extension rule applied to the last two vertices
/// `(w_{j-1}, w_j)` of a block, with the acceptance test folded in: the
/// result `(x, y)` must start past the block's neighborhood
/// (`f_r(w_j) < x`) and must itself represent an expansive set
/// (`d⁺(x) >= 2`).  Returns `None` when either reach successor runs off the
/// end of the order; termination there is the pre-sink edge's job.
pub(crate) fn extension_candidate(
    g: &StraightGraph,
    w_jm1: Vertex,
    w_j: Vertex,
) -> Option<(Vertex, Vertex)> {
    let n = g.n();
    let a1 = g.reach(w_jm1) + 1; // first vertex not adjacent to w_{j-1}
    if a1 > n {
        return None;
    }
    let a2 = g.reach(w_j) + 1;
    if a2 > n {
        return None;
    }
    let u = g.reach(a1);
    let z = g.reach(a2);

    let (x, y) = if u == z {
        if u < 2 {
            return None;
        }
        match g.out_degree(u - 1) {
            1 => {
                if u < 3 {
                    return None;
                }
                (u - 2, u - 1)
            }
            d if d > 1 => (u - 1, u),
            _ => (u, z),
        }
    } else if g.out_degree(u) == 1 {
        if u < 2 {
            return None;
        }
        (u - 1, u)
    } else if g.reach(u) == z && g.out_degree(u) > 1 {
        (u, z - 1)
    } else {
        (u, z)
    };

    if x <= g.reach(w_j) {
        return None;
    }
    if g.out_degree(x) < 2 {
        return None;
    }
    if !is_edge(g, (x, y)) {
        return None;
    }
    Some((x, y))
}

/// The unique expansive connected set of size `j` represented by `e`, if any.
pub fn build_block(g: &StraightGraph, e: (Vertex, Vertex), j: usize) -> Option<ExpansiveBlock> {
    let (last1, last2) = block_last_two(g, e, j)?;
    let (w1, w2) = e;
    let mut vertices = Vec::with_capacity(j);
    vertices.push(w1);
    vertices.push(w2);
    if j == 3 {
        vertices.push(last2);
    } else if j == 4 {
        vertices.push(last1);
        vertices.push(last2);
    } else {
        let mut c = g.reach(w1);
        vertices.push(c);
        for _ in 0..j - 5 {
            c = g.reach(c);
            vertices.push(c);
        }
        vertices.push(last1);
        vertices.push(last2);
    }
    debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
    Some(ExpansiveBlock { repr: e, vertices })
}

/// The j-extension of `e`: the representative edge of the farthest next
/// block after the size-`j` expansive set represented by `e`.
pub fn j_extension(g: &StraightGraph, e: (Vertex, Vertex), j: usize) -> Option<(Vertex, Vertex)> {
    let (w_jm1, w_j) = block_last_two(g, e, j)?;
    extension_candidate(g, w_jm1, w_j)
}

/// All pairs `(j, g)` such that `g` is the j-extension of `e`, via one
/// incremental walk of the reach chain (O(n) per edge).
pub fn max_extension_enumeration(
    g: &StraightGraph,
    e: (Vertex, Vertex),
) -> Vec<(usize, (Vertex, Vertex))> {
    let (w1, w2) = e;
    let mut out = Vec::new();
    if !is_edge(g, e) {
        return out;
    }
    let f1 = g.reach(w1);
    if w2 >= f1 {
        return out;
    }
    if let Some(target) = extension_candidate(g, w2, f1) {
        out.push((3, target));
    }
    if let Some((last1, last2)) = block_last_two(g, e, 4) {
        if let Some(target) = extension_candidate(g, last1, last2) {
            out.push((4, target));
        }
    }
    // j >= 5: c tracks w_{j-2} = f_r^{j-4}(w1).  Validity is not monotone in
    // j (the chain's out-degree may dip to 1 and recover), so each j is
    // tested on its own while the chain keeps moving.
    let mut c = f1;
    let mut j = 5;
    loop {
        if g.out_degree(c) >= 2 {
            let b = g.reach(c);
            if let Some(target) = extension_candidate(g, b - 1, b) {
                out.push((j, target));
            }
        }
        let next = g.reach(c);
        if next == c {
            break;
        }
        c = next;
        j += 1;
    }
    out
}

/// Per-vertex width data: the least `kappa >= 1` with
/// `d⁺(f_r^kappa(v)) >= 2` together with `z = f_r^kappa(v)`.  Entries with
/// no such `kappa` store `(n + 1, i)`.
#[derive(Debug, Clone)]
pub struct WidthMap {
    kappa: Vec<usize>,
    z: Vec<Vertex>,
    infinity: usize,
}

impl WidthMap {
    /// The marker value `n + 1` standing for an unbounded width.
    pub fn infinity(&self) -> usize {
        self.infinity
    }

    /// Raw entry `(kappa, z)` for vertex `i`.
    pub fn entry(&self, i: Vertex) -> (usize, Vertex) {
        (self.kappa[i], self.z[i])
    }

    /// `(kappa, f_r^kappa(v_i))` when the width is finite.
    pub fn finite(&self, i: Vertex) -> Option<(usize, Vertex)> {
        (self.kappa[i] < self.infinity).then(|| (self.kappa[i], self.z[i]))
    }
}

/// Builds the width map in one backward traversal (O(n)).
pub fn build_width_map(g: &StraightGraph) -> WidthMap {
    let n = g.n();
    let infinity = n + 1;
    let mut kappa = vec![0usize; n + 1];
    let mut z = vec![0usize; n + 1];
    for i in (1..=n).rev() {
        let f = g.reach(i);
        match g.out_degree(f) {
            0 => {
                kappa[i] = infinity;
                z[i] = i;
            }
            d if d >= 2 => {
                kappa[i] = 1;
                z[i] = f;
            }
            _ => {
                if kappa[f] >= infinity {
                    kappa[i] = infinity;
                    z[i] = i;
                } else {
                    kappa[i] = kappa[f] + 1;
                    z[i] = z[f];
                }
            }
        }
    }
    WidthMap { kappa, z, infinity }
}
