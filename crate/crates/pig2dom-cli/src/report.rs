//! JSON output schema.

use pig2dom::{Solution, StraightGraph};
use serde::Serialize;

#[derive(Serialize)]
pub struct BlockReport {
    pub repr: [usize; 2],
    pub size: usize,
    pub vertices: Vec<usize>,
}

/// Schema: `{size, vertices, blocks, algorithm, elapsed_ms}` plus the
/// internal-to-input `permutation` for the intervals/edges dialects and an
/// `infeasible` flag when there is no solution.
#[derive(Serialize)]
pub struct SolveReport {
    pub algorithm: String,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub infeasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<BlockReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
}

impl SolveReport {
    pub fn infeasible(algorithm: &str, elapsed_ms: f64) -> Self {
        SolveReport {
            algorithm: algorithm.to_string(),
            elapsed_ms,
            infeasible: true,
            size: None,
            vertices: None,
            blocks: None,
            permutation: None,
        }
    }

    pub fn solved(
        algorithm: &str,
        elapsed_ms: f64,
        size: usize,
        vertices: Vec<usize>,
        blocks: Vec<BlockReport>,
        permutation: Option<Vec<usize>>,
    ) -> Self {
        SolveReport {
            algorithm: algorithm.to_string(),
            elapsed_ms,
            infeasible: false,
            size: Some(size),
            vertices: Some(vertices),
            blocks: Some(blocks),
            permutation: None,
        }
        .with_permutation(permutation)
    }

    fn with_permutation(mut self, permutation: Option<Vec<usize>>) -> Self {
        self.permutation = permutation;
        self
    }
}

/// Blocks of a solution, relabeled through `map`.
pub fn blocks_of_solution(sol: &Solution, map: impl Fn(usize) -> usize) -> Vec<BlockReport> {
    sol.blocks
        .iter()
        .map(|b| BlockReport {
            repr: [map(b.repr.0), map(b.repr.1)],
            size: b.vertices.len(),
            vertices: b.vertices.iter().map(|&v| map(v)).collect(),
        })
        .collect()
}

/// Block decomposition of an arbitrary witness: maximal runs of vertices in
/// which consecutive members are adjacent.
pub fn blocks_of_witness(
    g: &StraightGraph,
    witness: &[usize],
    map: impl Fn(usize) -> usize,
) -> Vec<BlockReport> {
    let mut out = Vec::new();
    let mut start = 0usize;
    for i in 1..=witness.len() {
        if i == witness.len() || !g.adjacent(witness[i - 1], witness[i]) {
            let run = &witness[start..i];
            out.push(BlockReport {
                repr: [map(run[0]), map(*run.get(1).unwrap_or(&run[0]))],
                size: run.len(),
                vertices: run.iter().map(|&v| map(v)).collect(),
            });
            start = i;
        }
    }
    out
}
