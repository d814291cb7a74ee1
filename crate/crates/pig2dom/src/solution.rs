//! Solver output.

use crate::straight::{AugmentedGraph, Vertex};

/// One block of a solution, in original (pre-augmentation) labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Representative edge: the block's first two vertices.
    pub repr: (Vertex, Vertex),
    /// All vertices of the block, strictly increasing.
    pub vertices: Vec<Vertex>,
}

impl Block {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// A minimum 2-dom together with its block decomposition and the weight of
/// the digraph path it was decoded from (always `size + 6`, the artificial
/// source and pre-sink blocks included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub size: usize,
    pub blocks: Vec<Block>,
    /// Sorted union of the blocks, original labels.
    pub vertices: Vec<Vertex>,
    pub total_path_weight: usize,
}

/// Drops the source and pre-sink blocks from a decoded solution, shifts the
/// rest back to original labels, and packages the result.
pub(crate) fn assemble(aug: &AugmentedGraph, blocks: Vec<Block>, total: usize) -> Solution {
    let n = aug.graph().n();
    debug_assert_eq!(
        blocks.first().map(|b| b.vertices.clone()),
        Some(vec![1, 2, 3])
    );
    debug_assert_eq!(
        blocks.last().map(|b| b.vertices.clone()),
        Some(vec![n - 2, n - 1, n])
    );
    let inner: Vec<Block> = blocks[1..blocks.len() - 1]
        .iter()
        .map(|b| Block {
            repr: (
                b.repr.0 - AugmentedGraph::OFFSET,
                b.repr.1 - AugmentedGraph::OFFSET,
            ),
            vertices: b
                .vertices
                .iter()
                .map(|&v| v - AugmentedGraph::OFFSET)
                .collect(),
        })
        .collect();
    let vertices: Vec<Vertex> = inner
        .iter()
        .flat_map(|b| b.vertices.iter().copied())
        .collect();
    debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
    Solution {
        size: vertices.len(),
        blocks: inner,
        vertices,
        total_path_weight: total,
    }
}
