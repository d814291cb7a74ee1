//! Minimum total 2-dominating sets of proper interval graphs.
//!
//! A set of vertices `W` is a *total 2-dominating set* (a *2-dom* for short)
//! when every vertex of the graph, including the members of `W` themselves,
//! has at least two neighbors in `W`.  This crate computes a minimum 2-dom of
//! a proper interval graph in `O(m)` time.
//!
//! Proper interval graphs are handled through their *straight* encoding: a
//! vertex order `v_1 < … < v_n` together with a monotone reach map, where
//! `v_i v_j` is an edge iff `i < j <= reach(i)` (see [`StraightGraph`]).  The
//! solver works on two acyclic digraphs built over the edges of the graph:
//!
//! * [`reference`] — the quadratic reference digraph `D(G)` whose
//!   source-to-sink paths encode exactly the candidate solutions.  `O(nm)`.
//! * [`reduced`] — the compressed digraph `R(G)` with two copies of every
//!   edge, in which long blocks are factored through *compact* edges.  The
//!   full pipeline ([`reduced::solve`]) runs in `O(m)` given a straight
//!   encoding.
//!
//! Both pipelines are cross-checked against a definition-only brute-force
//! [`oracle`], and reproducible random instances come from [`gen`].

pub mod dot;
pub mod expansive;
pub mod formats;
pub mod gen;
pub mod oracle;
pub mod recognition;
pub mod reduced;
pub mod reference;
pub mod solution;
pub mod straight;

pub use expansive::{build_width_map, ExpansiveBlock, WidthMap};
pub use oracle::VertexSet;
pub use reduced::ReducedDag;
pub use reference::WeightedDag;
pub use solution::{Block, Solution};
pub use straight::{AugmentedGraph, GraphError, StraightGraph};
