//! Exact nonsingularity tests for vertex-weighted block graphs.
//!
//! A block graph is a graph whose biconnected components are cliques. Given
//! rational vertex weights `x`, the crate decides whether `A(G) + diag(x)` is
//! singular by repeatedly deleting or contracting pendant blocks
//! ([`reduction::decide`]), and cross-checks the answer against an exact
//! fraction-free determinant ([`determinant::det_exact`]).

pub mod blocks;
pub mod determinant;
pub mod families;
pub mod format;
pub mod gallery;
pub mod graph;
pub mod rational;
pub mod reduction;
pub mod verify;

pub use blocks::{decompose, is_block_graph, Block, BlockCutForest, BlockError, PendantBlock};
pub use determinant::{det_exact, DetOracle, OracleError};
pub use format::{parse_graph, write_graph, ParseError};
pub use graph::{GraphError, VertexLabel, WeightedGraph};
pub use rational::Rational;
pub use reduction::{decide, reduce, Verdict, Witness};
