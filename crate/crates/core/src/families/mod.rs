//! Named families of block graphs, their closed-form singularity tests, and
//! generators used by the verification suites.

mod cliques;
mod enumerate;
mod forest;
mod random;
mod tree_of;

use thiserror::Error;

use crate::graph::GraphError;

pub use cliques::{
    check_mnktree_condition, clique_decorated_tree, make_coalesced_cliques, make_nmk,
    predict_coalesced_singular, predict_nmk_singular, reduced_central_weights, CoalescedCliqueSpec,
    NmkSpec,
};
pub use enumerate::{
    canonical_form, enumerate_block_graphs, BlockGraphEnumerator, EnumerationOptions,
    DEFAULT_ENUMERATION_BOUND,
};
pub use forest::{forest_has_perfect_matching, is_b31, make_pendant_edges_at_cuts};
pub use random::{
    default_weight_pool, random_block_graph, random_block_graph_with, random_tree,
    MAX_RANDOM_CLIQUE,
};
pub use tree_of::{
    check_tree_b31_conditions, make_tree_of_block_graphs, SkeletonEdge, TreeOfBlockGraphsSpec,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("input is not a block graph")]
    NotBlockGraph,
    #[error("input is not a forest")]
    NotForest,
    #[error("component graph {0} is not a B31 block graph")]
    NotB31(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration bound {bound} exceeded (requested {requested})")]
    BoundExceeded { requested: usize, bound: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
