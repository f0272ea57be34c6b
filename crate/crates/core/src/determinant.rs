//! Exact determinants of `A(G) + diag(x)` and the coalescence / bridge /
//! path identities built on them.
//!
//! The determinant is computed by fraction-free (Bareiss) elimination over
//! big integers. Off-diagonal entries are 0/1, so clearing denominators
//! only needs row `i` scaled by the denominator of `x_i`; the product of
//! those factors is divided out at the end.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::blocks::is_block_graph;
use crate::graph::{GraphError, WeightedGraph};
use crate::rational::Rational;
use crate::reduction::{decide, ReductionError};

/// Default vertex bound for [`DetOracle`].
pub const DEFAULT_MAX_DET_VERTICES: usize = 64;

/// Environment variable read by [`DetOracle::from_env`].
pub const MAX_DET_VERTICES_ENV: &str = "BLOCKGRAPH_MAX_DET_VERTICES";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {order} vertices, above the determinant bound of {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
}

/// Exact determinant with a size guard.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DetOracle {
    pub max_vertices: usize,
}

impl Default for DetOracle {
    fn default() -> Self {
        DetOracle {
            max_vertices: DEFAULT_MAX_DET_VERTICES,
        }
    }
}

impl DetOracle {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        DetOracle { max_vertices }
    }

    /// Reads the bound from `BLOCKGRAPH_MAX_DET_VERTICES`, falling back to
    /// the default when unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(MAX_DET_VERTICES_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Self::with_max_vertices)
            .unwrap_or_default()
    }

    pub fn det(&self, g: &WeightedGraph) -> Result<Rational, OracleError> {
        let order = g.vertex_count();
        if order > self.max_vertices {
            return Err(OracleError::TooLarge {
                order,
                limit: self.max_vertices,
            });
        }
        let mut scale = BigInt::one();
        let matrix: Vec<Vec<BigInt>> = (0..order)
            .map(|u| {
                let d = g.weight(u).denom().clone();
                let row = (0..order)
                    .map(|v| {
                        if u == v {
                            g.weight(u).numer().clone()
                        } else if g.has_edge(u, v) {
                            d.clone()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect();
                scale *= d;
                row
            })
            .collect();
        Ok(Rational::new(bareiss_determinant(matrix), scale))
    }
}

/// `det(A(G) + diag(x))` under the default size bound. The null graph has
/// determinant 1.
pub fn det_exact(g: &WeightedGraph) -> Result<Rational, OracleError> {
    DetOracle::default().det(g)
}

/// Determinant of a square integer matrix by Bareiss elimination with row
/// exchanges on zero pivots. Every intermediate division is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let value = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = value / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `det(G1)·det(G2∖v2) + det(G1∖v1)·det(G2)`, which equals the determinant
/// of the coalescence of `g1` and `g2` at `v1 ~ v2` when the merged vertex
/// carries `x_{v1} + x_{v2}`.
pub fn coalescence_det(
    g1: &WeightedGraph,
    v1: usize,
    g2: &WeightedGraph,
    v2: usize,
) -> Result<Rational, OracleError> {
    let g1_minus = g1.without_vertices(&[v1])?;
    let g2_minus = g2.without_vertices(&[v2])?;
    Ok(det_exact(g1)? * det_exact(&g2_minus)? + det_exact(&g1_minus)? * det_exact(g2)?)
}

/// `det(G1)·det(G2) − det(G1∖v1)·det(G2∖v2)`: the determinant after joining
/// `v1` and `v2` by a bridge.
pub fn bridge_det(
    g1: &WeightedGraph,
    v1: usize,
    g2: &WeightedGraph,
    v2: usize,
) -> Result<Rational, OracleError> {
    let g1_minus = g1.without_vertices(&[v1])?;
    let g2_minus = g2.without_vertices(&[v2])?;
    Ok(det_exact(g1)? * det_exact(g2)? - det_exact(&g1_minus)? * det_exact(&g2_minus)?)
}

/// Coalesces two zero-weight pendant edges at `v` and reports whether the
/// result is singular (it always is).
pub fn double_pendant_edge_is_singular(g: &WeightedGraph, v: usize) -> Result<bool, OracleError> {
    Ok(det_exact(&with_two_pendant_edges(g, v)?)?.is_zero())
}

/// `g` with two new zero-weight leaves attached to `v`.
pub fn with_two_pendant_edges(g: &WeightedGraph, v: usize) -> Result<WeightedGraph, OracleError> {
    g.check_vertex(v)?;
    let mut h = g.clone();
    for _ in 0..2 {
        let leaf = h.push_vertex(Rational::zero());
        h.insert_edge(v, leaf);
    }
    Ok(h)
}

/// For a pendant edge `{u, v}` (`u` a zero-weight leaf hanging from `v`),
/// checks `det(G ∖ {u, v}) = −det(G)`.
pub fn pendant_edge_negation_holds(
    g: &WeightedGraph,
    u: usize,
    v: usize,
) -> Result<bool, OracleError> {
    check_pendant_edge(g, u, v)?;
    if !g.weight(u).is_zero() {
        return Err(OracleError::Precondition(format!(
            "leaf {u} must have weight 0"
        )));
    }
    let reduced = g.without_vertices(&[u, v])?;
    Ok(det_exact(&reduced)? == -det_exact(g)?)
}

/// Checks `det(G^(k)) = −det(G^(k−2))`, where `G^(k)` joins `v1` and `v2` by
/// a path with `k` interior vertices.
pub fn path_parity_check(
    g1: &WeightedGraph,
    v1: usize,
    g2: &WeightedGraph,
    v2: usize,
    interior: usize,
) -> Result<bool, OracleError> {
    if interior < 2 {
        return Err(OracleError::Precondition(format!(
            "path needs at least 2 interior vertices, got {interior}"
        )));
    }
    let long = WeightedGraph::connect_by_path(g1, v1, g2, v2, interior)?;
    let short = WeightedGraph::connect_by_path(g1, v1, g2, v2, interior - 2)?;
    Ok(det_exact(&long)? == -det_exact(&short)?)
}

/// Replaces the pendant edge `{u, v}` of `g` by the nonsingular tree `tree`,
/// glued at `attach ~ v`.
pub fn replace_pendant_edge_by_tree(
    g: &WeightedGraph,
    u: usize,
    v: usize,
    tree: &WeightedGraph,
    attach: usize,
) -> Result<WeightedGraph, OracleError> {
    check_pendant_edge(g, u, v)?;
    tree.check_vertex(attach)?;
    if !tree.is_tree() {
        return Err(OracleError::Precondition(
            "replacement is not a tree".into(),
        ));
    }
    if det_exact(tree)?.is_zero() {
        return Err(OracleError::Precondition(
            "replacement tree is singular".into(),
        ));
    }
    let host = g.without_vertices(&[u])?;
    let v_in_host = if v > u { v - 1 } else { v };
    let merged = g.weight(v) + tree.weight(attach);
    Ok(WeightedGraph::coalesce(
        &host, v_in_host, tree, attach, merged,
    )?)
}

/// Whether replacing the pendant edge `{u, v}` by a nonsingular tree leaves
/// the singularity verdict unchanged. Both sides are decided by reduction.
pub fn pendant_tree_replacement_check(
    g: &WeightedGraph,
    u: usize,
    v: usize,
    tree: &WeightedGraph,
    attach: usize,
) -> Result<bool, OracleError> {
    if !is_block_graph(g) {
        return Err(OracleError::Reduction(ReductionError::NotBlockGraph));
    }
    let replaced = replace_pendant_edge_by_tree(g, u, v, tree, attach)?;
    Ok(decide(g)?.singular == decide(&replaced)?.singular)
}

fn check_pendant_edge(g: &WeightedGraph, u: usize, v: usize) -> Result<(), OracleError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) || g.degree(u) != 1 || g.degree(v) < 2 {
        return Err(OracleError::Precondition(format!(
            "{{{u}, {v}}} is not a pendant edge with cut vertex {v}"
        )));
    }
    Ok(())
}
