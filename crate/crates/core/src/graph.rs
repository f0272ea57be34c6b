//! Simple undirected graphs with exact vertex weights.
//!
//! A [`WeightedGraph`] is the pair `(G, x)`: its matrix is the adjacency
//! matrix of `G` with the weight vector `x` on the diagonal. Vertex ids are
//! always dense `0..n`; every vertex also carries a [`VertexLabel`] that
//! survives deletions so reduction traces can name the original vertices.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::rational::Rational;

/// Stable vertex name, preserved across induced subgraphs and reductions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabel(pub usize);

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    adjacency: Vec<BTreeSet<usize>>,
    weights: Vec<Rational>,
    labels: Vec<VertexLabel>,
}

impl WeightedGraph {
    /// Builds `(G, x)` from an edge list. An empty `weights` vector means all
    /// zero weights; otherwise it must have one entry per vertex. Repeated
    /// edges (in either orientation) collapse to one.
    pub fn new(
        n: usize,
        edges: &[(usize, usize)],
        weights: Vec<Rational>,
    ) -> Result<Self, GraphError> {
        let weights = if weights.is_empty() {
            vec![Rational::zero(); n]
        } else if weights.len() != n {
            return Err(GraphError::WeightCount {
                expected: n,
                got: weights.len(),
            });
        } else {
            weights
        };
        let mut adjacency = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Ok(WeightedGraph {
            adjacency,
            weights,
            labels: (0..n).map(VertexLabel).collect(),
        })
    }

    /// Zero-weight graph, i.e. the plain graph `G = (G, o)`.
    pub fn unweighted(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::new(n, edges, Vec::new())
    }

    /// `n` isolated zero-weight vertices.
    pub fn empty(n: usize) -> Self {
        WeightedGraph {
            adjacency: vec![BTreeSet::new(); n],
            weights: vec![Rational::zero(); n],
            labels: (0..n).map(VertexLabel).collect(),
        }
    }

    /// The clique `K_n` with zero weights.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// The path `P_n` on `n` vertices (`0 - 1 - ... - n-1`), zero weights.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v < self.vertex_count()
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.vertex_count(),
            })
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|set| set.contains(&v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, set)| set.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn weight(&self, v: usize) -> &Rational {
        &self.weights[v]
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn label(&self, v: usize) -> VertexLabel {
        self.labels[v]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    /// Current id of the vertex carrying `label`, if it is still present.
    pub fn vertex_with_label(&self, label: VertexLabel) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn with_weight(mut self, v: usize, weight: Rational) -> Result<Self, GraphError> {
        self.check_vertex(v)?;
        self.weights[v] = weight;
        Ok(self)
    }

    pub fn with_weights(mut self, weights: Vec<Rational>) -> Result<Self, GraphError> {
        if weights.len() != self.vertex_count() {
            return Err(GraphError::WeightCount {
                expected: self.vertex_count(),
                got: weights.len(),
            });
        }
        self.weights = weights;
        Ok(self)
    }

    /// Same graph with every weight reset to zero.
    pub fn zero_weighted(&self) -> Self {
        WeightedGraph {
            weights: vec![Rational::zero(); self.vertex_count()],
            ..self.clone()
        }
    }

    /// Forget the current labels and name each vertex by its id.
    pub fn with_identity_labels(mut self) -> Self {
        self.labels = (0..self.vertex_count()).map(VertexLabel).collect();
        self
    }

    /// Induced subgraph on `keep`, re-indexed densely in increasing id
    /// order. Weights are restricted and labels carried over.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Self, GraphError> {
        for &v in keep {
            self.check_vertex(v)?;
        }
        let keep: BTreeSet<usize> = keep.iter().copied().collect();
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let adjacency = keep
            .iter()
            .map(|&old| {
                self.adjacency[old]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        Ok(WeightedGraph {
            adjacency,
            weights: keep.iter().map(|&v| self.weights[v].clone()).collect(),
            labels: keep.iter().map(|&v| self.labels[v]).collect(),
        })
    }

    /// `G \ Q` for a vertex set `Q`.
    pub fn without_vertices(&self, remove: &[usize]) -> Result<Self, GraphError> {
        for &v in remove {
            self.check_vertex(v)?;
        }
        let remove: BTreeSet<usize> = remove.iter().copied().collect();
        let keep: Vec<usize> = (0..self.vertex_count())
            .filter(|v| !remove.contains(v))
            .collect();
        self.induced_subgraph(&keep)
    }

    /// Disjoint union; vertices of `graphs[i]` follow those of `graphs[i-1]`.
    /// The result is labelled by its own vertex ids.
    pub fn disjoint_union(graphs: &[&WeightedGraph]) -> Self {
        let mut out = WeightedGraph::empty(0);
        for g in graphs {
            let offset = out.vertex_count();
            out.adjacency.extend(
                g.adjacency
                    .iter()
                    .map(|set| set.iter().map(|&w| w + offset).collect::<BTreeSet<_>>()),
            );
            out.weights.extend(g.weights.iter().cloned());
        }
        out.with_identity_labels()
    }

    /// Identify `v1 ∈ g1` with `v2 ∈ g2`. Vertices of `g1` keep their ids,
    /// `v2` becomes `v1`, and the rest of `g2` follows in order.
    pub fn coalesce(
        g1: &WeightedGraph,
        v1: usize,
        g2: &WeightedGraph,
        v2: usize,
        merged_weight: Rational,
    ) -> Result<Self, GraphError> {
        g1.check_vertex(v1)?;
        g2.check_vertex(v2)?;
        let n1 = g1.vertex_count();
        let map = |w: usize| match w.cmp(&v2) {
            std::cmp::Ordering::Less => n1 + w,
            std::cmp::Ordering::Equal => v1,
            std::cmp::Ordering::Greater => n1 + w - 1,
        };
        let mut out = WeightedGraph::empty(n1 + g2.vertex_count() - 1);
        for (u, v) in g1.edges() {
            out.insert_edge(u, v);
        }
        for (u, v) in g2.edges() {
            out.insert_edge(map(u), map(v));
        }
        for (v, w) in g1.weights.iter().enumerate() {
            out.weights[v] = w.clone();
        }
        for (v, w) in g2.weights.iter().enumerate() {
            if v != v2 {
                out.weights[map(v)] = w.clone();
            }
        }
        out.weights[v1] = merged_weight;
        Ok(out)
    }

    /// Disjoint union of `g1` and `g2` plus the bridge `{v1, v2}`. Vertex `v2`
    /// of `g2` becomes `n1 + v2`.
    pub fn connect_by_edge(
        g1: &WeightedGraph,
        v1: usize,
        g2: &WeightedGraph,
        v2: usize,
    ) -> Result<Self, GraphError> {
        Self::connect_by_path(g1, v1, g2, v2, 0)
    }

    /// Joins `v1 ∈ g1` and `v2 ∈ g2` by a path with `interior` new
    /// zero-weight vertices strictly between them, so `interior = 0` is a
    /// single bridge edge. A path counted by its total order `k` (endpoints
    /// included) has `k - 2` interior vertices.
    ///
    /// Layout: `g1`, then `g2` shifted by `n1`, then the interior vertices
    /// in order from `v1` towards `v2`.
    pub fn connect_by_path(
        g1: &WeightedGraph,
        v1: usize,
        g2: &WeightedGraph,
        v2: usize,
        interior: usize,
    ) -> Result<Self, GraphError> {
        g1.check_vertex(v1)?;
        g2.check_vertex(v2)?;
        let n1 = g1.vertex_count();
        let n2 = g2.vertex_count();
        let mut out = WeightedGraph::disjoint_union(&[g1, g2, &WeightedGraph::empty(interior)]);
        let mut prev = v1;
        for i in 0..interior {
            let next = n1 + n2 + i;
            out.insert_edge(prev, next);
            prev = next;
        }
        out.insert_edge(prev, n1 + v2);
        Ok(out)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn component_vertex_sets(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut members = Vec::new();
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn components(&self) -> Vec<WeightedGraph> {
        self.component_vertex_sets()
            .iter()
            .map(|set| {
                self.induced_subgraph(set)
                    .expect("component ids are in range")
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_vertex_sets().len() <= 1
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0
            && self.is_connected()
            && self.edge_count() + 1 == self.vertex_count()
    }

    /// Acyclic (every component is a tree).
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_vertex_sets().len() == self.vertex_count()
    }

    /// Whether the vertices in `set` are pairwise adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        degrees
    }

    /// Relabels vertex `v` as `perm[v]`, moving its weight and label along.
    /// `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.vertex_count();
        assert_eq!(perm.len(), n, "permutation length must match vertex count");
        let mut out = WeightedGraph::empty(n);
        for (u, v) in self.edges() {
            out.insert_edge(perm[u], perm[v]);
        }
        for (v, &target) in perm.iter().enumerate() {
            out.weights[target] = self.weights[v].clone();
            out.labels[target] = self.labels[v];
        }
        out
    }

    /// `A(G) + diag(x)` as a dense matrix.
    pub fn weighted_adjacency_matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.vertex_count();
        (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| {
                        if u == v {
                            self.weights[u].clone()
                        } else if self.has_edge(u, v) {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Appends a new vertex and returns its id. Its label is one past the
    /// largest label in use.
    pub(crate) fn push_vertex(&mut self, weight: Rational) -> usize {
        let label = self.labels.iter().map(|l| l.0 + 1).max().unwrap_or(0);
        self.adjacency.push(BTreeSet::new());
        self.weights.push(weight);
        self.labels.push(VertexLabel(label));
        self.vertex_count() - 1
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
    }
}

impl fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightedGraph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .field("weights", &self.weights)
            .finish()
    }
}
