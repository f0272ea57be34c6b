//! Exhaustive generation of connected block graphs.
//!
//! Every connected block graph on `n >= 2` vertices is obtained from one on
//! fewer vertices by gluing a clique at a single vertex (remove any leaf
//! block to see this), so growing level by level from `K_1` reaches every
//! isomorphism class. Duplicates are removed with a canonical form of the
//! block–cut tree labelled by block sizes, which is a complete isomorphism
//! invariant for block graphs.

use std::collections::HashSet;

use crate::blocks::decompose;
use crate::families::cliques::attach_clique;
use crate::families::FamilyError;
use crate::graph::WeightedGraph;

pub const DEFAULT_ENUMERATION_BOUND: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Largest `max_vertices` accepted.
    pub bound: usize,
    /// Largest clique order used; `Some(2)` yields exactly the trees.
    pub max_clique: Option<usize>,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            bound: DEFAULT_ENUMERATION_BOUND,
            max_clique: None,
        }
    }
}

impl EnumerationOptions {
    pub fn enumerate(&self, max_vertices: usize) -> Result<BlockGraphEnumerator, FamilyError> {
        if max_vertices > self.bound {
            return Err(FamilyError::BoundExceeded {
                requested: max_vertices,
                bound: self.bound,
            });
        }
        Ok(BlockGraphEnumerator {
            max_vertices,
            max_clique: self.max_clique.unwrap_or(usize::MAX),
            levels: vec![Vec::new()],
            position: 0,
        })
    }
}

/// Every connected zero-weight block graph on at most `max_vertices`
/// vertices, one per isomorphism class, in order of vertex count.
pub fn enumerate_block_graphs(max_vertices: usize) -> Result<BlockGraphEnumerator, FamilyError> {
    EnumerationOptions::default().enumerate(max_vertices)
}

/// Streams block graphs level by level; a level is built when the previous
/// one is exhausted.
#[derive(Debug, Clone)]
pub struct BlockGraphEnumerator {
    max_vertices: usize,
    max_clique: usize,
    /// `levels[n]` holds the graphs on `n` vertices.
    levels: Vec<Vec<WeightedGraph>>,
    position: usize,
}

impl BlockGraphEnumerator {
    fn build_next_level(&mut self) {
        let n = self.levels.len();
        if n == 1 {
            self.levels.push(vec![WeightedGraph::empty(1)]);
            return;
        }
        let mut seen = HashSet::new();
        let mut level = Vec::new();
        for s in 2..=n.min(self.max_clique) {
            for base in &self.levels[n - s + 1] {
                for v in 0..base.vertex_count() {
                    let mut g = base.clone();
                    attach_clique(&mut g, v, s);
                    if seen.insert(canonical_form(&g)) {
                        level.push(g);
                    }
                }
            }
        }
        self.levels.push(level);
    }
}

impl Iterator for BlockGraphEnumerator {
    type Item = WeightedGraph;

    fn next(&mut self) -> Option<WeightedGraph> {
        loop {
            let current = self.levels.len() - 1;
            if let Some(g) = self.levels[current].get(self.position) {
                self.position += 1;
                return Some(g.clone());
            }
            if current >= self.max_vertices {
                return None;
            }
            self.build_next_level();
            self.position = 0;
        }
    }
}

/// Canonical string of the block–cut tree of a connected graph, with block
/// nodes labelled by their size. Two connected block graphs are isomorphic
/// exactly when their canonical forms agree. Disconnected graphs get the
/// sorted forms of their components joined by `+`.
pub fn canonical_form(g: &WeightedGraph) -> String {
    if !g.is_connected() {
        let mut parts: Vec<String> = g.components().iter().map(canonical_form).collect();
        parts.sort();
        return parts.join("+");
    }
    if g.is_empty() {
        return String::new();
    }
    let f = decompose(g);
    let blocks = f.blocks.len();
    let cuts: Vec<usize> = f.cut_vertices.iter().copied().collect();
    let node_count = blocks + cuts.len();
    let mut tree: Vec<Vec<usize>> = vec![Vec::new(); node_count];
    let mut labels: Vec<String> = f.blocks.iter().map(|b| format!("b{}", b.len())).collect();
    for (ci, &k) in cuts.iter().enumerate() {
        labels.push("c".to_string());
        for &b in &f.incidence[&k] {
            tree[blocks + ci].push(b);
            tree[b].push(blocks + ci);
        }
    }
    tree_centers(&tree)
        .into_iter()
        .map(|root| encode(&tree, &labels, root, usize::MAX))
        .min()
        .expect("non-empty tree has a centre")
}

fn tree_centers(tree: &[Vec<usize>]) -> Vec<usize> {
    let n = tree.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = tree.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in &tree[leaf] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

fn encode(tree: &[Vec<usize>], labels: &[String], node: usize, parent: usize) -> String {
    let mut children: Vec<String> = tree[node]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(tree, labels, w, node))
        .collect();
    children.sort();
    format!("({}{})", labels[node], children.concat())
}
