//! Blocks (biconnected components), cut vertices, and pendant blocks.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::WeightedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("block index {index} out of range ({count} blocks)")]
    InvalidBlock { index: usize, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    pub is_clique: bool,
    /// Members of `vertices` that are cut vertices of the whole graph.
    pub cut_vertices: Vec<usize>,
}

impl Block {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn non_cut_vertices(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .copied()
            .filter(|v| self.cut_vertices.binary_search(v).is_err())
            .collect()
    }
}

/// A pendant block and its cut vertex; `cut` is `None` when the block is a
/// whole connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PendantBlock {
    pub block: usize,
    pub cut: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutForest {
    pub blocks: Vec<Block>,
    pub cut_vertices: BTreeSet<usize>,
    /// Cut vertex -> indices of the blocks containing it.
    pub incidence: BTreeMap<usize, Vec<usize>>,
}

impl BlockCutForest {
    pub fn block(&self, index: usize) -> Result<&Block, BlockError> {
        self.blocks.get(index).ok_or(BlockError::InvalidBlock {
            index,
            count: self.blocks.len(),
        })
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.contains(&v)
    }

    /// Every block containing at most one cut vertex.
    pub fn pendant_blocks(&self) -> Vec<PendantBlock> {
        self.blocks
            .iter()
            .enumerate()
            .filter_map(|(block, b)| match b.cut_vertices.as_slice() {
                [] => Some(PendantBlock { block, cut: None }),
                [k] => Some(PendantBlock {
                    block,
                    cut: Some(*k),
                }),
                _ => None,
            })
            .collect()
    }

    /// Vertices of block `index` that are not cut vertices.
    pub fn non_cut_vertices(&self, index: usize) -> Result<Vec<usize>, BlockError> {
        Ok(self.block(index)?.non_cut_vertices())
    }
}

/// Splits `g` into blocks with an iterative Hopcroft–Tarjan DFS. Isolated
/// vertices become blocks of size one.
pub fn decompose(g: &WeightedGraph) -> BlockCutForest {
    let n = g.vertex_count();
    let adjacency: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut depth = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut vertex_sets: Vec<Vec<usize>> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        low[root] = 0;
        if adjacency[root].is_empty() {
            vertex_sets.push(vec![root]);
            continue;
        }
        // (vertex, parent, next neighbour position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(frame) = stack.last_mut() {
            let (u, parent, pos) = *frame;
            if pos < adjacency[u].len() {
                frame.2 += 1;
                let w = adjacency[u][pos];
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    low[w] = depth[w];
                    edge_stack.push((u, w));
                    stack.push((w, u, 0));
                } else if w != parent && depth[w] < depth[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(depth[w]);
                }
                continue;
            }
            stack.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[u]);
            if low[u] >= depth[parent] {
                let mut set = BTreeSet::new();
                while let Some((a, b)) = edge_stack.pop() {
                    set.insert(a);
                    set.insert(b);
                    if (a, b) == (parent, u) {
                        break;
                    }
                }
                vertex_sets.push(set.into_iter().collect());
            }
        }
    }

    let mut membership = vec![0usize; n];
    for set in &vertex_sets {
        for &v in set {
            membership[v] += 1;
        }
    }
    let cut_vertices: BTreeSet<usize> = (0..n).filter(|&v| membership[v] >= 2).collect();

    let mut blocks: Vec<Block> = vertex_sets
        .into_iter()
        .map(|vertices| Block {
            is_clique: g.is_clique(&vertices),
            cut_vertices: vertices
                .iter()
                .copied()
                .filter(|v| cut_vertices.contains(v))
                .collect(),
            vertices,
        })
        .collect();
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));

    let mut incidence: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, b) in blocks.iter().enumerate() {
        for &k in &b.cut_vertices {
            incidence.entry(k).or_default().push(i);
        }
    }

    BlockCutForest {
        blocks,
        cut_vertices,
        incidence,
    }
}

/// Every block of `g` induces a complete subgraph.
pub fn is_block_graph(g: &WeightedGraph) -> bool {
    decompose(g).blocks.iter().all(|b| b.is_clique)
}
