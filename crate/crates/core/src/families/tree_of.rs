use std::collections::BTreeSet;

use crate::blocks::{decompose, is_block_graph};
use crate::families::{is_b31, FamilyError};
use crate::graph::WeightedGraph;

/// A skeleton edge joining vertex `u` of graph `from` to vertex `v` of graph
/// `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SkeletonEdge {
    pub from: usize,
    pub u: usize,
    pub to: usize,
    pub v: usize,
}

/// Block graphs `G_1..G_k` joined by one bridge per edge of a skeleton tree
/// on `k` nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeOfBlockGraphsSpec {
    graphs: Vec<WeightedGraph>,
    skeleton: Vec<SkeletonEdge>,
}

impl TreeOfBlockGraphsSpec {
    pub fn new(
        graphs: Vec<WeightedGraph>,
        skeleton: Vec<SkeletonEdge>,
    ) -> Result<Self, FamilyError> {
        let k = graphs.len();
        if k == 0 {
            return Err(FamilyError::InvalidSpec("no component graphs".into()));
        }
        if skeleton.len() + 1 != k {
            return Err(FamilyError::InvalidSpec(format!(
                "a skeleton tree on {k} nodes needs {} edges, got {}",
                k - 1,
                skeleton.len()
            )));
        }
        if let Some(i) = graphs.iter().position(|g| !is_block_graph(g)) {
            return Err(FamilyError::InvalidSpec(format!(
                "graph {i} is not a block graph"
            )));
        }
        // union-find over graph indices; k - 1 edges without a cycle span all k
        let mut parent: Vec<usize> = (0..k).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &skeleton {
            if e.from >= k || e.to >= k {
                return Err(FamilyError::InvalidSpec(format!(
                    "skeleton edge {e:?} names a graph outside 0..{k}"
                )));
            }
            graphs[e.from].check_vertex(e.u)?;
            graphs[e.to].check_vertex(e.v)?;
            let (a, b) = (root(&mut parent, e.from), root(&mut parent, e.to));
            if a == b {
                return Err(FamilyError::InvalidSpec(format!(
                    "skeleton edge {e:?} closes a cycle"
                )));
            }
            parent[a] = b;
        }
        Ok(TreeOfBlockGraphsSpec { graphs, skeleton })
    }

    pub fn graphs(&self) -> &[WeightedGraph] {
        &self.graphs
    }

    pub fn skeleton(&self) -> &[SkeletonEdge] {
        &self.skeleton
    }

    fn offsets(&self) -> Vec<usize> {
        self.graphs
            .iter()
            .scan(0, |acc, g| {
                let start = *acc;
                *acc += g.vertex_count();
                Some(start)
            })
            .collect()
    }

    /// Endpoints of every skeleton edge as ids of the assembled graph.
    pub fn skeleton_edges_global(&self) -> Vec<(usize, usize)> {
        let offsets = self.offsets();
        self.skeleton
            .iter()
            .map(|e| (offsets[e.from] + e.u, offsets[e.to] + e.v))
            .collect()
    }
}

/// Disjoint union of the component graphs (in order) plus the skeleton
/// edges.
pub fn make_tree_of_block_graphs(spec: &TreeOfBlockGraphsSpec) -> WeightedGraph {
    let parts: Vec<&WeightedGraph> = spec.graphs.iter().collect();
    let mut g = WeightedGraph::disjoint_union(&parts);
    for (a, b) in spec.skeleton_edges_global() {
        g.insert_edge(a, b);
    }
    g
}

/// For a tree of B31 block graphs: no two skeleton edges share a vertex,
/// and every block of the assembled graph with at least three vertices keeps
/// a non-cut vertex. Together these guarantee nonsingularity.
pub fn check_tree_b31_conditions(spec: &TreeOfBlockGraphsSpec) -> Result<bool, FamilyError> {
    for (i, g) in spec.graphs.iter().enumerate() {
        if !is_b31(g)? {
            return Err(FamilyError::NotB31(i));
        }
    }
    let mut skeleton_vertices = BTreeSet::new();
    for (a, b) in spec.skeleton_edges_global() {
        if !skeleton_vertices.insert(a) || !skeleton_vertices.insert(b) {
            return Ok(false);
        }
    }
    let f = decompose(&make_tree_of_block_graphs(spec));
    Ok(f.blocks
        .iter()
        .filter(|b| b.len() >= 3)
        .all(|b| b.cut_vertices.len() < b.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::decompose;

    fn edge(from: usize, u: usize, to: usize, v: usize) -> SkeletonEdge {
        SkeletonEdge { from, u, to, v }
    }

    #[test]
    fn two_triangles() {
        let k3 = WeightedGraph::complete(3);
        let spec =
            TreeOfBlockGraphsSpec::new(vec![k3.clone(), k3], vec![edge(0, 2, 1, 0)]).unwrap();
        let g = make_tree_of_block_graphs(&spec);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(decompose(&g).blocks.len(), 3);
        assert!(g.has_edge(2, 3));
        assert!(check_tree_b31_conditions(&spec).unwrap());
    }

    #[test]
    fn validation() {
        let k3 = WeightedGraph::complete(3);
        assert!(TreeOfBlockGraphsSpec::new(vec![], vec![]).is_err());
        assert!(TreeOfBlockGraphsSpec::new(vec![k3.clone(), k3.clone()], vec![]).is_err());
        assert!(
            TreeOfBlockGraphsSpec::new(vec![k3.clone(), k3.clone()], vec![edge(0, 3, 1, 0)])
                .is_err()
        );
        assert!(TreeOfBlockGraphsSpec::new(
            vec![k3.clone(), k3.clone(), k3.clone()],
            vec![edge(0, 0, 1, 0), edge(1, 1, 0, 1)]
        )
        .is_err());
        let c4 = WeightedGraph::unweighted(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(TreeOfBlockGraphsSpec::new(vec![c4], vec![]).is_err());
    }

    #[test]
    fn vertex_count_is_additive() {
        let parts = vec![
            WeightedGraph::complete(3),
            WeightedGraph::complete(4),
            WeightedGraph::complete(5),
        ];
        let spec =
            TreeOfBlockGraphsSpec::new(parts, vec![edge(0, 0, 1, 0), edge(1, 1, 2, 4)]).unwrap();
        assert_eq!(make_tree_of_block_graphs(&spec).vertex_count(), 12);
    }

    #[test]
    fn shared_skeleton_vertex_fails_condition() {
        let k3 = WeightedGraph::complete(3);
        let spec = TreeOfBlockGraphsSpec::new(
            vec![k3.clone(), k3.clone(), k3],
            vec![edge(0, 0, 1, 0), edge(0, 0, 2, 0)],
        )
        .unwrap();
        assert!(!check_tree_b31_conditions(&spec).unwrap());
    }

    #[test]
    fn non_b31_component_is_rejected() {
        let spec = TreeOfBlockGraphsSpec::new(
            vec![WeightedGraph::complete(3), WeightedGraph::path(2)],
            vec![edge(0, 0, 1, 0)],
        )
        .unwrap();
        assert_eq!(
            check_tree_b31_conditions(&spec),
            Err(FamilyError::NotB31(1))
        );
    }
}
