//! Hand-built example graphs with known singularity, used by the acceptance
//! suite and the CLI `verify` command.

use crate::families::{
    clique_decorated_tree, make_coalesced_cliques, make_nmk, make_tree_of_block_graphs,
    CoalescedCliqueSpec, NmkSpec, SkeletonEdge, TreeOfBlockGraphsSpec,
};
use crate::graph::WeightedGraph;

/// A named example together with its expected verdict.
#[derive(Debug, Clone)]
pub struct GalleryEntry {
    pub name: &'static str,
    pub graph: WeightedGraph,
    pub singular: bool,
}

fn clique_edges(vertices: &[usize]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            edges.push((u, v));
        }
    }
    edges
}

fn from_cliques(n: usize, cliques: &[&[usize]], extra: &[(usize, usize)]) -> WeightedGraph {
    let mut edges: Vec<(usize, usize)> = cliques.iter().flat_map(|c| clique_edges(c)).collect();
    edges.extend_from_slice(extra);
    WeightedGraph::unweighted(n, &edges).expect("gallery graphs are well formed")
}

fn skeleton(from: usize, u: usize, to: usize, v: usize) -> SkeletonEdge {
    SkeletonEdge { from, u, to, v }
}

/// `K_4` with two pendant `K_4` at every vertex; singular.
pub fn nmk_442() -> WeightedGraph {
    make_nmk(&NmkSpec::new(4, 4, 2).expect("valid spec"))
}

/// Skeleton tree and clique orders for [`decorated_tree`]: a tree on five
/// vertices with `K_3`/`K_4` cliques glued on so that the load at every
/// vertex exceeds its degree.
pub fn decorated_tree_parts() -> (WeightedGraph, Vec<Vec<usize>>) {
    let tree = WeightedGraph::unweighted(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).expect("tree");
    let attachments = vec![vec![4], vec![3, 4], vec![3], vec![4, 4], vec![3, 3]];
    (tree, attachments)
}

pub fn decorated_tree() -> WeightedGraph {
    let (tree, attachments) = decorated_tree_parts();
    clique_decorated_tree(&tree, &attachments).expect("valid decoration")
}

/// `K_4` with two pendant `K_4` at three of its vertices and none at the
/// fourth: every block has a non-cut vertex.
pub fn b31_coalesced() -> WeightedGraph {
    let spec = CoalescedCliqueSpec::new(4, vec![vec![4, 4], vec![4, 4], vec![4, 4], vec![]])
        .expect("valid spec");
    make_coalesced_cliques(&spec)
}

/// `K_4` with two pendant `K_4` at three vertices and one at the fourth.
/// Not covered by the `tau > 1` criterion, yet nonsingular.
pub fn unbalanced_coalesced_spec() -> CoalescedCliqueSpec {
    CoalescedCliqueSpec::new(4, vec![vec![4, 4], vec![4, 4], vec![4, 4], vec![4]])
        .expect("valid spec")
}

pub fn unbalanced_coalesced() -> WeightedGraph {
    make_coalesced_cliques(&unbalanced_coalesced_spec())
}

/// Four B31 graphs in a star: a `K_4` carrying two triangles in the centre,
/// two triangles and a `K_4` with two triangles as leaves. Skeleton
/// vertices are pairwise distinct and every block keeps a non-cut vertex.
pub fn tree_of_b31_spec() -> TreeOfBlockGraphsSpec {
    let centre = from_cliques(8, &[&[0, 1, 2, 3], &[0, 6, 7], &[2, 4, 5]], &[]);
    let leaf_a = WeightedGraph::complete(3);
    let leaf_b = WeightedGraph::complete(3);
    let leaf_c = from_cliques(8, &[&[0, 1, 2, 3], &[1, 4, 5], &[0, 6, 7]], &[]);
    TreeOfBlockGraphsSpec::new(
        vec![centre, leaf_a, leaf_b, leaf_c],
        vec![
            skeleton(1, 2, 0, 5),
            skeleton(3, 0, 0, 6),
            skeleton(2, 1, 0, 1),
        ],
    )
    .expect("valid tree of block graphs")
}

pub fn tree_of_b31() -> WeightedGraph {
    make_tree_of_block_graphs(&tree_of_b31_spec())
}

/// Block graph on 21 vertices obtained from a graph with pendant edges by
/// replacing pendant edges with nonsingular trees; nonsingular.
pub fn tree_replacement_example() -> WeightedGraph {
    // 1-based ids of the drawing, shifted down by one
    let cliques: [&[usize]; 6] = [
        &[0, 1, 2, 3],
        &[4, 5, 6, 7],
        &[0, 4, 14, 15],
        &[5, 8, 9],
        &[2, 11, 12],
        &[5, 19],
    ];
    let extra = [(5, 10), (2, 13), (0, 16), (10, 17), (10, 20), (18, 17)];
    from_cliques(21, &cliques, &extra)
}

/// Five triangles: two leaf triangles bridge to each of two vertices of the
/// central triangle, so skeleton edges share vertices. Singular.
pub fn shared_skeleton_vertex_spec() -> TreeOfBlockGraphsSpec {
    let k3 = WeightedGraph::complete(3);
    TreeOfBlockGraphsSpec::new(
        vec![k3.clone(), k3.clone(), k3.clone(), k3.clone(), k3],
        vec![
            skeleton(0, 1, 1, 0),
            skeleton(0, 0, 2, 0),
            skeleton(0, 0, 3, 0),
            skeleton(0, 1, 4, 0),
        ],
    )
    .expect("valid tree of block graphs")
}

/// Two B31 graphs whose central triangles each lose their only non-cut
/// vertex to the skeleton edge. Singular.
pub fn lost_non_cut_vertex_spec() -> TreeOfBlockGraphsSpec {
    let left = from_cliques(7, &[&[0, 1, 2], &[2, 3, 4], &[1, 5, 6]], &[]);
    let right = from_cliques(
        19,
        &[
            &[0, 1, 2],
            &[1, 3, 4],
            &[2, 5, 6],
            &[2, 7, 8, 9],
            &[2, 10, 11, 12],
            &[1, 13, 14, 15],
            &[1, 16, 17, 18],
        ],
        &[],
    );
    TreeOfBlockGraphsSpec::new(vec![left, right], vec![skeleton(0, 0, 1, 0)])
        .expect("valid tree of block graphs")
}

/// Every gallery graph with its expected verdict.
pub fn entries() -> Vec<GalleryEntry> {
    let entry = |name, graph, singular| GalleryEntry {
        name,
        graph,
        singular,
    };
    vec![
        entry("nmk-4-4-2", nmk_442(), true),
        entry("decorated-tree", decorated_tree(), false),
        entry("b31-coalesced", b31_coalesced(), false),
        entry("unbalanced-coalesced", unbalanced_coalesced(), false),
        entry("tree-of-b31", tree_of_b31(), false),
        entry("tree-replacement", tree_replacement_example(), false),
        entry(
            "shared-skeleton-vertex",
            make_tree_of_block_graphs(&shared_skeleton_vertex_spec()),
            true,
        ),
        entry(
            "lost-non-cut-vertex",
            make_tree_of_block_graphs(&lost_non_cut_vertex_spec()),
            true,
        ),
    ]
}
