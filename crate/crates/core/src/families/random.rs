use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::families::cliques::attach_clique;
use crate::graph::WeightedGraph;
use crate::rational::Rational;

/// Largest clique glued on by the random generator.
pub const MAX_RANDOM_CLIQUE: usize = 5;

/// `{0, 1, 1/2, -1, 2}`.
pub fn default_weight_pool() -> Vec<Rational> {
    vec![
        Rational::zero(),
        Rational::one(),
        Rational::new(1, 2),
        Rational::from(-1),
        Rational::from(2),
    ]
}

/// Random connected block graph on at most `max_vertices` vertices (at least
/// one), deterministic in `seed`. Weights are drawn uniformly from
/// `weight_pool`; an empty pool gives zero weights.
pub fn random_block_graph(
    seed: u64,
    max_vertices: usize,
    weight_pool: &[Rational],
) -> WeightedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_block_graph_with(&mut rng, max_vertices, weight_pool)
}

/// Grows a block–cut tree from `K_1` by gluing cliques of order
/// `2..=MAX_RANDOM_CLIQUE` at uniformly chosen vertices, then shuffles the
/// vertex ids.
pub fn random_block_graph_with<R: Rng + ?Sized>(
    rng: &mut R,
    max_vertices: usize,
    weight_pool: &[Rational],
) -> WeightedGraph {
    let target = rng.gen_range(1..=max_vertices.max(1));
    let mut g = WeightedGraph::empty(1);
    while g.vertex_count() < target {
        let room = target - g.vertex_count() + 1;
        let order = rng.gen_range(2..=room.min(MAX_RANDOM_CLIQUE));
        let at = rng.gen_range(0..g.vertex_count());
        attach_clique(&mut g, at, order);
    }
    let g = shuffled(rng, &g);
    let weights = (0..g.vertex_count())
        .map(|_| {
            weight_pool
                .choose(rng)
                .cloned()
                .unwrap_or_else(Rational::zero)
        })
        .collect();
    g.with_weights(weights).expect("one weight per vertex")
}

/// Random zero-weight tree on exactly `n >= 1` vertices.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> WeightedGraph {
    let mut g = WeightedGraph::empty(n.max(1));
    for v in 1..g.vertex_count() {
        let parent = rng.gen_range(0..v);
        g.insert_edge(parent, v);
    }
    shuffled(rng, &g)
}

fn shuffled<R: Rng + ?Sized>(rng: &mut R, g: &WeightedGraph) -> WeightedGraph {
    let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
    perm.shuffle(rng);
    g.permuted(&perm).with_identity_labels()
}
