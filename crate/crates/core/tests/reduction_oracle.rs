//! Reduction moves and determinant routines against independent checks.

use blockgraph::determinant::{
    bridge_det, coalescence_det, pendant_tree_replacement_check, replace_pendant_edge_by_tree,
};
use blockgraph::families::{default_weight_pool, random_block_graph_with, random_tree};
use blockgraph::reduction::{decide_with, reduce, reduce_once, RandomOrder, ReductionError};
use blockgraph::{decide, decompose, det_exact, Rational, WeightedGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Leibniz expansion over all permutations.
fn leibniz_det(g: &WeightedGraph) -> Rational {
    let n = g.vertex_count();
    let m = g.weighted_adjacency_matrix();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Rational::zero();
    permute(&mut perm, 0, &m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, m: &[Vec<Rational>], total: &mut Rational) {
    let n = perm.len();
    if k == n {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let mut term = Rational::one();
        for (i, &j) in perm.iter().enumerate() {
            term = term * &m[i][j];
        }
        *total += if inversions % 2 == 0 { term } else { -term };
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, m, total);
        perm.swap(k, i);
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn bareiss_matches_leibniz() {
    let pool = default_weight_pool();
    let mut rng = rng(1);
    for _ in 0..400 {
        let g = random_block_graph_with(&mut rng, 7, &pool);
        assert_eq!(det_exact(&g).unwrap(), leibniz_det(&g));
    }
}

#[test]
fn every_move_preserves_singularity() {
    let pool = default_weight_pool();
    let mut rng = rng(2);
    let mut moves = 0;
    for _ in 0..1_000 {
        let mut g = random_block_graph_with(&mut rng, 12, &pool);
        let mut order = RandomOrder(rng.clone());
        let _: u64 = rng.gen();
        while let Some((next, step)) = reduce_once(&g, &mut order).unwrap() {
            assert_eq!(
                det_exact(&g).unwrap().is_zero(),
                det_exact(&next).unwrap().is_zero(),
                "{step}"
            );
            assert!(next.vertex_count() < g.vertex_count());
            g = next;
            moves += 1;
        }
    }
    assert!(moves > 1_000);
}

#[test]
fn reduce_reaches_a_fixpoint() {
    let pool = default_weight_pool();
    let mut rng = rng(3);
    for _ in 0..300 {
        let g = random_block_graph_with(&mut rng, 12, &pool);
        let reduced = reduce(&g, &mut RandomOrder(rng.clone())).unwrap();
        assert!(reduce_once(&reduced.graph, &mut RandomOrder(rng.clone()))
            .unwrap()
            .is_none());
        let _: u64 = rng.gen();
    }
}

#[test]
fn verdict_is_stable_across_orders_and_runs() {
    let pool = default_weight_pool();
    let mut rng = rng(4);
    for _ in 0..300 {
        let g = random_block_graph_with(&mut rng, 12, &pool);
        let canonical = decide(&g).unwrap();
        for seed in 0..5 {
            let v = decide_with(&g, &mut RandomOrder(ChaCha8Rng::seed_from_u64(seed))).unwrap();
            assert_eq!(v.singular, canonical.singular);
        }
        assert_eq!(decide(&g).unwrap(), canonical);
    }
}

#[test]
fn determinant_is_invariant_under_relabelling() {
    let pool = default_weight_pool();
    let mut rng = rng(5);
    for _ in 0..20 {
        let g = random_block_graph_with(&mut rng, 10, &pool);
        let det = det_exact(&g).unwrap();
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            let h = g.permuted(&perm);
            assert_eq!(det_exact(&h).unwrap(), det);
            assert_eq!(decide(&h).unwrap().singular, det.is_zero());
        }
    }
}

#[test]
fn disjoint_union_multiplies_determinants() {
    let pool = default_weight_pool();
    let mut rng = rng(6);
    for _ in 0..300 {
        let a = random_block_graph_with(&mut rng, 7, &pool);
        let b = random_block_graph_with(&mut rng, 7, &pool);
        let u = WeightedGraph::disjoint_union(&[&a, &b]);
        assert_eq!(
            det_exact(&u).unwrap(),
            det_exact(&a).unwrap() * det_exact(&b).unwrap()
        );
        assert_eq!(
            decide(&u).unwrap().singular,
            det_exact(&u).unwrap().is_zero()
        );
    }
}

#[test]
fn composition_formulas_are_symmetric() {
    let pool = default_weight_pool();
    let mut rng = rng(7);
    for _ in 0..300 {
        let a = random_block_graph_with(&mut rng, 6, &pool);
        let b = random_block_graph_with(&mut rng, 6, &pool);
        let (va, vb) = (
            rng.gen_range(0..a.vertex_count()),
            rng.gen_range(0..b.vertex_count()),
        );
        assert_eq!(
            coalescence_det(&a, va, &b, vb).unwrap(),
            coalescence_det(&b, vb, &a, va).unwrap()
        );
        assert_eq!(
            bridge_det(&a, va, &b, vb).unwrap(),
            bridge_det(&b, vb, &a, va).unwrap()
        );
    }
}

#[test]
fn block_cut_accounting() {
    let pool = default_weight_pool();
    let mut rng = rng(8);
    for _ in 0..1_000 {
        let parts = [
            random_block_graph_with(&mut rng, 12, &pool),
            random_block_graph_with(&mut rng, 6, &pool),
        ];
        let g = WeightedGraph::disjoint_union(&[&parts[0], &parts[1]]);
        let f = decompose(&g);
        let components = g.components().len();
        let sum: usize = f.blocks.iter().map(|b| b.len() - 1).sum();
        assert_eq!(sum, g.vertex_count() - components);
        let edges: usize = f.blocks.iter().map(|b| b.len() * (b.len() - 1) / 2).sum();
        assert_eq!(edges, g.edge_count());
        for (&k, blocks) in &f.incidence {
            assert_eq!(blocks.len() >= 2, f.is_cut_vertex(k));
        }
    }
}

#[test]
fn pendant_tree_replacement_preserves_verdict() {
    let pool = default_weight_pool();
    let mut rng = rng(9);
    let mut checked = 0;
    while checked < 300 {
        let host = random_block_graph_with(&mut rng, 9, &pool);
        if host.vertex_count() < 2 {
            continue;
        }
        let v = rng.gen_range(0..host.vertex_count());
        let g = WeightedGraph::connect_by_edge(&host, v, &WeightedGraph::empty(1), 0).unwrap();
        let u = g.vertex_count() - 1;
        let order = 2 * rng.gen_range(1..=3);
        let tree = random_tree(&mut rng, order);
        if det_exact(&tree).unwrap().is_zero() {
            continue;
        }
        let attach = rng.gen_range(0..tree.vertex_count());
        assert!(pendant_tree_replacement_check(&g, u, v, &tree, attach).unwrap());
        let replaced = replace_pendant_edge_by_tree(&g, u, v, &tree, attach).unwrap();
        assert_eq!(
            det_exact(&g).unwrap().is_zero(),
            det_exact(&replaced).unwrap().is_zero()
        );
        checked += 1;
    }
}

#[test]
fn non_block_graphs_are_rejected() {
    let c4 = WeightedGraph::unweighted(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert!(matches!(decide(&c4), Err(ReductionError::NotBlockGraph)));
    assert!(matches!(
        reduce(&c4, &mut RandomOrder(rng(0))),
        Err(ReductionError::NotBlockGraph)
    ));
}
