use std::collections::BTreeSet;

use crate::blocks::decompose;
use crate::families::FamilyError;
use crate::graph::WeightedGraph;
use crate::rational::Rational;

/// Every block has at least three vertices, at least one of which is not a
/// cut vertex.
pub fn is_b31(g: &WeightedGraph) -> Result<bool, FamilyError> {
    let f = decompose(g);
    if !f.blocks.iter().all(|b| b.is_clique) {
        return Err(FamilyError::NotBlockGraph);
    }
    Ok(f.blocks
        .iter()
        .all(|b| b.len() >= 3 && b.cut_vertices.len() < b.len()))
}

/// Perfect matching test for forests by repeatedly matching a leaf with its
/// neighbour.
pub fn forest_has_perfect_matching(g: &WeightedGraph) -> Result<bool, FamilyError> {
    if !g.is_forest() {
        return Err(FamilyError::NotForest);
    }
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    if degree.contains(&0) {
        return Ok(false);
    }
    let mut matched = vec![false; n];
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    while let Some(leaf) = leaves.pop() {
        if matched[leaf] {
            continue;
        }
        let Some(partner) = g.neighbors(leaf).find(|&w| !matched[w]) else {
            return Ok(false);
        };
        matched[leaf] = true;
        matched[partner] = true;
        for w in g.neighbors(partner) {
            if matched[w] {
                continue;
            }
            degree[w] -= 1;
            match degree[w] {
                0 => return Ok(false),
                1 => leaves.push(w),
                _ => {}
            }
        }
    }
    Ok(matched.iter().all(|&m| m))
}

/// Coalesces one new zero-weight pendant edge at each listed cut vertex of
/// `g`. Every block of `g` must have at least two non-cut vertices.
pub fn make_pendant_edges_at_cuts(
    g: &WeightedGraph,
    cuts: &[usize],
) -> Result<WeightedGraph, FamilyError> {
    let f = decompose(g);
    if !f.blocks.iter().all(|b| b.is_clique) {
        return Err(FamilyError::NotBlockGraph);
    }
    if let Some(b) = f.blocks.iter().find(|b| b.non_cut_vertices().len() < 2) {
        return Err(FamilyError::Precondition(format!(
            "block {:?} has fewer than two non-cut vertices",
            b.vertices
        )));
    }
    let mut seen = BTreeSet::new();
    for &k in cuts {
        g.check_vertex(k)?;
        if !f.is_cut_vertex(k) {
            return Err(FamilyError::Precondition(format!(
                "{k} is not a cut vertex"
            )));
        }
        if !seen.insert(k) {
            return Err(FamilyError::Precondition(format!(
                "cut vertex {k} listed twice"
            )));
        }
    }
    let mut h = g.clone();
    for &k in cuts {
        let leaf = h.push_vertex(Rational::zero());
        h.insert_edge(k, leaf);
    }
    Ok(h)
}
