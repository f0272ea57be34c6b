//! Pendant-block reduction of vertex-weighted block graphs.
//!
//! A pendant clique `B` hanging from cut vertex `k` is classified by the
//! weights of its non-cut vertices:
//!
//! * two or more weights equal to 1: the whole graph is singular;
//! * `tau(B) = 1`: delete every vertex of `B`, including `k`;
//! * exactly one weight equal to 1, or `tau(B) != 1`: delete the non-cut
//!   vertices and add `gamma(B)` to the weight of `k`.
//!
//! Both moves preserve singularity. Once no pendant block with a cut vertex
//! is left, every component is a clique and is settled directly.

use std::fmt;

use thiserror::Error;

use crate::blocks::{decompose, BlockCutForest, BlockError};
use crate::graph::{GraphError, VertexLabel, WeightedGraph};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("input is not a block graph")]
    NotBlockGraph,
    #[error("block {0} is not a pendant block")]
    NotPendant(usize),
    #[error("block {0} is a whole component and has no cut vertex")]
    NoCutVertex(usize),
    #[error("block {block} is {class:?}, which does not allow {operation}")]
    WrongClass {
        block: usize,
        class: BlockClass,
        operation: &'static str,
    },
    #[error("gamma is undefined: the clique has two weights equal to 1 or t(x) = 1")]
    GammaUndefined,
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `t(x) = Σ 1/(1 − x_i)`, or `None` when some `x_i = 1`.
pub fn t_of(weights: &[Rational]) -> Option<Rational> {
    let one = Rational::one();
    weights
        .iter()
        .map(|x| (&one - x).recip())
        .sum::<Option<Rational>>()
}

/// The correction added to the cut vertex when a pendant clique with
/// non-cut weights `weights` is contracted: `-1` if exactly one weight is 1,
/// otherwise `-t/(t-1)`.
pub fn gamma_of(weights: &[Rational]) -> Result<Rational, ReductionError> {
    match classify_weights(weights) {
        BlockClass::ExactlyOneOne => Ok(-Rational::one()),
        BlockClass::TauNotOne(t) => Ok(-(&t / &(&t - &Rational::one()))),
        BlockClass::TwoOrMoreOnes | BlockClass::TauEqualsOne => Err(ReductionError::GammaUndefined),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockClass {
    TwoOrMoreOnes,
    ExactlyOneOne,
    TauEqualsOne,
    TauNotOne(Rational),
}

pub fn classify_weights(weights: &[Rational]) -> BlockClass {
    match weights.iter().filter(|x| x.is_one()).count() {
        0 => {
            let t = t_of(weights).expect("no weight equals 1");
            if t.is_one() {
                BlockClass::TauEqualsOne
            } else {
                BlockClass::TauNotOne(t)
            }
        }
        1 => BlockClass::ExactlyOneOne,
        _ => BlockClass::TwoOrMoreOnes,
    }
}

fn non_cut_weights(
    g: &WeightedGraph,
    f: &BlockCutForest,
    block: usize,
) -> Result<Vec<Rational>, ReductionError> {
    Ok(f.non_cut_vertices(block)?
        .into_iter()
        .map(|v| g.weight(v).clone())
        .collect())
}

/// `tau(B) = t` over the non-cut-vertex weights of block `block`.
pub fn tau_of_block(
    g: &WeightedGraph,
    f: &BlockCutForest,
    block: usize,
) -> Result<Option<Rational>, ReductionError> {
    Ok(t_of(&non_cut_weights(g, f, block)?))
}

pub fn classify_pendant_block(
    g: &WeightedGraph,
    f: &BlockCutForest,
    block: usize,
) -> Result<BlockClass, ReductionError> {
    if f.block(block)?.cut_vertices.len() > 1 {
        return Err(ReductionError::NotPendant(block));
    }
    Ok(classify_weights(&non_cut_weights(g, f, block)?))
}

fn pendant_cut(f: &BlockCutForest, block: usize) -> Result<usize, ReductionError> {
    match f.block(block)?.cut_vertices.as_slice() {
        [] => Err(ReductionError::NoCutVertex(block)),
        [k] => Ok(*k),
        _ => Err(ReductionError::NotPendant(block)),
    }
}

/// Removes every vertex of a pendant block with `tau = 1`, its cut vertex
/// included. The result may be disconnected.
pub fn pb_delete(
    g: &WeightedGraph,
    f: &BlockCutForest,
    block: usize,
) -> Result<WeightedGraph, ReductionError> {
    pendant_cut(f, block)?;
    match classify_pendant_block(g, f, block)? {
        BlockClass::TauEqualsOne => Ok(g.without_vertices(&f.block(block)?.vertices)?),
        class => Err(ReductionError::WrongClass {
            block,
            class,
            operation: "deletion",
        }),
    }
}

/// Merges a pendant block into its cut vertex `k`: the non-cut vertices go
/// away and `gamma(B)` is added to `x_k`.
pub fn pb_contract(
    g: &WeightedGraph,
    f: &BlockCutForest,
    block: usize,
) -> Result<WeightedGraph, ReductionError> {
    Ok(contract(g, f, block)?.0)
}

fn contract(
    g: &WeightedGraph,
    f: &BlockCutForest,
    block: usize,
) -> Result<(WeightedGraph, Rational), ReductionError> {
    let k = pendant_cut(f, block)?;
    let gamma = match classify_pendant_block(g, f, block)? {
        class @ (BlockClass::ExactlyOneOne | BlockClass::TauNotOne(_)) => {
            gamma_of(&non_cut_weights(g, f, block)?).map_err(|_| ReductionError::WrongClass {
                block,
                class,
                operation: "contraction",
            })?
        }
        class => {
            return Err(ReductionError::WrongClass {
                block,
                class,
                operation: "contraction",
            })
        }
    };
    let new_weight = g.weight(k) + &gamma;
    let removed = f.non_cut_vertices(block)?;
    let k_after = k - removed.iter().filter(|&&v| v < k).count();
    let h = g
        .without_vertices(&removed)?
        .with_weight(k_after, new_weight)?;
    Ok((h, gamma))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    Delete,
    Contract,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: StepKind,
    /// Labels of all vertices of the reduced block, sorted.
    pub block: Vec<VertexLabel>,
    pub cut: Option<VertexLabel>,
    pub tau: Option<Rational>,
    pub gamma: Option<Rational>,
}

fn label_set(labels: &[VertexLabel]) -> String {
    let parts: Vec<String> = labels.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

impl fmt::Display for ReductionStep {
    /// `DELETE block={..} cut=<label> tau=1` or
    /// `CONTRACT block={..} cut=<label> gamma=<p/q>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cut = self
            .cut
            .map(|c| c.to_string())
            .unwrap_or_else(|| "none".to_string());
        match self.kind {
            StepKind::Delete => {
                write!(f, "DELETE block={} cut={cut} tau=1", label_set(&self.block))
            }
            StepKind::Contract => {
                let gamma = self.gamma.as_ref().expect("contraction records gamma");
                write!(
                    f,
                    "CONTRACT block={} cut={cut} gamma={gamma}",
                    label_set(&self.block)
                )
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// Some component reduced to a clique whose `t` equals 1.
    CliqueComponentTauOne,
    /// Some block has two non-cut vertices of weight 1.
    BlockWithTwoOnes,
    /// Every component reduced to a nonsingular clique.
    AllComponentsNonsingularClique,
}

impl Witness {
    pub fn implies_singular(self) -> bool {
        !matches!(self, Witness::AllComponentsNonsingularClique)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            Witness::CliqueComponentTauOne => "CliqueComponentTauOne",
            Witness::BlockWithTwoOnes => "BlockWithTwoOnes",
            Witness::AllComponentsNonsingularClique => "AllComponentsNonsingularClique",
        };
        f.write_str(tag)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub singular: bool,
    pub witness: Witness,
    pub trace: Vec<ReductionStep>,
}

impl fmt::Display for Verdict {
    /// The trace, one step per line, then `VERDICT singular|nonsingular
    /// witness=<tag>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.trace {
            writeln!(f, "{step}")?;
        }
        let word = if self.singular {
            "singular"
        } else {
            "nonsingular"
        };
        write!(f, "VERDICT {word} witness={}", self.witness)
    }
}

/// A pendant block with a cut vertex that the reducer may act on next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantCandidate {
    pub block: usize,
    pub cut: usize,
    pub block_labels: Vec<VertexLabel>,
    pub cut_label: VertexLabel,
}

/// Picks the next pendant block to reduce. `candidates` is never empty.
pub trait PendantChooser {
    fn choose(&mut self, candidates: &[PendantCandidate]) -> usize;
}

/// Lowest cut-vertex label first, then the lexicographically smallest block.
#[derive(Debug, Clone, Copy, Default)]
pub struct CanonicalOrder;

impl PendantChooser for CanonicalOrder {
    fn choose(&mut self, candidates: &[PendantCandidate]) -> usize {
        (0..candidates.len())
            .min_by(|&a, &b| {
                let (a, b) = (&candidates[a], &candidates[b]);
                (a.cut_label, &a.block_labels).cmp(&(b.cut_label, &b.block_labels))
            })
            .expect("candidates is non-empty")
    }
}

/// Uniformly random choice, for exercising alternative reduction orders.
pub struct RandomOrder<R>(pub R);

impl<R: rand::Rng> PendantChooser for RandomOrder<R> {
    fn choose(&mut self, candidates: &[PendantCandidate]) -> usize {
        self.0.gen_range(0..candidates.len())
    }
}

impl<F: FnMut(&[PendantCandidate]) -> usize> PendantChooser for F {
    fn choose(&mut self, candidates: &[PendantCandidate]) -> usize {
        self(candidates)
    }
}

/// Result of running PB moves until none applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    pub graph: WeightedGraph,
    pub trace: Vec<ReductionStep>,
}

/// Applies one PB move to `g`, chosen among its pendant blocks with a cut
/// vertex that are deletable or contractible. Returns `None` when no such
/// block exists.
pub fn reduce_once(
    g: &WeightedGraph,
    chooser: &mut impl PendantChooser,
) -> Result<Option<(WeightedGraph, ReductionStep)>, ReductionError> {
    let f = decompose(g);
    reduce_once_with(g, &f, chooser)
}

fn reduce_once_with(
    g: &WeightedGraph,
    f: &BlockCutForest,
    chooser: &mut impl PendantChooser,
) -> Result<Option<(WeightedGraph, ReductionStep)>, ReductionError> {
    let mut candidates = Vec::new();
    let mut classes = Vec::new();
    for p in f.pendant_blocks() {
        let Some(cut) = p.cut else { continue };
        let class = classify_pendant_block(g, f, p.block)?;
        if class == BlockClass::TwoOrMoreOnes {
            continue;
        }
        let block_labels = f.blocks[p.block]
            .vertices
            .iter()
            .map(|&v| g.label(v))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        candidates.push(PendantCandidate {
            block: p.block,
            cut,
            block_labels,
            cut_label: g.label(cut),
        });
        classes.push(class);
    }
    if candidates.is_empty() {
        return Ok(None);
    }
    let pick = chooser.choose(&candidates);
    let candidate = &candidates[pick];
    let (next, step) = match &classes[pick] {
        BlockClass::TauEqualsOne => (
            pb_delete(g, f, candidate.block)?,
            ReductionStep {
                kind: StepKind::Delete,
                block: candidate.block_labels.clone(),
                cut: Some(candidate.cut_label),
                tau: Some(Rational::one()),
                gamma: None,
            },
        ),
        class => {
            let (h, gamma) = contract(g, f, candidate.block)?;
            let tau = match class {
                BlockClass::TauNotOne(t) => Some(t.clone()),
                _ => None,
            };
            (
                h,
                ReductionStep {
                    kind: StepKind::Contract,
                    block: candidate.block_labels.clone(),
                    cut: Some(candidate.cut_label),
                    tau,
                    gamma: Some(gamma),
                },
            )
        }
    };
    Ok(Some((next, step)))
}

/// Runs PB moves to a fixpoint. Pendant blocks with two unit non-cut
/// weights are never reduced, so the fixpoint may still contain some.
pub fn reduce(
    g: &WeightedGraph,
    chooser: &mut impl PendantChooser,
) -> Result<Reduced, ReductionError> {
    if !crate::blocks::is_block_graph(g) {
        return Err(ReductionError::NotBlockGraph);
    }
    let mut graph = g.clone();
    let mut trace = Vec::new();
    while let Some((next, step)) = reduce_once(&graph, chooser)? {
        graph = next;
        trace.push(step);
    }
    Ok(Reduced { graph, trace })
}

fn has_block_with_two_ones(g: &WeightedGraph, f: &BlockCutForest) -> bool {
    f.blocks.iter().any(|b| {
        b.non_cut_vertices()
            .iter()
            .filter(|&&v| g.weight(v).is_one())
            .count()
            >= 2
    })
}

/// Decides singularity of a vertex-weighted block graph using the canonical
/// reduction order.
pub fn decide(g: &WeightedGraph) -> Result<Verdict, ReductionError> {
    decide_with(g, &mut CanonicalOrder)
}

/// [`decide`] with a caller-chosen reduction order.
pub fn decide_with(
    g: &WeightedGraph,
    chooser: &mut impl PendantChooser,
) -> Result<Verdict, ReductionError> {
    let mut f = decompose(g);
    if !f.blocks.iter().all(|b| b.is_clique) {
        return Err(ReductionError::NotBlockGraph);
    }
    let mut graph = g.clone();
    let mut trace = Vec::new();
    loop {
        if has_block_with_two_ones(&graph, &f) {
            return Ok(Verdict {
                singular: true,
                witness: Witness::BlockWithTwoOnes,
                trace,
            });
        }
        match reduce_once_with(&graph, &f, chooser)? {
            Some((next, step)) => {
                graph = next;
                trace.push(step);
                f = decompose(&graph);
            }
            None => break,
        }
    }
    // No pendant block with a cut vertex is left: every block is a whole
    // clique component.
    debug_assert!(f.cut_vertices.is_empty());
    for block in &f.blocks {
        let weights: Vec<Rational> = block
            .vertices
            .iter()
            .map(|&v| graph.weight(v).clone())
            .collect();
        if classify_weights(&weights) == BlockClass::TauEqualsOne {
            return Ok(Verdict {
                singular: true,
                witness: Witness::CliqueComponentTauOne,
                trace,
            });
        }
    }
    Ok(Verdict {
        singular: false,
        witness: Witness::AllComponentsNonsingularClique,
        trace,
    })
}

/// Sufficient condition for nonsingularity: no weight equals 1, cut
/// vertices have weight below 1, and every block has `tau > 1`.
pub fn check_sufficient_tau(g: &WeightedGraph) -> Result<bool, ReductionError> {
    let f = decompose(g);
    if !f.blocks.iter().all(|b| b.is_clique) {
        return Err(ReductionError::NotBlockGraph);
    }
    if g.weights().iter().any(Rational::is_one) {
        return Ok(false);
    }
    if f.cut_vertices
        .iter()
        .any(|&k| !(g.weight(k) < &Rational::one()))
    {
        return Ok(false);
    }
    for b in 0..f.blocks.len() {
        match tau_of_block(g, &f, b)? {
            Some(tau) if tau > 1 => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Sufficient condition for nonsingularity: every weight is below 1, every
/// block has at least three vertices, and every block has a non-cut vertex
/// of weight 0.
pub fn check_sufficient_zero_vertex(g: &WeightedGraph) -> Result<bool, ReductionError> {
    let f = decompose(g);
    if !f.blocks.iter().all(|b| b.is_clique) {
        return Err(ReductionError::NotBlockGraph);
    }
    let one = Rational::one();
    Ok(g.weights().iter().all(|x| x < &one)
        && f.blocks
            .iter()
            .all(|b| b.len() >= 3 && b.non_cut_vertices().iter().any(|&v| g.weight(v).is_zero())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::is_block_graph;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn zeros(n: usize) -> Vec<Rational> {
        vec![Rational::zero(); n]
    }

    #[test]
    fn t_examples() {
        for n in 0..6 {
            assert_eq!(t_of(&zeros(n)), Some(Rational::from(n)));
        }
        assert_eq!(t_of(&[r(1, 2), r(-1, 1)]), Some(r(5, 2)));
        assert_eq!(t_of(&[Rational::one(), Rational::zero()]), None);
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_of(&zeros(3)).unwrap(), r(-3, 2));
        assert_eq!(gamma_of(&[r(1, 1), r(5, 1), r(0, 1)]).unwrap(), r(-1, 1));
        // t = 2
        assert_eq!(gamma_of(&zeros(2)).unwrap(), r(-2, 1));
        assert_eq!(gamma_of(&[r(1, 2)]).unwrap(), r(-2, 1));
        assert_eq!(
            gamma_of(&[r(1, 1), r(1, 1)]),
            Err(ReductionError::GammaUndefined)
        );
        assert_eq!(gamma_of(&zeros(1)), Err(ReductionError::GammaUndefined));
    }

    #[test]
    fn gamma_of_zero_clique_closed_form() {
        for n in 2..=20i64 {
            assert_eq!(gamma_of(&zeros(n as usize)).unwrap(), r(-n, n - 1));
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_weights(&[r(1, 1), r(1, 1), r(0, 1)]),
            BlockClass::TwoOrMoreOnes
        );
        assert_eq!(classify_weights(&zeros(1)), BlockClass::TauEqualsOne);
        assert_eq!(classify_weights(&zeros(3)), BlockClass::TauNotOne(r(3, 1)));
        assert_eq!(
            classify_weights(&[r(1, 1), r(2, 1)]),
            BlockClass::ExactlyOneOne
        );
    }

    #[test]
    fn tau_examples() {
        // pendant K3 {0,1,2} at cut vertex 2, which continues to 3
        let g = WeightedGraph::unweighted(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let f = decompose(&g);
        let tri = f.blocks.iter().position(|b| b.len() == 3).unwrap();
        let edge = f.blocks.iter().position(|b| b.len() == 2).unwrap();
        assert_eq!(tau_of_block(&g, &f, tri).unwrap(), Some(r(2, 1)));
        assert_eq!(tau_of_block(&g, &f, edge).unwrap(), Some(r(1, 1)));

        let k4 = WeightedGraph::complete(4);
        assert_eq!(
            tau_of_block(&k4, &decompose(&k4), 0).unwrap(),
            Some(r(4, 1))
        );
        assert!(tau_of_block(&k4, &decompose(&k4), 1).is_err());
    }

    #[test]
    fn delete_examples() {
        let p4 = WeightedGraph::path(4);
        let f = decompose(&p4);
        let end = f
            .blocks
            .iter()
            .position(|b| b.vertices == vec![0, 1])
            .unwrap();
        let h = pb_delete(&p4, &f, end).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.labels(), &[VertexLabel(2), VertexLabel(3)]);

        let star = WeightedGraph::unweighted(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let f = decompose(&star);
        let h = pb_delete(&star, &f, 0).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 0);

        // wrong class and non-pendant blocks are rejected
        let tri_tail = WeightedGraph::unweighted(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let f = decompose(&tri_tail);
        let tri = f.blocks.iter().position(|b| b.len() == 3).unwrap();
        assert!(matches!(
            pb_delete(&tri_tail, &f, tri),
            Err(ReductionError::WrongClass { .. })
        ));
        let f = decompose(&p4);
        let middle = f
            .blocks
            .iter()
            .position(|b| b.vertices == vec![1, 2])
            .unwrap();
        assert_eq!(
            pb_delete(&p4, &f, middle),
            Err(ReductionError::NotPendant(middle))
        );
        let k3 = WeightedGraph::complete(3);
        assert_eq!(
            pb_delete(&k3, &decompose(&k3), 0),
            Err(ReductionError::NoCutVertex(0))
        );
    }

    #[test]
    fn contract_examples() {
        // pendant K3 at cut vertex 2 with x_2 = 0
        let g = WeightedGraph::unweighted(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let f = decompose(&g);
        let tri = f.blocks.iter().position(|b| b.len() == 3).unwrap();
        let h = pb_contract(&g, &f, tri).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.weight(0), &r(-2, 1));
        assert_eq!(h.labels(), &[VertexLabel(2), VertexLabel(3)]);
        assert!(h.has_edge(0, 1));

        for m in 3..=9i64 {
            let km = WeightedGraph::complete(m as usize);
            let g = WeightedGraph::connect_by_edge(&km, 0, &WeightedGraph::empty(1), 0).unwrap();
            let f = decompose(&g);
            let big = f.blocks.iter().position(|b| b.len() == m as usize).unwrap();
            let h = pb_contract(&g, &f, big).unwrap();
            assert_eq!(h.weight(0), &r(-(m - 1), m - 2));
            assert!(is_block_graph(&h));
        }

        let g = g_with_weights(&[1, 0, 0, 0]);
        let f = decompose(&g);
        let tri = f.blocks.iter().position(|b| b.len() == 3).unwrap();
        assert_eq!(pb_contract(&g, &f, tri).unwrap().weight(0), &r(-1, 1));

        let p3 = WeightedGraph::path(3);
        let f = decompose(&p3);
        assert!(matches!(
            pb_contract(&p3, &f, 0),
            Err(ReductionError::WrongClass { .. })
        ));
    }

    fn g_with_weights(w: &[i64]) -> WeightedGraph {
        WeightedGraph::new(
            4,
            &[(0, 1), (0, 2), (1, 2), (2, 3)],
            w.iter().map(|&x| Rational::from(x)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn decide_examples() {
        assert!(decide(&WeightedGraph::path(3)).unwrap().singular);
        let p4 = decide(&WeightedGraph::path(4)).unwrap();
        assert!(!p4.singular);
        assert_eq!(p4.witness, Witness::AllComponentsNonsingularClique);
        let k1 = decide(&WeightedGraph::empty(1)).unwrap();
        assert!(k1.singular);
        assert_eq!(k1.witness, Witness::CliqueComponentTauOne);
        assert!(!decide(&WeightedGraph::empty(0)).unwrap().singular);
        for n in 2..8 {
            assert!(!decide(&WeightedGraph::complete(n)).unwrap().singular);
        }
        let c4 = WeightedGraph::unweighted(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(decide(&c4), Err(ReductionError::NotBlockGraph));
    }

    #[test]
    fn two_ones_shortcut() {
        // K4 {1,2,3,4} hanging off leaf 0, with unit weights on non-cut vertices 2 and 3
        let g = WeightedGraph::new(
            5,
            &[(0, 1), (1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)],
            vec![r(0, 1), r(0, 1), r(1, 1), r(1, 1), r(0, 1)],
        )
        .unwrap();
        let v = decide(&g).unwrap();
        assert!(v.singular);
        assert_eq!(v.witness, Witness::BlockWithTwoOnes);
        assert!(v.trace.is_empty());
    }

    #[test]
    fn trace_format() {
        let v = decide(&WeightedGraph::path(4)).unwrap();
        assert_eq!(
            v.to_string(),
            "DELETE block={0,1} cut=1 tau=1\nVERDICT nonsingular witness=AllComponentsNonsingularClique"
        );
        let g = WeightedGraph::unweighted(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let v = decide(&g).unwrap();
        assert_eq!(
            v.to_string(),
            "CONTRACT block={0,1,2} cut=2 gamma=-2\nVERDICT nonsingular witness=AllComponentsNonsingularClique"
        );
        assert_eq!(v.trace[0].tau, Some(r(2, 1)));
    }

    #[test]
    fn reduce_to_fixpoint() {
        let g = WeightedGraph::path(5);
        let reduced = reduce(&g, &mut CanonicalOrder).unwrap();
        assert_eq!(reduced.trace.len(), 2);
        assert_eq!(reduced.graph.vertex_count(), 1);
        assert_eq!(reduced.graph.labels(), &[VertexLabel(4)]);
    }

    #[test]
    fn sufficient_tau_examples() {
        // two triangles sharing vertex 0: each block has two zero non-cut vertices
        let bowtie = WeightedGraph::coalesce(
            &WeightedGraph::complete(3),
            0,
            &WeightedGraph::complete(3),
            0,
            Rational::zero(),
        )
        .unwrap();
        assert!(check_sufficient_tau(&bowtie).unwrap());
        let with_one = bowtie.clone().with_weight(1, Rational::one()).unwrap();
        assert!(!check_sufficient_tau(&with_one).unwrap());
        assert!(!check_sufficient_tau(&WeightedGraph::path(3)).unwrap());
        let cut_weight = bowtie.with_weight(0, r(3, 2)).unwrap();
        assert!(!check_sufficient_tau(&cut_weight).unwrap());
    }

    #[test]
    fn sufficient_zero_vertex_examples() {
        let k3 = WeightedGraph::new(
            3,
            &[(0, 1), (1, 2), (0, 2)],
            vec![r(0, 1), r(1, 2), r(1, 2)],
        )
        .unwrap();
        assert!(check_sufficient_zero_vertex(&k3).unwrap());
        let tri_tail = WeightedGraph::unweighted(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert!(!check_sufficient_zero_vertex(&tri_tail).unwrap());
        let no_zero = WeightedGraph::new(3, &[(0, 1), (1, 2), (0, 2)], vec![r(1, 2); 3]).unwrap();
        assert!(!check_sufficient_zero_vertex(&no_zero).unwrap());
        let c4 = WeightedGraph::unweighted(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            check_sufficient_zero_vertex(&c4),
            Err(ReductionError::NotBlockGraph)
        );
    }
}
