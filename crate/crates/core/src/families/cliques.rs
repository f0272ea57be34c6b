use crate::families::FamilyError;
use crate::graph::WeightedGraph;
use crate::rational::Rational;

/// `K_n` with `k` pendant copies of `K_m` coalesced at each of its vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NmkSpec {
    n: usize,
    m: usize,
    k: usize,
}

impl NmkSpec {
    pub fn new(n: usize, m: usize, k: usize) -> Result<Self, FamilyError> {
        if n < 2 || m < 3 || k < 1 {
            return Err(FamilyError::InvalidSpec(format!(
                "(n, m, k) = ({n}, {m}, {k}) needs n >= 2, m >= 3, k >= 1"
            )));
        }
        Ok(NmkSpec { n, m, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.n + self.n * self.k * (self.m - 1)
    }

    pub fn to_coalesced(&self) -> CoalescedCliqueSpec {
        CoalescedCliqueSpec {
            n: self.n,
            attachments: vec![vec![self.m; self.k]; self.n],
        }
    }
}

/// A central `K_n`; vertex `i` carries pendant cliques of the orders listed
/// in `attachments[i]` (possibly none).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalescedCliqueSpec {
    n: usize,
    attachments: Vec<Vec<usize>>,
}

impl CoalescedCliqueSpec {
    pub fn new(n: usize, attachments: Vec<Vec<usize>>) -> Result<Self, FamilyError> {
        if n < 2 {
            return Err(FamilyError::InvalidSpec(format!(
                "central clique order {n} must be at least 2"
            )));
        }
        if attachments.len() != n {
            return Err(FamilyError::InvalidSpec(format!(
                "expected {n} attachment lists, got {}",
                attachments.len()
            )));
        }
        check_orders(&attachments)?;
        Ok(CoalescedCliqueSpec { n, attachments })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn attachments(&self) -> &[Vec<usize>] {
        &self.attachments
    }

    pub fn vertex_count(&self) -> usize {
        self.n
            + self
                .attachments
                .iter()
                .flatten()
                .map(|m| m - 1)
                .sum::<usize>()
    }
}

fn check_orders(attachments: &[Vec<usize>]) -> Result<(), FamilyError> {
    match attachments.iter().flatten().find(|&&m| m < 3) {
        Some(m) => Err(FamilyError::InvalidSpec(format!(
            "attached clique order {m} must be at least 3"
        ))),
        None => Ok(()),
    }
}

/// Adds a zero-weight `K_m` sharing only vertex `at` with `g`.
pub(crate) fn attach_clique(g: &mut WeightedGraph, at: usize, m: usize) {
    let mut members = vec![at];
    for _ in 1..m {
        let v = g.push_vertex(Rational::zero());
        for &u in &members {
            g.insert_edge(u, v);
        }
        members.push(v);
    }
}

/// `Σ (m - 1)/(m - 2)` over the orders in `orders`.
fn attachment_load(orders: &[usize]) -> Rational {
    orders
        .iter()
        .map(|&m| Rational::new(m as i64 - 1, m as i64 - 2))
        .sum()
}

pub fn make_coalesced_cliques(spec: &CoalescedCliqueSpec) -> WeightedGraph {
    let mut g = WeightedGraph::complete(spec.n);
    for (i, orders) in spec.attachments.iter().enumerate() {
        for &m in orders {
            attach_clique(&mut g, i, m);
        }
    }
    g
}

pub fn make_nmk(spec: &NmkSpec) -> WeightedGraph {
    make_coalesced_cliques(&spec.to_coalesced())
}

/// Singular exactly when `k(m - 1) = (n - 1)(m - 2)`.
pub fn predict_nmk_singular(spec: &NmkSpec) -> bool {
    spec.k * (spec.m - 1) == (spec.n - 1) * (spec.m - 2)
}

/// Weights of the central clique once every pendant clique has been
/// contracted: `x_i = -Σ_j (m_ij - 1)/(m_ij - 2)`.
pub fn reduced_central_weights(spec: &CoalescedCliqueSpec) -> Vec<Rational> {
    spec.attachments
        .iter()
        .map(|orders| -attachment_load(orders))
        .collect()
}

/// Singular exactly when `Σ_i 1/(1 + Σ_j (m_ij - 1)/(m_ij - 2)) = 1`.
pub fn predict_coalesced_singular(spec: &CoalescedCliqueSpec) -> bool {
    let one = Rational::one();
    let total: Rational = spec
        .attachments
        .iter()
        .map(|orders| {
            (&one + &attachment_load(orders))
                .recip()
                .expect("load is non-negative")
        })
        .sum();
    total.is_one()
}

fn check_tree_attachments(
    tree: &WeightedGraph,
    attachments: &[Vec<usize>],
) -> Result<(), FamilyError> {
    if !tree.is_tree() {
        return Err(FamilyError::InvalidSpec("skeleton is not a tree".into()));
    }
    if attachments.len() != tree.vertex_count() {
        return Err(FamilyError::InvalidSpec(format!(
            "expected {} attachment lists, got {}",
            tree.vertex_count(),
            attachments.len()
        )));
    }
    check_orders(attachments)
}

/// Whether `Σ_j (m_ij - 1)/(m_ij - 2) > deg_T(i)` at every tree vertex `i`.
/// When it holds, the decorated tree reduces to a strictly diagonally
/// dominant weighted tree and is nonsingular.
pub fn check_mnktree_condition(
    tree: &WeightedGraph,
    attachments: &[Vec<usize>],
) -> Result<bool, FamilyError> {
    check_tree_attachments(tree, attachments)?;
    Ok(attachments
        .iter()
        .enumerate()
        .all(|(i, orders)| attachment_load(orders) > Rational::from(tree.degree(i))))
}

/// The tree `tree` (zero weights) with cliques of the listed orders
/// coalesced at each of its vertices. Tree vertices keep their ids.
pub fn clique_decorated_tree(
    tree: &WeightedGraph,
    attachments: &[Vec<usize>],
) -> Result<WeightedGraph, FamilyError> {
    check_tree_attachments(tree, attachments)?;
    let mut g = tree.zero_weighted().with_identity_labels();
    for (i, orders) in attachments.iter().enumerate() {
        for &m in orders {
            attach_clique(&mut g, i, m);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{decompose, is_block_graph};

    #[test]
    fn nmk_sizes() {
        let g = make_nmk(&NmkSpec::new(4, 4, 2).unwrap());
        assert_eq!(g.vertex_count(), 28);
        assert_eq!(decompose(&g).blocks.len(), 9);
        assert!(is_block_graph(&g));
        assert_eq!(make_nmk(&NmkSpec::new(2, 3, 1).unwrap()).vertex_count(), 6);
        assert_eq!(NmkSpec::new(2, 3, 1).unwrap().vertex_count(), 6);
    }

    #[test]
    fn nmk_bounds() {
        assert!(NmkSpec::new(1, 3, 1).is_err());
        assert!(NmkSpec::new(2, 2, 1).is_err());
        assert!(NmkSpec::new(2, 3, 0).is_err());
    }

    #[test]
    fn nmk_predictions() {
        assert!(predict_nmk_singular(&NmkSpec::new(4, 4, 2).unwrap()));
        assert!(predict_nmk_singular(&NmkSpec::new(5, 3, 2).unwrap()));
        for m in 3..10 {
            for k in 1..6 {
                assert!(!predict_nmk_singular(&NmkSpec::new(2, m, k).unwrap()));
            }
        }
    }

    #[test]
    fn coalesced_specialises_to_nmk() {
        let spec = NmkSpec::new(3, 5, 2).unwrap();
        let coalesced = spec.to_coalesced();
        assert_eq!(make_coalesced_cliques(&coalesced), make_nmk(&spec));
        assert_eq!(
            predict_coalesced_singular(&coalesced),
            predict_nmk_singular(&spec)
        );
        assert_eq!(coalesced.vertex_count(), spec.vertex_count());
    }

    #[test]
    fn coalesced_validation() {
        assert!(CoalescedCliqueSpec::new(2, vec![vec![3]]).is_err());
        assert!(CoalescedCliqueSpec::new(2, vec![vec![3], vec![2]]).is_err());
        assert!(CoalescedCliqueSpec::new(1, vec![vec![3]]).is_err());
        let spec = CoalescedCliqueSpec::new(3, vec![vec![3, 4], vec![], vec![5]]).unwrap();
        assert_eq!(spec.vertex_count(), 3 + 2 + 3 + 4);
        assert_eq!(make_coalesced_cliques(&spec).vertex_count(), 12);
        assert_eq!(
            reduced_central_weights(&spec),
            vec![Rational::new(-7, 2), Rational::zero(), Rational::new(-4, 3)]
        );
    }

    #[test]
    fn two_vertex_centre_is_never_singular() {
        for a in 3..8 {
            for b in 3..8 {
                let spec = CoalescedCliqueSpec::new(2, vec![vec![a], vec![b, a]]).unwrap();
                assert!(!predict_coalesced_singular(&spec));
            }
        }
    }

    #[test]
    fn mnktree_condition_examples() {
        let single = WeightedGraph::empty(1);
        assert!(check_mnktree_condition(&single, &[vec![3]]).unwrap());
        let path = WeightedGraph::path(3);
        assert!(!check_mnktree_condition(&path, &[vec![], vec![], vec![]]).unwrap());
        assert!(check_mnktree_condition(&path, &[vec![3], vec![3, 3], vec![4]]).unwrap());
        // middle vertex has degree 2 and load 3/2
        assert!(!check_mnktree_condition(&path, &[vec![3], vec![4], vec![3]]).unwrap());
        assert!(check_mnktree_condition(&path, &[vec![3], vec![2], vec![3]]).is_err());
        assert!(
            check_mnktree_condition(&WeightedGraph::complete(3), &[vec![], vec![], vec![]])
                .is_err()
        );

        let g = clique_decorated_tree(&path, &[vec![3], vec![3, 3], vec![4]]).unwrap();
        assert_eq!(g.vertex_count(), 3 + 2 + 4 + 3);
        assert!(is_block_graph(&g));
    }
}
