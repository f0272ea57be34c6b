//! Self-checks that compare the reduction engine, the closed-form family
//! predicates and the determinant identities against exact determinants.
//!
//! Each criterion returns a [`CriterionReport`]; suites group criteria for
//! the command line.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::determinant::{
    bridge_det, coalescence_det, det_exact, double_pendant_edge_is_singular, path_parity_check,
    pendant_edge_negation_holds,
};
use crate::families::{
    default_weight_pool, enumerate_block_graphs, forest_has_perfect_matching, is_b31, make_nmk,
    predict_nmk_singular, random_block_graph_with, EnumerationOptions, NmkSpec,
};
use crate::gallery;
use crate::graph::WeightedGraph;
use crate::rational::Rational;
use crate::reduction::{
    check_sufficient_tau, check_sufficient_zero_vertex, decide, decide_with, gamma_of, reduce_once,
    PendantCandidate, RandomOrder,
};

/// Sample sizes and seed for every criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub max_enumerated: usize,
    pub max_tree: usize,
    pub random_graphs: usize,
    pub random_max_vertices: usize,
    pub identity_pairs: usize,
    pub identity_max_vertices: usize,
    pub negation_instances: usize,
    pub path_pairs: usize,
    pub double_pendant_hosts: usize,
    pub sufficiency_random: usize,
    pub order_graphs: usize,
    pub orders_per_graph: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 20240229,
            max_enumerated: 8,
            max_tree: 10,
            random_graphs: 10_000,
            random_max_vertices: 12,
            identity_pairs: 1_000,
            identity_max_vertices: 8,
            negation_instances: 1_000,
            path_pairs: 200,
            double_pendant_hosts: 200,
            sufficiency_random: 2_000,
            order_graphs: 100,
            orders_per_graph: 20,
        }
    }
}

impl VerifyConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Scales every randomized sample count by `samples / 10_000`, so that
    /// `samples = 10_000` gives the default sizes. Counts never drop below 1.
    pub fn with_samples(mut self, samples: usize) -> Self {
        let scale = |count: usize| (count * samples / 10_000).max(1);
        self.random_graphs = scale(self.random_graphs);
        self.identity_pairs = scale(self.identity_pairs);
        self.negation_instances = scale(self.negation_instances);
        self.path_pairs = scale(self.path_pairs);
        self.double_pendant_hosts = scale(self.double_pendant_hosts);
        self.sufficiency_random = scale(self.sufficiency_random);
        self.order_graphs = scale(self.order_graphs);
        self
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

/// Outcome of one criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CriterionReport {
    fn new(id: u8, name: &'static str) -> Self {
        CriterionReport {
            id,
            name,
            checked: 0,
            failures: Vec::new(),
        }
    }

    /// Passes when something was checked and nothing failed.
    pub fn passed(&self) -> bool {
        self.checked > 0 && self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn record<E: fmt::Display>(
        &mut self,
        result: Result<bool, E>,
        describe: impl FnOnce() -> String,
    ) {
        match result {
            Ok(ok) => self.check(ok, describe),
            Err(e) => {
                self.checked += 1;
                self.failures.push(format!("{}: {e}", describe()));
            }
        }
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "criterion {} ({}): {status}, {} checked",
            self.id, self.name, self.checked
        )?;
        if let Some(first) = self.failures.first() {
            write!(f, ", {} failed; first: {first}", self.failures.len())?;
        }
        Ok(())
    }
}

/// Groups of criteria runnable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Oracle,
    Identities,
    Families,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Identities => "identities",
            Suite::Families => "families",
            Suite::All => "all",
        }
    }

    pub fn criteria(self) -> &'static [u8] {
        match self {
            Suite::Oracle => &[1, 2, 8],
            Suite::Identities => &[5, 6],
            Suite::Families => &[3, 4, 7, 9],
            Suite::All => &[1, 2, 3, 4, 5, 6, 7, 8, 9],
        }
    }

    pub fn run(self, config: &VerifyConfig) -> Vec<CriterionReport> {
        self.criteria()
            .iter()
            .map(|&id| run_criterion(id, config))
            .collect()
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "oracle" => Ok(Suite::Oracle),
            "identities" => Ok(Suite::Identities),
            "families" => Ok(Suite::Families),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite {other:?}")),
        }
    }
}

/// Runs criterion `id` (1 to 9).
///
/// # Panics
/// On any other id.
pub fn run_criterion(id: u8, config: &VerifyConfig) -> CriterionReport {
    match id {
        1 => exhaustive_oracle(config),
        2 => random_oracle(config),
        3 => nmk_law(config),
        4 => forest_law(config),
        5 => gamma_closed_form(config),
        6 => determinant_identities(config),
        7 => sufficiency(config),
        8 => order_independence(config),
        9 => gallery_verdicts(config),
        _ => panic!("no criterion {id}"),
    }
}

fn oracle_agrees(g: &WeightedGraph) -> Result<bool, String> {
    let verdict = decide(g).map_err(|e| e.to_string())?;
    let det = det_exact(g).map_err(|e| e.to_string())?;
    Ok(verdict.singular == det.is_zero())
}

/// Every enumerated zero-weight block graph: reduction verdict matches the
/// determinant.
pub fn exhaustive_oracle(config: &VerifyConfig) -> CriterionReport {
    let mut report = CriterionReport::new(1, "exhaustive oracle equivalence");
    match enumerate_block_graphs(config.max_enumerated) {
        Ok(graphs) => {
            for g in graphs {
                report.record(oracle_agrees(&g), || describe(&g));
            }
        }
        Err(e) => report.failures.push(e.to_string()),
    }
    report
}

/// Random weighted block graphs: reduction verdict matches the determinant.
pub fn random_oracle(config: &VerifyConfig) -> CriterionReport {
    let mut report = CriterionReport::new(2, "randomized weighted oracle equivalence");
    let pool = default_weight_pool();
    let mut rng = config.rng(2);
    for _ in 0..config.random_graphs {
        let g = random_block_graph_with(&mut rng, config.random_max_vertices, &pool);
        report.record(oracle_agrees(&g), || describe(&g));
    }
    report
}

/// `(n, m, k)` graphs are singular exactly when `k(m-1) = (n-1)(m-2)`.
pub fn nmk_law(_config: &VerifyConfig) -> CriterionReport {
    let mut report = CriterionReport::new(3, "(n,m,k) singularity law");
    for n in 2..=8 {
        for m in 3..=8 {
            for k in 1..=4 {
                let spec = NmkSpec::new(n, m, k).expect("parameters in range");
                let expected = k * (m - 1) == (n - 1) * (m - 2);
                let result = decide(&make_nmk(&spec))
                    .map(|v| v.singular == expected && predict_nmk_singular(&spec) == expected)
                    .map_err(|e| e.to_string());
                report.record(result, || format!("(n, m, k) = ({n}, {m}, {k})"));
            }
        }
    }
    report.record(decide(&gallery::nmk_442()).map(|v| v.singular), || {
        "(4, 4, 2) is not singular".to_string()
    });
    report
}

/// Every tree up to the configured order is singular exactly when it has no
/// perfect matching.
pub fn forest_law(config: &VerifyConfig) -> CriterionReport {
    let mut report = CriterionReport::new(4, "forest perfect-matching law");
    let trees = EnumerationOptions {
        bound: config.max_tree,
        max_clique: Some(2),
    };
    match trees.enumerate(config.max_tree) {
        Ok(trees) => {
            for t in trees {
                let result = decide(&t).map_err(|e| e.to_string()).and_then(|v| {
                    forest_has_perfect_matching(&t)
                        .map(|matched| v.singular != matched)
                        .map_err(|e| e.to_string())
                });
                report.record(result, || describe(&t));
            }
        }
        Err(e) => report.failures.push(e.to_string()),
    }
    report
}

/// `gamma` of `n` zero weights is `-n/(n-1)`, both from the formula and from
/// contracting a pendant `K_{n+1}`.
pub fn gamma_closed_form(_config: &VerifyConfig) -> CriterionReport {
    let mut report = CriterionReport::new(5, "gamma of a zero-weight clique");
    for n in 2..=20usize {
        let expected = -Rational::new(n as i64, n as i64 - 1);
        let zeros = vec![Rational::zero(); n];
        report.record(gamma_of(&zeros).map(|g| g == expected), || {
            format!("formula, n = {n}")
        });

        // pendant K_{n+1} hanging off a K_2
        let g = WeightedGraph::coalesce(
            &WeightedGraph::complete(n + 1),
            0,
            &WeightedGraph::path(2),
            0,
            Rational::zero(),
        )
        .expect("valid coalescence");
        let mut pick_clique = |c: &[PendantCandidate]| {
            c.iter()
                .position(|p| p.block_labels.len() == n + 1)
                .expect("clique is pendant")
        };
        let contracted = reduce_once(&g, &mut pick_clique)
            .map(|step| step.and_then(|(_, s)| s.gamma) == Some(expected.clone()));
        report.record(contracted, || format!("contraction, n = {n}"));
    }
    report
}

fn pick_vertex<R: Rng>(rng: &mut R, g: &WeightedGraph) -> usize {
    rng.gen_range(0..g.vertex_count())
}

/// Coalescence and bridge formulas, pendant-edge negation, path parity and
/// double pendant edges, each against exact determinants.
pub fn determinant_identities(config: &VerifyConfig) -> CriterionReport {
    let mut report = CriterionReport::new(6, "determinant identities");
    let pool = default_weight_pool();
    let max = config.identity_max_vertices;
    let mut rng = config.rng(6);

    for _ in 0..config.identity_pairs {
        let g1 = random_block_graph_with(&mut rng, max, &pool);
        let g2 = random_block_graph_with(&mut rng, max, &pool);
        let (v1, v2) = (pick_vertex(&mut rng, &g1), pick_vertex(&mut rng, &g2));
        let merged = g1.weight(v1) + g2.weight(v2);
        let coalesced = (|| -> Result<bool, String> {
            let joined =
                WeightedGraph::coalesce(&g1, v1, &g2, v2, merged).map_err(|e| e.to_string())?;
            Ok(
                coalescence_det(&g1, v1, &g2, v2).map_err(|e| e.to_string())?
                    == det_exact(&joined).map_err(|e| e.to_string())?,
            )
        })();
        report.record(coalesced, || {
            format!(
                "coalescence at {v1}~{v2} of {} and {}",
                describe(&g1),
                describe(&g2)
            )
        });

        let bridged = (|| -> Result<bool, String> {
            let joined =
                WeightedGraph::connect_by_edge(&g1, v1, &g2, v2).map_err(|e| e.to_string())?;
            Ok(bridge_det(&g1, v1, &g2, v2).map_err(|e| e.to_string())?
                == det_exact(&joined).map_err(|e| e.to_string())?)
        })();
        report.record(bridged, || {
            format!(
                "bridge {v1}-{v2} of {} and {}",
                describe(&g1),
                describe(&g2)
            )
        });
    }

    for _ in 0..config.negation_instances {
        let host = loop {
            let h = random_block_graph_with(&mut rng, max, &pool);
            if h.vertex_count() >= 2 {
                break h;
            }
        };
        let v = pick_vertex(&mut rng, &host);
        let mut g = host.clone();
        let u = g.push_vertex(Rational::zero());
        g.insert_edge(u, v);
        report.record(pendant_edge_negation_holds(&g, u, v), || {
            format!("pendant edge {u}-{v} of {}", describe(&g))
        });
    }

    for _ in 0..config.path_pairs {
        let g1 = random_block_graph_with(&mut rng, max, &pool);
        let g2 = random_block_graph_with(&mut rng, max, &pool);
        let (v1, v2) = (pick_vertex(&mut rng, &g1), pick_vertex(&mut rng, &g2));
        for k in 2..=5 {
            report.record(path_parity_check(&g1, v1, &g2, v2, k), || {
                format!(
                    "path with {k} interior vertices between {} and {}",
                    describe(&g1),
                    describe(&g2)
                )
            });
        }
    }

    for _ in 0..config.double_pendant_hosts {
        let host = random_block_graph_with(&mut rng, max, &pool);
        let v = pick_vertex(&mut rng, &host);
        report.record(double_pendant_edge_is_singular(&host, v), || {
            format!("two pendant edges at {v} of {}", describe(&host))
        });
    }
    report
}

fn check_sufficiency(report: &mut CriterionReport, g: &WeightedGraph, hits: &mut [usize; 3]) {
    let det = match det_exact(g) {
        Ok(d) => d,
        Err(e) => {
            report.record(Err::<bool, _>(e), || describe(g));
            return;
        }
    };
    let nonsingular = !det.is_zero();
    match check_sufficient_tau(g) {
        Ok(true) => {
            hits[0] += 1;
            report.check(nonsingular, || {
                format!("tau condition holds but singular: {}", describe(g))
            });
        }
        Ok(false) => {}
        Err(e) => report.record(Err::<bool, _>(e), || describe(g)),
    }
    match check_sufficient_zero_vertex(g) {
        Ok(true) => {
            hits[1] += 1;
            report.check(nonsingular, || {
                format!("zero-vertex condition holds but singular: {}", describe(g))
            });
        }
        Ok(false) => {}
        Err(e) => report.record(Err::<bool, _>(e), || describe(g)),
    }
    let zero = g.zero_weighted();
    match is_b31(&zero) {
        Ok(true) => {
            hits[2] += 1;
            let result = det_exact(&zero).map(|d| !d.is_zero());
            report.record(result, || {
                format!("B31 graph is singular: {}", describe(&zero))
            });
        }
        Ok(false) => {}
        Err(e) => report.record(Err::<bool, _>(e), || describe(g)),
    }
}

/// Each sufficient condition for nonsingularity implies a nonzero
/// determinant. Fails if some condition never fires.
pub fn sufficiency(config: &VerifyConfig) -> CriterionReport {
    let mut report = CriterionReport::new(7, "sufficient conditions imply nonsingular");
    let mut hits = [0usize; 3];
    match enumerate_block_graphs(config.max_enumerated) {
        Ok(graphs) => {
            for g in graphs {
                check_sufficiency(&mut report, &g, &mut hits);
            }
        }
        Err(e) => report.failures.push(e.to_string()),
    }
    let pool = default_weight_pool();
    let mut rng = config.rng(7);
    for _ in 0..config.sufficiency_random {
        let g = random_block_graph_with(&mut rng, config.random_max_vertices, &pool);
        check_sufficiency(&mut report, &g, &mut hits);
    }
    for (hit, name) in hits.iter().zip(["tau", "zero-vertex", "B31"]) {
        if *hit == 0 {
            report
                .failures
                .push(format!("the {name} condition never applied"));
        }
    }
    report
}

/// Random reduction orders give the canonical verdict.
pub fn order_independence(config: &VerifyConfig) -> CriterionReport {
    let mut report = CriterionReport::new(8, "reduction order independence");
    let pool = default_weight_pool();
    let mut rng = config.rng(8);
    for _ in 0..config.order_graphs {
        let g = random_block_graph_with(&mut rng, config.random_max_vertices, &pool);
        let reference = match decide(&g) {
            Ok(v) => v.singular,
            Err(e) => {
                report.record(Err::<bool, _>(e), || describe(&g));
                continue;
            }
        };
        for _ in 0..config.orders_per_graph {
            let mut order = RandomOrder(ChaCha8Rng::seed_from_u64(rng.gen()));
            let result = decide_with(&g, &mut order).map(|v| v.singular == reference);
            report.record(result, || describe(&g));
        }
    }
    report
}

/// The hand-built gallery decides as expected and agrees with the
/// determinant.
pub fn gallery_verdicts(_config: &VerifyConfig) -> CriterionReport {
    let mut report = CriterionReport::new(9, "gallery verdicts");
    for entry in gallery::entries() {
        let result = decide(&entry.graph)
            .map_err(|e| e.to_string())
            .and_then(|v| {
                let det = det_exact(&entry.graph).map_err(|e| e.to_string())?;
                Ok(v.singular == entry.singular && det.is_zero() == entry.singular)
            });
        report.record(result, || entry.name.to_string());
    }
    report
}

fn describe(g: &WeightedGraph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    let weights: Vec<String> = g.weights().iter().map(ToString::to_string).collect();
    format!(
        "n={} w=[{}] e=[{}]",
        g.vertex_count(),
        weights.join(" "),
        edges.join(" ")
    )
}
