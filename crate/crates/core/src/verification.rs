//! Brute-force oracles and the theorem suite.
//!
//! Every check below goes through the public API only, and every failure
//! carries a [`Counterexample`] that can be re-checked independently with
//! [`Counterexample::reverify`].

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::alternating::{reachable_set, semi_jposy_witness, verify_walk, AlternatingWalk};
use crate::decomposition::{
    check_stability_under_deletion, sd_ke_partition, sd_ke_partition_in_order, Certificate,
    SdKePartition, StabilityReport,
};
use crate::determinantal::{
    det_adjacency, factorization_report_for, perm_adjacency, sachs_avoid_edges, FactorOptions,
    SachsSubgraph,
};
use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph};
use crate::matching::{
    enumerate_maximum_matchings, enumerate_perfect_matchings, matching_number, perfect_matching,
    Matching,
};

/// Default vertex bound for the independence number.
pub const DEFAULT_ALPHA_BOUND: usize = 30;

/// α(G) by branch and bound over vertex bitsets.
///
/// Branches on a minimum-degree vertex (taking it outright when its degree
/// is at most one) and prunes with a greedy clique cover of the candidates.
pub fn independence_number(g: &Graph, bound: usize) -> Result<usize> {
    let n = g.order();
    if n > bound.min(64) {
        return Err(Error::TooLarge {
            what: "independence number",
            n,
            bound: bound.min(64),
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    mis_search(&adj, all, 0, &mut best);
    Ok(best)
}

fn clique_cover_size(adj: &[u64], mut cand: u64) -> usize {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let mut common = adj[v] & cand;
        cand &= !(1 << v);
        while common != 0 {
            let w = common.trailing_zeros() as usize;
            common &= adj[w];
            cand &= !(1 << w);
        }
        cliques += 1;
    }
    cliques
}

fn mis_search(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + clique_cover_size(adj, cand) <= *best {
        return;
    }
    let mut bits = cand;
    let mut pick = (usize::MAX, u32::MAX);
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let d = (adj[v] & cand).count_ones();
        if d < pick.1 {
            pick = (v, d);
        }
    }
    let (v, d) = pick;
    let without_v = cand & !(1 << v);
    mis_search(adj, without_v & !adj[v], size + 1, best);
    if d > 1 {
        mis_search(adj, without_v, size, best);
    }
}

/// α(G), μ(G) and whether α + μ = |G|.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeCheck {
    pub alpha: usize,
    pub mu: usize,
    pub n: usize,
    pub is_ke: bool,
}

pub fn is_koenig_egervary(g: &Graph, alpha_bound: usize) -> Result<KeCheck> {
    let alpha = independence_number(g, alpha_bound)?;
    let mu = matching_number(g);
    let n = g.order();
    Ok(KeCheck {
        alpha,
        mu,
        n,
        is_ke: alpha + mu == n,
    })
}

/// Size bounds for the oracles used by [`run_theorem_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Matching enumeration and Sachs enumeration.
    pub enumeration_bound: usize,
    pub alpha_bound: usize,
    pub permanent_bound: usize,
    /// Seed for the shuffled visitation order.
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            enumeration_bound: 12,
            alpha_bound: DEFAULT_ALPHA_BOUND,
            permanent_bound: 20,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    Sd,
    Ke,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Det,
    Perm,
}

/// A concrete witness that a check failed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    ReachDiffers {
        vertex: usize,
        first: Vec<EdgeRef>,
        second: Vec<EdgeRef>,
    },
    PartitionDiffers {
        first: Vec<EdgeRef>,
        second: Vec<EdgeRef>,
    },
    OrderDependent {
        order: Vec<usize>,
    },
    UnpairedSd {
        vertex: usize,
    },
    MissingWitness {
        vertex: usize,
    },
    BadWitness {
        vertex: usize,
        walk: AlternatingWalk,
        defect: String,
    },
    MatchedCutEdge {
        edge: EdgeRef,
        matching: Vec<EdgeRef>,
    },
    MuMismatch {
        mu_g: usize,
        mu_sd: usize,
        mu_ke: usize,
    },
    KeStatus {
        part: Part,
        check: KeCheck,
    },
    PartialReach {
        vertex: usize,
        missing: Vec<usize>,
    },
    SachsUsesCut {
        edge: EdgeRef,
        sachs: SachsSubgraph,
    },
    ProductMismatch {
        quantity: Quantity,
        whole: String,
        sd: String,
        ke: String,
    },
    Unstable {
        report: StabilityReport,
    },
    /// An edge placed in the KE part has an endpoint in V_SD(G).
    ClaimedKeEdgeIsSd {
        edge: EdgeRef,
    },
}

fn matching_of(g: &Graph, pairs: &[EdgeRef]) -> Option<Matching> {
    let pairs: Vec<(usize, usize)> = pairs.iter().map(|e| (e.u, e.v)).collect();
    Matching::from_pairs(g, &pairs).ok()
}

impl Counterexample {
    /// Re-derives the failure from scratch against `g` and the partition
    /// that was checked. True when the counterexample is genuine.
    pub fn reverify(&self, g: &Graph, p: &SdKePartition) -> bool {
        let alpha_bound = DEFAULT_ALPHA_BOUND;
        match self {
            Counterexample::ReachDiffers {
                vertex,
                first,
                second,
            } => match (matching_of(g, first), matching_of(g, second)) {
                (Some(a), Some(b)) => match (reachable_set(g, &a, *vertex), reachable_set(g, &b, *vertex)) {
                    (Ok(ra), Ok(rb)) => ra.members != rb.members,
                    _ => false,
                },
                _ => false,
            },
            Counterexample::PartitionDiffers { first, second } => {
                match (matching_of(g, first), matching_of(g, second)) {
                    (Some(a), Some(b)) => match (sd_ke_partition(g, &a), sd_ke_partition(g, &b)) {
                        (Ok(pa), Ok(pb)) => pa.sd_vertices != pb.sd_vertices,
                        _ => false,
                    },
                    _ => false,
                }
            }
            Counterexample::OrderDependent { order } => {
                match sd_ke_partition_in_order(g, &p.matching, order) {
                    Ok(q) => q.sd_vertices != p.sd_vertices,
                    Err(_) => false,
                }
            }
            Counterexample::UnpairedSd { vertex } => {
                *vertex < g.order() && p.is_sd(*vertex) != p.is_sd(p.matching.mate(*vertex))
            }
            Counterexample::MissingWitness { vertex } => {
                p.is_sd(*vertex) && matches!(semi_jposy_witness(g, &p.matching, *vertex), Ok(None))
            }
            Counterexample::BadWitness { vertex, walk, .. } => {
                verify_walk(g, &p.matching, walk).is_err()
                    || !walk.is_closed()
                    || walk.start() != Some(*vertex)
            }
            Counterexample::MatchedCutEdge { edge, matching } => match matching_of(g, matching) {
                Some(m) => {
                    m.size() == matching_number(g) && m.contains(*edge) && p.cut.contains(edge)
                }
                None => false,
            },
            Counterexample::MuMismatch { .. } => {
                matching_number(g) != matching_number(&p.sd_part) + matching_number(&p.ke_part)
            }
            Counterexample::KeStatus { part, .. } => match part {
                Part::Ke => is_koenig_egervary(&p.ke_part, alpha_bound).is_ok_and(|c| !c.is_ke),
                Part::Sd => {
                    !p.sd_part.is_empty()
                        && is_koenig_egervary(&p.sd_part, alpha_bound).is_ok_and(|c| c.is_ke)
                }
            },
            Counterexample::PartialReach { vertex, missing } => {
                let component = g
                    .connected_components()
                    .into_iter()
                    .find(|c| c.contains(vertex));
                match (component, reachable_set(g, &p.matching, *vertex)) {
                    (Some(c), Ok(r)) => {
                        c.iter().all(|&v| p.is_sd(v))
                            && !missing.is_empty()
                            && missing.iter().all(|u| c.contains(u) && !r.contains(*u))
                    }
                    _ => false,
                }
            }
            Counterexample::SachsUsesCut { edge, sachs } => {
                sachs.validate(g).is_ok() && sachs.uses_edge(*edge) && p.cut.contains(edge)
            }
            Counterexample::ProductMismatch { quantity, .. } => match quantity {
                Quantity::Det => {
                    det_adjacency(g) != det_adjacency(&p.sd_part) * det_adjacency(&p.ke_part)
                }
                Quantity::Perm => {
                    let perm = |h: &Graph| perm_adjacency(h, 64);
                    match (perm(g), perm(&p.sd_part), perm(&p.ke_part)) {
                        (Ok(a), Ok(b), Ok(c)) => a != b * c,
                        _ => false,
                    }
                }
            },
            Counterexample::Unstable { report } => {
                check_stability_under_deletion(g, report.edge, 64).is_ok_and(|r| !r.holds())
            }
            Counterexample::ClaimedKeEdgeIsSd { edge } => {
                p.is_ke(edge.u)
                    && p.is_ke(edge.v)
                    && matches!(
                        check_stability_under_deletion(g, *edge, 64),
                        Err(Error::NotKeEdge(..))
                    )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub checks: Vec<CheckResult>,
    pub seed: u64,
}

impl TheoremReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs every theorem-level check on a matchable graph, using the partition
/// computed from its deterministic maximum matching.
pub fn run_theorem_suite(g: &Graph, config: &SuiteConfig) -> Result<TheoremReport> {
    let m = perfect_matching(g)?;
    let p = sd_ke_partition(g, &m)?;
    run_theorem_suite_with(g, &p, config)
}

/// Runs the checks against a given (possibly wrong) partition.
pub fn run_theorem_suite_with(
    g: &Graph,
    p: &SdKePartition,
    config: &SuiteConfig,
) -> Result<TheoremReport> {
    if g.order() > config.enumeration_bound {
        return Err(Error::TooLarge {
            what: "theorem suite",
            n: g.order(),
            bound: config.enumeration_bound,
        });
    }
    let perfect = enumerate_perfect_matchings(g, config.enumeration_bound)?;
    if perfect.is_empty() {
        return Err(Error::NotMatchable);
    }
    let maximum = enumerate_maximum_matchings(g, config.enumeration_bound)?;

    let mut checks = Vec::new();
    let mut record = |name: &str, counterexample: Option<Counterexample>| {
        checks.push(CheckResult {
            name: name.to_string(),
            pass: counterexample.is_none(),
            counterexample,
        });
    };

    record("reachability_invariance", reach_invariance(g, &perfect.members)?);
    record("partition_matching_independence", matching_independence(g, &perfect.members)?);
    record("partition_order_independence", order_independence(g, p, config.seed)?);
    record("sd_pairs_closed", sd_pairs(g, p));
    record("witnesses_verify", witnesses(g, p)?);
    record("cut_edges_unmatched", cut_edges_unmatched(p, &maximum.members));
    record("mu_additivity", mu_additivity(g, p));
    let (ke, sd) = ke_status(p, config.alpha_bound)?;
    record("ke_part_is_ke", ke);
    record("sd_part_not_ke", sd);
    record("full_reachability_on_sd_components", full_reachability(g, p)?);
    let disjoint = sachs_avoid_edges(g, &p.cut, config.enumeration_bound)?;
    record(
        "sachs_cut_disjointness",
        disjoint
            .offending
            .map(|(sachs, edge)| Counterexample::SachsUsesCut { edge, sachs }),
    );
    let options = FactorOptions {
        permanent_bound: config.permanent_bound,
        ..FactorOptions::default()
    };
    let r = factorization_report_for(g, p, &options)?;
    record(
        "det_multiplicativity",
        (!r.det_product_ok).then(|| Counterexample::ProductMismatch {
            quantity: Quantity::Det,
            whole: r.det_g.to_string(),
            sd: r.det_sd.to_string(),
            ke: r.det_ke.to_string(),
        }),
    );
    record(
        "perm_multiplicativity",
        (!r.perm_product_ok).then(|| Counterexample::ProductMismatch {
            quantity: Quantity::Perm,
            whole: r.perm_g.to_string(),
            sd: r.perm_sd.to_string(),
            ke: r.perm_ke.to_string(),
        }),
    );
    record("edge_deletion_stability", stability(g, p, config.enumeration_bound)?);

    Ok(TheoremReport {
        checks,
        seed: config.seed,
    })
}

fn reach_invariance(g: &Graph, perfect: &[Matching]) -> Result<Option<Counterexample>> {
    let base = &perfect[0];
    let base_sets = (0..g.order())
        .map(|v| reachable_set(g, base, v))
        .collect::<Result<Vec<_>>>()?;
    for other in &perfect[1..] {
        for v in 0..g.order() {
            if reachable_set(g, other, v)?.members != base_sets[v].members {
                return Ok(Some(Counterexample::ReachDiffers {
                    vertex: v,
                    first: base.pairs(),
                    second: other.pairs(),
                }));
            }
        }
    }
    Ok(None)
}

fn matching_independence(g: &Graph, perfect: &[Matching]) -> Result<Option<Counterexample>> {
    let base = sd_ke_partition(g, &perfect[0])?.sd_vertices;
    for other in &perfect[1..] {
        if sd_ke_partition(g, other)?.sd_vertices != base {
            return Ok(Some(Counterexample::PartitionDiffers {
                first: perfect[0].pairs(),
                second: other.pairs(),
            }));
        }
    }
    Ok(None)
}

fn order_independence(g: &Graph, p: &SdKePartition, seed: u64) -> Result<Option<Counterexample>> {
    let mut orders = vec![(0..g.order()).rev().collect::<Vec<_>>()];
    let mut shuffled: Vec<usize> = (0..g.order()).collect();
    shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    orders.push(shuffled);
    for order in orders {
        if sd_ke_partition_in_order(g, &p.matching, &order)?.sd_vertices != p.sd_vertices {
            return Ok(Some(Counterexample::OrderDependent { order }));
        }
    }
    Ok(None)
}

fn sd_pairs(g: &Graph, p: &SdKePartition) -> Option<Counterexample> {
    (0..g.order())
        .find(|&v| p.is_sd(v) != p.is_sd(p.matching.mate(v)))
        .map(|vertex| Counterexample::UnpairedSd { vertex })
}

fn witnesses(g: &Graph, p: &SdKePartition) -> Result<Option<Counterexample>> {
    for &v in &p.sd_vertices {
        match p.certificates.get(v) {
            Some(Certificate::Witness(walk)) => {
                let defect = match verify_walk(g, &p.matching, walk) {
                    Err(d) => Some(d.to_string()),
                    Ok(()) if !walk.is_closed() || walk.start() != Some(v) => {
                        Some(format!("walk is not closed at {v}"))
                    }
                    Ok(()) => None,
                };
                if let Some(defect) = defect {
                    return Ok(Some(Counterexample::BadWitness {
                        vertex: v,
                        walk: walk.clone(),
                        defect,
                    }));
                }
            }
            _ => return Ok(Some(Counterexample::MissingWitness { vertex: v })),
        }
    }
    Ok(None)
}

fn cut_edges_unmatched(p: &SdKePartition, maximum: &[Matching]) -> Option<Counterexample> {
    maximum.iter().find_map(|m| {
        p.cut
            .iter()
            .find(|&&e| m.contains(e))
            .map(|&edge| Counterexample::MatchedCutEdge {
                edge,
                matching: m.pairs(),
            })
    })
}

fn mu_additivity(g: &Graph, p: &SdKePartition) -> Option<Counterexample> {
    let (mu_g, mu_sd, mu_ke) = (
        matching_number(g),
        matching_number(&p.sd_part),
        matching_number(&p.ke_part),
    );
    (mu_g != mu_sd + mu_ke).then_some(Counterexample::MuMismatch { mu_g, mu_sd, mu_ke })
}

fn ke_status(
    p: &SdKePartition,
    alpha_bound: usize,
) -> Result<(Option<Counterexample>, Option<Counterexample>)> {
    let ke = is_koenig_egervary(&p.ke_part, alpha_bound)?;
    let ke_fail = (!ke.is_ke).then_some(Counterexample::KeStatus {
        part: Part::Ke,
        check: ke,
    });
    let sd_fail = if p.sd_part.is_empty() {
        None
    } else {
        let sd = is_koenig_egervary(&p.sd_part, alpha_bound)?;
        sd.is_ke.then_some(Counterexample::KeStatus {
            part: Part::Sd,
            check: sd,
        })
    };
    Ok((ke_fail, sd_fail))
}

fn full_reachability(g: &Graph, p: &SdKePartition) -> Result<Option<Counterexample>> {
    for component in g.connected_components() {
        if !component.iter().all(|&v| p.is_sd(v)) {
            continue;
        }
        for &v in &component {
            let r = reachable_set(g, &p.matching, v)?;
            let missing: Vec<usize> = component.iter().copied().filter(|&u| !r.contains(u)).collect();
            if !missing.is_empty() {
                return Ok(Some(Counterexample::PartialReach { vertex: v, missing }));
            }
        }
    }
    Ok(None)
}

fn stability(g: &Graph, p: &SdKePartition, bound: usize) -> Result<Option<Counterexample>> {
    let ke_edges = g
        .edges()
        .iter()
        .copied()
        .filter(|e| p.is_ke(e.u) && p.is_ke(e.v));
    for e in ke_edges {
        match check_stability_under_deletion(g, e, bound) {
            Ok(report) if !report.holds() => {
                return Ok(Some(Counterexample::Unstable { report }));
            }
            Ok(_) => {}
            Err(Error::NotKeEdge(..)) => {
                return Ok(Some(Counterexample::ClaimedKeEdgeIsSd { edge: e }));
            }
            Err(other) => return Err(other),
        }
    }
    Ok(None)
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidProbability(p))
    }
}

/// A matchable graph: a perfect matching is planted on a random pairing of
/// the vertices, then every other pair is added independently with
/// probability `extra_edge_prob`. Deterministic for a fixed seed.
pub fn random_matchable_graph(n: usize, extra_edge_prob: f64, seed: u64) -> Result<Graph> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    check_probability(extra_edge_prob)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut planted = vec![usize::MAX; n];
    let mut pairs = Vec::new();
    for chunk in perm.chunks(2) {
        planted[chunk[0]] = chunk[1];
        planted[chunk[1]] = chunk[0];
        pairs.push((chunk[0], chunk[1]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if planted[u] != v && rng.gen_bool(extra_edge_prob) {
                pairs.push((u, v));
            }
        }
    }
    Graph::new(n, &pairs)
}

/// A matchable graph made of a general block and a planted KE block.
///
/// The vertices are paired at random. Between one pair and half of the
/// pairs become KE pairs `(a_i, b_i)`; the other pairs form the general
/// block, where every two vertices are joined with probability `(1 + p) / 2`
/// so that it usually contains odd cycles. Other edges use probability `p`. Inside the
/// KE block only edges `a_i b_j` are drawn, and the general block attaches
/// to `b` vertices only, so no KE vertex lies on an mm-alternating closed
/// walk. Deterministic for a fixed seed.
pub fn random_mixed_matchable_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let pairs_total = n / 2;
    if pairs_total == 0 {
        return Ok(Graph::empty(0));
    }
    let ke_pairs = if pairs_total >= 2 {
        rng.gen_range(1..=pairs_total / 2)
    } else {
        1
    };
    let dense = (1.0 + p) / 2.0;
    let general: Vec<usize> = perm[..2 * (pairs_total - ke_pairs)].to_vec();
    let a: Vec<usize> = perm[2 * (pairs_total - ke_pairs)..].iter().step_by(2).copied().collect();
    let b: Vec<usize> = perm[2 * (pairs_total - ke_pairs) + 1..].iter().step_by(2).copied().collect();

    let mut edges: Vec<(usize, usize)> = perm.chunks(2).map(|c| (c[0], c[1])).collect();
    for i in 0..general.len() {
        for j in i + 1..general.len() {
            let planted = i % 2 == 0 && j == i + 1;
            if !planted && rng.gen_bool(dense) {
                edges.push((general[i], general[j]));
            }
        }
    }
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            if i != j && rng.gen_bool(p) {
                edges.push((ai, bj));
            }
        }
    }
    for &x in &general {
        for &bj in &b {
            if rng.gen_bool(p) {
                edges.push((x, bj));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Erdős–Rényi graph G(n, p), deterministic for a fixed seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::new(n, &pairs)
}

/// Edge probabilities cycled through by [`matchable_corpus`].
pub const CORPUS_PROBABILITIES: [f64; 4] = [0.15, 0.25, 0.35, 0.5];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Generator {
    /// [`random_matchable_graph`]
    Planted,
    /// [`random_mixed_matchable_graph`]
    Mixed,
}

/// One generated graph with the parameters needed to replay it.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub seed: u64,
    pub n: usize,
    pub p: f64,
    pub generator: Generator,
    pub graph: Graph,
}

/// `count` matchable graphs: entry `i` has seed `base_seed + i`, order
/// `sizes[i % sizes.len()]`, probability
/// `CORPUS_PROBABILITIES[(i / sizes.len()) % 4]`, and alternates between
/// the planted generator (even `i`) and the mixed one (odd `i`).
pub fn matchable_corpus(count: usize, sizes: &[usize], base_seed: u64) -> Result<Vec<CorpusEntry>> {
    (0..count)
        .map(|i| {
            let seed = base_seed + i as u64;
            let n = sizes[i % sizes.len()];
            let p = CORPUS_PROBABILITIES[(i / sizes.len()) % CORPUS_PROBABILITIES.len()];
            let (generator, graph) = if i % 2 == 0 {
                (Generator::Planted, random_matchable_graph(n, p, seed)?)
            } else {
                (Generator::Mixed, random_mixed_matchable_graph(n, p, seed)?)
            };
            Ok(CorpusEntry {
                seed,
                n,
                p,
                generator,
                graph,
            })
        })
        .collect()
}
