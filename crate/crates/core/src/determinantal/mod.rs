//! Determinant and permanent of adjacency matrices, computed two ways:
//! exact elimination / Ryser, and the Sachs-subgraph expansions. The report
//! compares the values of a matchable graph against those of its SD and KE
//! parts.

mod exact;
mod sachs;

pub use exact::{
    bareiss_determinant, det_adjacency, perm_adjacency, ryser_permanent, DEFAULT_PERMANENT_BOUND,
};
pub use sachs::{
    count_sachs, det_via_sachs, enumerate_sachs, for_each_sachs, perm_via_sachs, SachsComponent,
    SachsSubgraph, DEFAULT_SACHS_BOUND,
};

use std::ops::ControlFlow;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::decomposition::{partition, SdKePartition};
use crate::error::Result;
use crate::graph::{EdgeRef, Graph};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DetMethod {
    #[default]
    Elimination,
    Sachs,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PermMethod {
    #[default]
    Ryser,
    Sachs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorOptions {
    pub det_method: DetMethod,
    pub perm_method: PermMethod,
    pub sachs_bound: usize,
    pub permanent_bound: usize,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions {
            det_method: DetMethod::Elimination,
            perm_method: PermMethod::Ryser,
            sachs_bound: DEFAULT_SACHS_BOUND,
            permanent_bound: DEFAULT_PERMANENT_BOUND,
        }
    }
}

pub fn determinant(g: &Graph, method: DetMethod, sachs_bound: usize) -> Result<BigInt> {
    match method {
        DetMethod::Elimination => Ok(det_adjacency(g)),
        DetMethod::Sachs => det_via_sachs(g, sachs_bound),
    }
}

pub fn permanent(g: &Graph, method: PermMethod, options: &FactorOptions) -> Result<BigInt> {
    match method {
        PermMethod::Ryser => perm_adjacency(g, options.permanent_bound),
        PermMethod::Sachs => perm_via_sachs(g, options.sachs_bound),
    }
}

/// det and perm of G next to those of its SD and KE parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationReport {
    pub det_g: BigInt,
    pub det_sd: BigInt,
    pub det_ke: BigInt,
    pub perm_g: BigInt,
    pub perm_sd: BigInt,
    pub perm_ke: BigInt,
    pub det_product_ok: bool,
    pub perm_product_ok: bool,
    pub cut_size: usize,
    pub det_method: DetMethod,
    pub perm_method: PermMethod,
}

impl FactorizationReport {
    pub fn ok(&self) -> bool {
        self.det_product_ok && self.perm_product_ok
    }

    /// `det(G) = det(SD) · det(KE): 5 = (-5)·(-1)` and the permanent line.
    pub fn to_text(&self) -> String {
        format!(
            "det(G) = det(SD) · det(KE): {} = ({})·({}) [{}]\nperm(G) = perm(SD) · perm(KE): {} = ({})·({}) [{}]\n",
            self.det_g,
            self.det_sd,
            self.det_ke,
            if self.det_product_ok { "ok" } else { "MISMATCH" },
            self.perm_g,
            self.perm_sd,
            self.perm_ke,
            if self.perm_product_ok { "ok" } else { "MISMATCH" },
        )
    }
}

/// Factorization report for a matchable graph, partitioned with its
/// deterministic maximum matching. An empty part is the order-0 graph and
/// contributes 1 to both products.
pub fn factorization_report(g: &Graph, options: &FactorOptions) -> Result<FactorizationReport> {
    let p = partition(g)?;
    factorization_report_for(g, &p, options)
}

/// Factorization report against an already computed partition.
pub fn factorization_report_for(
    g: &Graph,
    p: &SdKePartition,
    options: &FactorOptions,
) -> Result<FactorizationReport> {
    let det = |h: &Graph| determinant(h, options.det_method, options.sachs_bound);
    let perm = |h: &Graph| permanent(h, options.perm_method, options);
    let (det_g, det_sd, det_ke) = (det(g)?, det(&p.sd_part)?, det(&p.ke_part)?);
    let (perm_g, perm_sd, perm_ke) = (perm(g)?, perm(&p.sd_part)?, perm(&p.ke_part)?);
    Ok(FactorizationReport {
        det_product_ok: det_g == &det_sd * &det_ke,
        perm_product_ok: perm_g == &perm_sd * &perm_ke,
        det_g,
        det_sd,
        det_ke,
        perm_g,
        perm_sd,
        perm_ke,
        cut_size: p.cut.len(),
        det_method: options.det_method,
        perm_method: options.perm_method,
    })
}

/// Result of scanning every Sachs subgraph for a cut edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutDisjointness {
    pub holds: bool,
    /// Sachs subgraphs inspected before stopping.
    pub inspected: usize,
    /// First Sachs subgraph found using a cut edge, with that edge.
    pub offending: Option<(SachsSubgraph, EdgeRef)>,
}

/// No Sachs subgraph of a matchable `g` uses an SD-KE cut edge.
pub fn sachs_cut_disjointness(g: &Graph, bound: usize) -> Result<CutDisjointness> {
    let p = partition(g)?;
    sachs_avoid_edges(g, &p.cut, bound)
}

/// Scans the Sachs subgraphs of `g` for any of the `edges`, stopping at the first hit.
pub fn sachs_avoid_edges(g: &Graph, edges: &[EdgeRef], bound: usize) -> Result<CutDisjointness> {
    let mut inspected = 0;
    let mut offending = None;
    if !edges.is_empty() {
        for_each_sachs(g, bound, |s| {
            inspected += 1;
            match edges.iter().find(|&&e| s.uses_edge(e)) {
                Some(&e) => {
                    offending = Some((s.clone(), e));
                    ControlFlow::Break(())
                }
                None => ControlFlow::Continue(()),
            }
        })?;
    } else {
        inspected = count_sachs(g, bound)?;
    }
    Ok(CutDisjointness {
        holds: offending.is_none(),
        inspected,
        offending,
    })
}
