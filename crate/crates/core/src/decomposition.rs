//! SD-KE separation of matchable graphs.
//!
//! Given a perfect matching `M`, each vertex is tested for an mm-alternating
//! closed walk. A vertex that has none is placed in the KE part together with
//! its partner; everything left over is the SD part. The result does not
//! depend on the order in which vertices are tested, nor on `M`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::alternating::{semi_jposy_witness, AlternatingWalk};
use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph};
use crate::matching::{
    enumerate_maximum_matchings, exists_max_matching_avoiding, is_matchable, perfect_matching,
    Matching,
};

/// Why a vertex landed on its side of the partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// An mm-alternating closed walk at the vertex.
    Witness(AlternatingWalk),
    /// The closed-walk search from `searched` (the vertex or its partner) failed.
    NoClosedWalk { searched: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdKePartition {
    /// Sorted ids of V_SD(G).
    pub sd_vertices: Vec<usize>,
    /// Sorted ids of V_KE(G).
    pub ke_vertices: Vec<usize>,
    /// G[V_SD]; vertex `i` is `sd_vertices[i]`.
    pub sd_part: Graph,
    /// G - G[V_SD]; vertex `i` is `ke_vertices[i]`.
    pub ke_part: Graph,
    /// Edges with one end on each side, canonical order.
    pub cut: Vec<EdgeRef>,
    /// The perfect matching the partition was computed with.
    pub matching: Matching,
    /// One certificate per vertex of G.
    pub certificates: Vec<Certificate>,
}

impl SdKePartition {
    fn assemble(
        g: &Graph,
        matching: Matching,
        is_sd: &[bool],
        certificates: Vec<Certificate>,
    ) -> Result<Self> {
        let sd_vertices: Vec<usize> = (0..g.order()).filter(|&v| is_sd[v]).collect();
        let ke_vertices: Vec<usize> = (0..g.order()).filter(|&v| !is_sd[v]).collect();
        let (sd_part, _) = g.induced_subgraph(&sd_vertices)?;
        let (ke_part, _) = g.induced_subgraph(&ke_vertices)?;
        let cut = g
            .edges()
            .iter()
            .copied()
            .filter(|e| is_sd[e.u] != is_sd[e.v])
            .collect();
        Ok(SdKePartition {
            sd_vertices,
            ke_vertices,
            sd_part,
            ke_part,
            cut,
            matching,
            certificates,
        })
    }

    pub fn is_sd(&self, v: usize) -> bool {
        self.sd_vertices.binary_search(&v).is_ok()
    }

    pub fn is_ke(&self, v: usize) -> bool {
        self.ke_vertices.binary_search(&v).is_ok()
    }

    /// A graph with empty KE part (an SD-graph).
    pub fn is_sd_graph(&self) -> bool {
        self.ke_vertices.is_empty()
    }

    pub fn sd_labels(&self, g: &Graph) -> Vec<i64> {
        self.sd_vertices.iter().map(|&v| g.label(v)).collect()
    }

    pub fn ke_labels(&self, g: &Graph) -> Vec<i64> {
        self.ke_vertices.iter().map(|&v| g.label(v)).collect()
    }

    /// A partition with a caller-chosen SD side, for checking claims made
    /// elsewhere. SD vertices get a witness walk when one exists; every other
    /// vertex is recorded as having failed its own search.
    pub fn from_claimed_sd(g: &Graph, m: &Matching, sd: &[usize]) -> Result<Self> {
        m.validate(g)?;
        if !m.is_perfect_unchecked() {
            return Err(Error::NotPerfect);
        }
        let mut is_sd = vec![false; g.order()];
        for &v in sd {
            g.check_vertex(v)?;
            is_sd[v] = true;
        }
        let mut certificates = Vec::with_capacity(g.order());
        for v in 0..g.order() {
            let walk = if is_sd[v] { semi_jposy_witness(g, m, v)? } else { None };
            certificates.push(match walk {
                Some(w) => Certificate::Witness(w),
                None => Certificate::NoClosedWalk { searched: v },
            });
        }
        Self::assemble(g, m.clone(), &is_sd, certificates)
    }

    /// Witness walks of the SD vertices, in vertex order.
    pub fn witnesses(&self) -> impl Iterator<Item = (usize, &AlternatingWalk)> {
        self.certificates
            .iter()
            .enumerate()
            .filter_map(|(v, c)| match c {
                Certificate::Witness(w) => Some((v, w)),
                Certificate::NoClosedWalk { .. } => None,
            })
    }

    /// Matching restricted to the SD part (ids of `sd_part`).
    pub fn sd_matching(&self) -> Matching {
        self.matching.restrict(&self.sd_vertices)
    }

    /// Matching restricted to the KE part (ids of `ke_part`).
    pub fn ke_matching(&self) -> Matching {
        self.matching.restrict(&self.ke_vertices)
    }
}

/// The SD-KE partition of `g` computed with the perfect matching `m`,
/// testing vertices in increasing id order.
pub fn sd_ke_partition(g: &Graph, m: &Matching) -> Result<SdKePartition> {
    let order: Vec<usize> = (0..g.order()).collect();
    sd_ke_partition_in_order(g, m, &order)
}

/// Same as [`sd_ke_partition`] but visiting vertices in `order`, which must
/// be a permutation of `0..n`.
pub fn sd_ke_partition_in_order(g: &Graph, m: &Matching, order: &[usize]) -> Result<SdKePartition> {
    m.validate(g)?;
    if !m.is_perfect_unchecked() {
        return Err(Error::NotPerfect);
    }
    let n = g.order();
    let mut seen = vec![false; n];
    for &v in order {
        g.check_vertex(v)?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if order.len() != n {
        return Err(Error::VertexOutOfRange {
            vertex: order.len(),
            n,
        });
    }

    let mut remaining = vec![true; n];
    let mut is_sd = vec![true; n];
    let mut certificates: Vec<Option<Certificate>> = vec![None; n];
    for &v in order {
        if !remaining[v] {
            continue;
        }
        match semi_jposy_witness(g, m, v)? {
            Some(walk) => {
                remaining[v] = false;
                certificates[v] = Some(Certificate::Witness(walk));
            }
            None => {
                let partner = m.mate(v);
                for x in [v, partner] {
                    remaining[x] = false;
                    is_sd[x] = false;
                    certificates[x] = Some(Certificate::NoClosedWalk { searched: v });
                }
            }
        }
    }
    let certificates = certificates
        .into_iter()
        .map(|c| c.expect("every vertex is visited"))
        .collect();
    SdKePartition::assemble(g, m.clone(), &is_sd, certificates)
}

/// Partition of a matchable graph using its deterministic maximum matching.
pub fn partition(g: &Graph) -> Result<SdKePartition> {
    let m = perfect_matching(g)?;
    sd_ke_partition(g, &m)
}

/// fp(G) = G[V_SD(G)].
pub fn sd_part(g: &Graph) -> Result<Graph> {
    Ok(partition(g)?.sd_part)
}

/// ke(G) = G - fp(G).
pub fn ke_part(g: &Graph) -> Result<Graph> {
    Ok(partition(g)?.ke_part)
}

/// Edges of `g` joining the SD part to the KE part.
pub fn sd_ke_cut(g: &Graph) -> Result<Vec<EdgeRef>> {
    Ok(partition(g)?.cut)
}

/// V_SD(G) for an arbitrary graph.
///
/// Matchable graphs go through [`partition`]. Otherwise every maximum matching
/// `M` is enumerated (up to `bound` vertices) and `G` is completed to a
/// matchable graph `G_M`: each `M`-exposed vertex `x` gets a pendant partner
/// `x'` sitting at the base of a new triangle `x' a b` with `ab` matched. An
/// alternating walk that leaves an exposed vertex and comes back to it turns
/// into an mm-closed walk through the triangle, so the separation rule on
/// `G_M` marks the vertices of `G` that lie on such configurations. The
/// union over all `M` is returned, sorted.
pub fn sd_vertices_general(g: &Graph, bound: usize) -> Result<Vec<usize>> {
    if is_matchable(g) {
        return Ok(partition(g)?.sd_vertices);
    }
    let n = g.order();
    let mut sd = BTreeSet::new();
    for m in enumerate_maximum_matchings(g, bound)?.iter() {
        let exposed: Vec<usize> = (0..n).filter(|&v| !m.is_saturated(v)).collect();
        let mut extra_edges = Vec::with_capacity(4 * exposed.len());
        let mut pairs: Vec<(usize, usize)> = m.pairs().iter().map(|e| (e.u, e.v)).collect();
        for (i, &x) in exposed.iter().enumerate() {
            let (stem, a, b) = (n + 3 * i, n + 3 * i + 1, n + 3 * i + 2);
            extra_edges.extend_from_slice(&[(x, stem), (stem, a), (stem, b), (a, b)]);
            pairs.extend_from_slice(&[(x, stem), (a, b)]);
        }
        let completed = g.extend(3 * exposed.len(), &extra_edges)?;
        let perfect = Matching::from_pairs(&completed, &pairs)?;
        let p = sd_ke_partition(&completed, &perfect)?;
        sd.extend(p.sd_vertices.into_iter().filter(|&v| v < n));
    }
    Ok(sd.into_iter().collect())
}

/// V_KE(G) for an arbitrary graph, the complement of [`sd_vertices_general`].
pub fn ke_vertices_general(g: &Graph, bound: usize) -> Result<Vec<usize>> {
    let sd = sd_vertices_general(g, bound)?;
    Ok((0..g.order()).filter(|v| sd.binary_search(v).is_err()).collect())
}

/// Outcome of deleting one KE-part edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub edge: EdgeRef,
    /// Some maximum matching of G avoids the edge.
    pub avoidable: bool,
    pub sd_before: Vec<usize>,
    pub sd_after: Vec<usize>,
    /// V_SD(G) is contained in V_SD(G - e).
    pub inclusion_holds: bool,
    pub equal: bool,
}

impl StabilityReport {
    /// Inclusion always, equality whenever the edge is avoidable.
    pub fn holds(&self) -> bool {
        self.inclusion_holds && (!self.avoidable || self.equal)
    }
}

/// Compares V_SD(G) with V_SD(G - e) for an edge `e` of the KE part.
///
/// `bound` caps the maximum-matching enumeration used when `G` or `G - e`
/// is not matchable.
pub fn check_stability_under_deletion(g: &Graph, e: EdgeRef, bound: usize) -> Result<StabilityReport> {
    if !g.has_edge(e.u, e.v) {
        return Err(Error::MissingEdge(e.u, e.v));
    }
    let sd_before = sd_vertices_general(g, bound)?;
    if sd_before.binary_search(&e.u).is_ok() || sd_before.binary_search(&e.v).is_ok() {
        return Err(Error::NotKeEdge(e.u, e.v));
    }
    let avoidable = exists_max_matching_avoiding(g, e)?;
    let sd_after = sd_vertices_general(&g.delete_edge(e)?, bound)?;
    let inclusion_holds = sd_before.iter().all(|v| sd_after.binary_search(v).is_ok());
    let equal = sd_before == sd_after;
    Ok(StabilityReport {
        edge: e,
        avoidable,
        sd_before,
        sd_after,
        inclusion_holds,
        equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alternating::verify_walk;
    use crate::fixtures;
    use crate::matching::DEFAULT_ENUMERATION_BOUND;

    fn labels(g: &Graph, vs: &[usize]) -> Vec<i64> {
        vs.iter().map(|&v| g.label(v)).collect()
    }

    #[test]
    fn ladder_is_all_ke() {
        let g = fixtures::ladder();
        let p = sd_ke_partition(&g, &fixtures::ladder_matching_a(&g)).unwrap();
        assert!(p.sd_vertices.is_empty());
        assert_eq!(p.ke_labels(&g), (1..=8).collect::<Vec<_>>());
        assert!(p.cut.is_empty());
        assert_eq!(p.ke_part, g);
    }

    #[test]
    fn octet_is_an_sd_graph() {
        let g = fixtures::octet();
        let p = sd_ke_partition(&g, &fixtures::octet_matching_a(&g)).unwrap();
        assert!(p.is_sd_graph());
        assert_eq!(p.sd_part, g);
        assert!(p.cut.is_empty());
        assert_eq!(sd_ke_cut(&g).unwrap(), vec![]);
    }

    #[test]
    fn jposy12_partition() {
        let g = fixtures::jposy12();
        let p = sd_ke_partition(&g, &fixtures::jposy12_matching(&g)).unwrap();
        assert_eq!(p.sd_labels(&g), (0..=9).collect::<Vec<_>>());
        assert_eq!(p.ke_labels(&g), vec![10, 11]);
        assert_eq!(p.cut, vec![g.edge_by_labels(8, 10).unwrap()]);
        assert_eq!(p.ke_part.labels(), &[10, 11]);
        assert_eq!(p.ke_part.size(), 1);
        for (v, w) in p.witnesses() {
            assert_eq!(w.start(), Some(v));
            assert!(w.is_closed());
            assert_eq!(verify_walk(&g, &p.matching, w), Ok(()));
        }
        assert_eq!(p.witnesses().count(), 10);
        assert_eq!(ke_part(&g).unwrap().labels(), &[10, 11]);
    }

    #[test]
    fn partner_without_walk_drags_vertex_into_ke() {
        // A vertex can own an mm-closed walk while its partner does not; both
        // still belong to the KE part.
        let g = fixtures::unmatchable9();
        let m = fixtures::unmatchable9_matching(&g);
        let five = g.vertex(5).unwrap();
        let completed = g.extend(1, &[(five, 9)]).unwrap();
        let mut pairs: Vec<(usize, usize)> = m.pairs().iter().map(|e| (e.u, e.v)).collect();
        pairs.push((five, 9));
        let mc = Matching::from_pairs(&completed, &pairs).unwrap();
        let v6 = completed.vertex(6).unwrap();
        let v7 = completed.vertex(7).unwrap();
        assert!(crate::alternating::has_mm_closed_walk(&completed, &mc, v7).unwrap());
        assert!(!crate::alternating::has_mm_closed_walk(&completed, &mc, v6).unwrap());
        let p = sd_ke_partition(&completed, &mc).unwrap();
        assert!(p.is_ke(v6) && p.is_ke(v7));
        let reversed: Vec<usize> = (0..completed.order()).rev().collect();
        assert_eq!(sd_ke_partition_in_order(&completed, &mc, &reversed).unwrap().sd_vertices, p.sd_vertices);
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = Graph::path(3);
        let m = Matching::from_pairs(&g, &[(0, 1)]).unwrap();
        assert_eq!(sd_ke_partition(&g, &m), Err(Error::NotPerfect));
        assert_eq!(partition(&Graph::cycle(5)), Err(Error::NotMatchable));
        assert_eq!(sd_part(&Graph::cycle(5)), Err(Error::NotMatchable));
        let k2 = Graph::complete(2);
        let mk = Matching::from_pairs(&k2, &[(0, 1)]).unwrap();
        assert!(sd_ke_partition_in_order(&k2, &mk, &[0, 0]).is_err());
        assert!(sd_ke_partition_in_order(&k2, &mk, &[0]).is_err());
    }

    #[test]
    fn empty_graph() {
        let p = partition(&Graph::empty(0)).unwrap();
        assert!(p.sd_vertices.is_empty() && p.ke_vertices.is_empty());
    }

    #[test]
    fn unmatchable9_general_partition_and_stability() {
        let g = fixtures::unmatchable9();
        let ke = ke_vertices_general(&g, DEFAULT_ENUMERATION_BOUND).unwrap();
        assert_eq!(labels(&g, &ke), vec![6, 7]);

        let e = g.edge_by_labels(6, 7).unwrap();
        let h = g.delete_edge(e).unwrap();
        assert!(ke_vertices_general(&h, DEFAULT_ENUMERATION_BOUND).unwrap().is_empty());

        let report = check_stability_under_deletion(&g, e, DEFAULT_ENUMERATION_BOUND).unwrap();
        assert!(!report.avoidable);
        assert!(report.inclusion_holds);
        assert!(!report.equal);
        assert!(report.holds());
    }

    #[test]
    fn stability_on_bipartite_union() {
        let g = Graph::cycle(4).disjoint_union(&Graph::complete(2));
        for &e in g.edges() {
            if e.u < 4 {
                let r = check_stability_under_deletion(&g, e, 16).unwrap();
                assert!(r.avoidable && r.equal && r.holds());
                assert!(r.sd_before.is_empty());
            }
        }
    }

    #[test]
    fn stability_rejects_cut_edge() {
        let g = fixtures::jposy12();
        let e = g.edge_by_labels(8, 10).unwrap();
        assert_eq!(
            check_stability_under_deletion(&g, e, 16),
            Err(Error::NotKeEdge(e.u, e.v))
        );
    }

    #[test]
    fn general_matches_partition_when_matchable() {
        let g = fixtures::jposy12();
        assert_eq!(sd_vertices_general(&g, 16).unwrap(), partition(&g).unwrap().sd_vertices);
    }
}
