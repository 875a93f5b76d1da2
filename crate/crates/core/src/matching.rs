//! Matchings as involutions, maximum matching on general graphs, and
//! exhaustive enumeration for small instances.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph};

/// Default vertex bound for exhaustive matching enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 16;

/// A matching stored as its involution: `mate(v)` is the partner of `v`, or
/// `v` itself when `v` is unsaturated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    mate: Vec<usize>,
}

impl Matching {
    /// The empty matching on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: (0..n).collect(),
        }
    }

    /// Builds a matching of `g` from vertex pairs and validates it.
    pub fn from_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut mate: Vec<usize> = (0..g.order()).collect();
        for &(a, b) in pairs {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if a == b || mate[a] != a || mate[b] != b {
                return Err(Error::InvalidMatching(format!(
                    "pair ({a}, {b}) overlaps another pair"
                )));
            }
            mate[a] = b;
            mate[b] = a;
        }
        let m = Matching { mate };
        m.validate(g)?;
        Ok(m)
    }

    /// Same as [`Matching::from_pairs`] with pairs given by vertex labels.
    pub fn from_label_pairs(g: &Graph, pairs: &[(i64, i64)]) -> Result<Self> {
        let ids = pairs
            .iter()
            .map(|&(a, b)| {
                Ok((
                    g.vertex(a).ok_or(Error::UnknownLabel(a))?,
                    g.vertex(b).ok_or(Error::UnknownLabel(b))?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_pairs(g, &ids)
    }

    /// Builds from a raw involution table (unchecked against any graph).
    pub fn from_mates(mate: Vec<usize>) -> Result<Self> {
        let n = mate.len();
        for (v, &w) in mate.iter().enumerate() {
            if w >= n || mate[w] != v {
                return Err(Error::InvalidMatching(format!(
                    "mate table is not an involution at vertex {v}"
                )));
            }
        }
        Ok(Matching { mate })
    }

    /// Checks that this is an involution whose pairs are edges of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.mate.len() != g.order() {
            return Err(Error::InvalidMatching(format!(
                "matching covers {} vertices, graph has {}",
                self.mate.len(),
                g.order()
            )));
        }
        for (v, &w) in self.mate.iter().enumerate() {
            if w >= self.mate.len() || self.mate[w] != v {
                return Err(Error::InvalidMatching(format!(
                    "not an involution at vertex {v}"
                )));
            }
            if w != v && !g.has_edge(v, w) {
                return Err(Error::InvalidMatching(format!("({v}, {w}) is not an edge")));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.mate.len()
    }

    pub fn mate(&self, v: usize) -> usize {
        self.mate[v]
    }

    pub fn mates(&self) -> &[usize] {
        &self.mate
    }

    pub fn is_saturated(&self, v: usize) -> bool {
        self.mate[v] != v
    }

    /// Number of matched pairs.
    pub fn size(&self) -> usize {
        self.mate.iter().enumerate().filter(|&(v, &w)| v < w).count()
    }

    pub fn pairs(&self) -> Vec<EdgeRef> {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(v, &w)| v < w)
            .map(|(v, &w)| EdgeRef { u: v, v: w })
            .collect()
    }

    pub fn contains(&self, e: EdgeRef) -> bool {
        e.u < self.mate.len() && self.mate[e.u] == e.v
    }

    /// Every vertex is matched.
    pub fn is_perfect_unchecked(&self) -> bool {
        self.mate.iter().enumerate().all(|(v, &w)| v != w)
    }

    /// Restriction to an induced subgraph given by its remap table
    /// (new id to old id). Pairs leaving the subset are dropped.
    pub fn restrict(&self, remap: &[usize]) -> Matching {
        let mut new_id = vec![usize::MAX; self.mate.len()];
        for (i, &v) in remap.iter().enumerate() {
            new_id[v] = i;
        }
        let mate = remap
            .iter()
            .enumerate()
            .map(|(i, &v)| match new_id[self.mate[v]] {
                usize::MAX => i,
                j => j,
            })
            .collect();
        Matching { mate }
    }

    /// Symmetric difference of two matchings' edge sets, as edges.
    pub fn symmetric_difference(&self, other: &Matching) -> Vec<EdgeRef> {
        let mut out: Vec<EdgeRef> = self
            .pairs()
            .into_iter()
            .filter(|&e| !other.contains(e))
            .chain(other.pairs().into_iter().filter(|&e| !self.contains(e)))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Whether the member list holds perfect matchings or maximum ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    AllPerfect,
    AllMaximum,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingFamily {
    pub kind: FamilyKind,
    pub members: Vec<Matching>,
}

impl MatchingFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Matching> {
        self.members.iter()
    }
}

const NIL: usize = usize::MAX;

/// Maximum-cardinality matching by augmenting paths with blossom contraction.
///
/// Roots and neighbors are scanned in increasing id order, so the result is
/// a deterministic function of the graph.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.order();
    let mut mate = vec![NIL; n];
    let mut search = BlossomSearch::new(n);
    for root in 0..n {
        if mate[root] != NIL {
            continue;
        }
        if let Some(end) = search.find_augmenting_path(g, &mate, root) {
            let mut v = end;
            while v != NIL {
                let pv = search.parent[v];
                let next = mate[pv];
                mate[v] = pv;
                mate[pv] = v;
                v = next;
            }
        }
    }
    Matching {
        mate: mate
            .into_iter()
            .enumerate()
            .map(|(v, w)| if w == NIL { v } else { w })
            .collect(),
    }
}

/// Matching number μ(G).
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).size()
}

struct BlossomSearch {
    used: Vec<bool>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_blossom: Vec<bool>,
    lca_mark: Vec<bool>,
    queue: VecDeque<usize>,
}

impl BlossomSearch {
    fn new(n: usize) -> Self {
        BlossomSearch {
            used: vec![false; n],
            parent: vec![NIL; n],
            base: (0..n).collect(),
            in_blossom: vec![false; n],
            lca_mark: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn lca(&mut self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        self.lca_mark.fill(false);
        loop {
            a = self.base[a];
            self.lca_mark[a] = true;
            if mate[a] == NIL {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if self.lca_mark[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, g: &Graph, mate: &[usize], root: usize) -> Option<usize> {
        let n = g.order();
        self.used.fill(false);
        self.parent.fill(NIL);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in g.neighbors(v) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NIL && self.parent[mate[to]] != NIL) {
                    let cur = self.lca(mate, v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(mate, v, cur, to);
                    self.mark_path(mate, to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NIL {
                    self.parent[to] = v;
                    if mate[to] == NIL {
                        return Some(to);
                    }
                    let next = mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

/// Validates `m` against `g` and reports whether every vertex is matched.
pub fn is_perfect(g: &Graph, m: &Matching) -> Result<bool> {
    m.validate(g)?;
    Ok(m.is_perfect_unchecked())
}

/// `g` has a perfect matching.
pub fn is_matchable(g: &Graph) -> bool {
    g.order().is_multiple_of(2) && 2 * matching_number(g) == g.order()
}

/// A perfect matching of `g`, or [`Error::NotMatchable`].
pub fn perfect_matching(g: &Graph) -> Result<Matching> {
    let m = maximum_matching(g);
    if m.is_perfect_unchecked() {
        Ok(m)
    } else {
        Err(Error::NotMatchable)
    }
}

fn check_bound(g: &Graph, bound: usize) -> Result<()> {
    if g.order() > bound {
        Err(Error::TooLarge {
            what: "matching enumeration",
            n: g.order(),
            bound,
        })
    } else {
        Ok(())
    }
}

/// All perfect matchings, found by pairing the lowest unmatched vertex with
/// each of its free neighbors in increasing order.
pub fn enumerate_perfect_matchings(g: &Graph, bound: usize) -> Result<MatchingFamily> {
    check_bound(g, bound)?;
    let mut members = Vec::new();
    if g.order().is_multiple_of(2) {
        let mut mate = vec![NIL; g.order()];
        enumerate_rec(g, &mut mate, 0, 0, &mut members);
    }
    Ok(MatchingFamily {
        kind: FamilyKind::AllPerfect,
        members,
    })
}

/// All maximum matchings. Each vertex in turn is either paired with a free
/// higher neighbor or left exposed, subject to the exposure budget
/// `n - 2μ(G)`.
pub fn enumerate_maximum_matchings(g: &Graph, bound: usize) -> Result<MatchingFamily> {
    check_bound(g, bound)?;
    let budget = g.order() - 2 * matching_number(g);
    let mut members = Vec::new();
    let mut mate = vec![NIL; g.order()];
    enumerate_rec(g, &mut mate, 0, budget, &mut members);
    Ok(MatchingFamily {
        kind: FamilyKind::AllMaximum,
        members,
    })
}

fn enumerate_rec(
    g: &Graph,
    mate: &mut Vec<usize>,
    from: usize,
    exposures_left: usize,
    out: &mut Vec<Matching>,
) {
    let Some(v) = (from..g.order()).find(|&v| mate[v] == NIL) else {
        out.push(Matching {
            mate: mate.clone(),
        });
        return;
    };
    for &w in g.neighbors(v) {
        if w > v && mate[w] == NIL {
            mate[v] = w;
            mate[w] = v;
            enumerate_rec(g, mate, v + 1, exposures_left, out);
            mate[v] = NIL;
            mate[w] = NIL;
        }
    }
    if exposures_left > 0 {
        mate[v] = v;
        enumerate_rec(g, mate, v + 1, exposures_left - 1, out);
        mate[v] = NIL;
    }
}

/// Some maximum matching of `g` avoids `e`, i.e. μ(G - e) = μ(G).
pub fn exists_max_matching_avoiding(g: &Graph, e: EdgeRef) -> Result<bool> {
    let h = g.delete_edge(e)?;
    Ok(matching_number(&h) == matching_number(g))
}

/// Parses the matching text format: one `u v` pair per line, `#` comments.
pub fn parse_matching(g: &Graph, text: &str) -> Result<Matching> {
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parsed: Option<Vec<usize>> = fields.iter().map(|f| f.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[a, b]) => pairs.push((a, b)),
            _ => {
                return Err(Error::Parse {
                    line: i + 1,
                    reason: "expected a pair \"u v\"".into(),
                })
            }
        }
    }
    Matching::from_pairs(g, &pairs)
}

pub fn serialize_matching(m: &Matching) -> String {
    let mut out = String::new();
    for e in m.pairs() {
        writeln!(out, "{} {}", e.u, e.v).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn small_maximum_matchings() {
        let k2 = Graph::complete(2);
        assert_eq!(maximum_matching(&k2).pairs(), vec![EdgeRef { u: 0, v: 1 }]);
        assert_eq!(matching_number(&Graph::cycle(5)), 2);
        assert_eq!(matching_number(&Graph::empty(3)), 0);
        assert_eq!(matching_number(&Graph::complete(7)), 3);
    }

    #[test]
    fn ladder_is_matchable() {
        let g = fixtures::ladder();
        let m = maximum_matching(&g);
        assert_eq!(m.size(), 4);
        assert!(is_perfect(&g, &m).unwrap());
    }

    #[test]
    fn perfectness() {
        let k2 = Graph::complete(2);
        let m = Matching::from_pairs(&k2, &[(0, 1)]).unwrap();
        assert!(is_perfect(&k2, &m).unwrap());

        let p3 = Graph::path(3);
        let m = Matching::from_pairs(&p3, &[(0, 1)]).unwrap();
        assert!(!is_perfect(&p3, &m).unwrap());

        let g = fixtures::octet();
        let m1 = fixtures::octet_matching_a(&g);
        assert!(is_perfect(&g, &m1).unwrap());
    }

    #[test]
    fn invalid_matchings() {
        let p3 = Graph::path(3);
        assert!(Matching::from_pairs(&p3, &[(0, 2)]).is_err());
        assert!(Matching::from_pairs(&p3, &[(0, 1), (1, 2)]).is_err());
        assert!(Matching::from_mates(vec![1, 2, 0]).is_err());
        let foreign = Matching::from_mates(vec![1, 0]).unwrap();
        assert!(is_perfect(&p3, &foreign).is_err());
    }

    #[test]
    fn matchability() {
        assert!(is_matchable(&Graph::cycle(4)));
        assert!(!is_matchable(&Graph::cycle(5)));
        assert!(is_matchable(&fixtures::jposy12()));
        assert!(is_matchable(&Graph::empty(0)));
        assert!(!is_matchable(&Graph::empty(2)));
    }

    #[test]
    fn perfect_enumeration_counts() {
        let count = |g: &Graph| enumerate_perfect_matchings(g, 16).unwrap().len();
        assert_eq!(count(&Graph::complete(2)), 1);
        assert_eq!(count(&Graph::cycle(4)), 2);
        assert_eq!(count(&Graph::complete(6)), 15);
        assert_eq!(count(&Graph::cycle(5)), 0);
        assert_eq!(count(&Graph::empty(0)), 1);
    }

    #[test]
    fn ladder_family_contains_both_drawn_matchings() {
        let g = fixtures::ladder();
        let family = enumerate_perfect_matchings(&g, 16).unwrap();
        assert!(family.members.contains(&fixtures::ladder_matching_a(&g)));
        assert!(family.members.contains(&fixtures::ladder_matching_b(&g)));
    }

    #[test]
    fn maximum_enumeration_counts() {
        let count = |g: &Graph| enumerate_maximum_matchings(g, 16).unwrap().len();
        assert_eq!(count(&Graph::path(3)), 2);
        assert_eq!(count(&Graph::cycle(4)), 2);
        assert_eq!(count(&Graph::cycle(5)), 5);
        assert_eq!(count(&Graph::empty(3)), 1);
    }

    #[test]
    fn enumeration_bound() {
        assert!(matches!(
            enumerate_perfect_matchings(&Graph::cycle(18), 16),
            Err(Error::TooLarge { .. })
        ));
        assert_eq!(enumerate_perfect_matchings(&Graph::cycle(18), 18).unwrap().len(), 2);
    }

    #[test]
    fn avoidable_edges() {
        let k2 = Graph::complete(2);
        assert!(!exists_max_matching_avoiding(&k2, EdgeRef::new(0, 1).unwrap()).unwrap());
        let c4 = Graph::cycle(4);
        for &e in c4.edges() {
            assert!(exists_max_matching_avoiding(&c4, e).unwrap());
        }
        let g3 = fixtures::jposy12();
        let e = g3.edge_by_labels(8, 10).unwrap();
        assert!(exists_max_matching_avoiding(&g3, e).unwrap());
        assert!(exists_max_matching_avoiding(&k2, EdgeRef::new(0, 1).unwrap()).is_ok());
        assert!(exists_max_matching_avoiding(&Graph::path(3), EdgeRef::new(0, 2).unwrap()).is_err());
    }

    #[test]
    fn matching_text_round_trip() {
        let g = Graph::cycle(4);
        let m = parse_matching(&g, "# pairs\n0 1\n2 3\n").unwrap();
        assert_eq!(serialize_matching(&m), "0 1\n2 3\n");
        assert!(parse_matching(&g, "0 2\n").is_err());
        assert!(parse_matching(&g, "0\n").is_err());
    }

    #[test]
    fn restriction() {
        let g = Graph::cycle(4);
        let m = Matching::from_pairs(&g, &[(0, 1), (2, 3)]).unwrap();
        let r = m.restrict(&[1, 2, 3]);
        assert_eq!(r.mates(), &[0, 2, 1]);
    }
}
