//! Alternating walks with respect to a perfect matching.
//!
//! Walks may repeat vertices and edges, so reachability is computed over the
//! product of vertices with the membership of the last traversed edge rather
//! than over simple paths. With `M` perfect, a state `(x, matched)` means the
//! walk has just arrived at `x` through its matching edge; from there only a
//! non-matching edge may follow, and after a non-matching edge into `y` the
//! only continuation is the matching edge `y M(y)`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::Matching;

/// Membership of the first and last edge of an alternating walk
/// (`m` for a matching edge, `n` for a non-matching edge).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WalkKind {
    Mm,
    Nn,
    Mn,
    Nm,
}

impl WalkKind {
    fn from_ends(first_matched: bool, last_matched: bool) -> Self {
        match (first_matched, last_matched) {
            (true, true) => WalkKind::Mm,
            (false, false) => WalkKind::Nn,
            (true, false) => WalkKind::Mn,
            (false, true) => WalkKind::Nm,
        }
    }
}

impl fmt::Display for WalkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WalkKind::Mm => "mm",
            WalkKind::Nn => "nn",
            WalkKind::Mn => "mn",
            WalkKind::Nm => "nm",
        })
    }
}

/// A vertex sequence claimed to be an alternating walk of the given kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlternatingWalk {
    pub vertices: Vec<usize>,
    pub kind: WalkKind,
}

impl AlternatingWalk {
    pub fn new(vertices: Vec<usize>, kind: WalkKind) -> Self {
        AlternatingWalk { vertices, kind }
    }

    /// Number of edges traversed.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_closed(&self) -> bool {
        !self.is_empty() && self.vertices.first() == self.vertices.last()
    }

    pub fn start(&self) -> Option<usize> {
        self.vertices.first().copied()
    }

    /// The walk expressed with vertex labels of `g`.
    pub fn labels(&self, g: &Graph) -> Vec<i64> {
        self.vertices.iter().map(|&v| g.label(v)).collect()
    }
}

/// Why a walk failed verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkDefect {
    /// Fewer than two vertices.
    NoEdges,
    /// The matching does not belong to the graph.
    ForeignMatching,
    VertexOutOfRange { position: usize },
    NotAdjacent { position: usize },
    /// Edges `position` and `position + 1` are both matched or both unmatched.
    NotAlternating { position: usize },
    KindMismatch { claimed: WalkKind, actual: WalkKind },
}

impl fmt::Display for WalkDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalkDefect::NoEdges => write!(f, "walk has no edges"),
            WalkDefect::ForeignMatching => write!(f, "matching does not belong to the graph"),
            WalkDefect::VertexOutOfRange { position } => {
                write!(f, "vertex at position {position} is out of range")
            }
            WalkDefect::NotAdjacent { position } => {
                write!(f, "positions {position} and {} are not adjacent", position + 1)
            }
            WalkDefect::NotAlternating { position } => {
                write!(f, "edges {position} and {} do not alternate", position + 1)
            }
            WalkDefect::KindMismatch { claimed, actual } => {
                write!(f, "walk is {actual}-alternating, claimed {claimed}")
            }
        }
    }
}

/// Certificate checker: `W` is a walk of `G`, its edges alternate in and out
/// of `M`, and its end edges agree with the kind tag.
pub fn verify_walk(
    g: &Graph,
    m: &Matching,
    walk: &AlternatingWalk,
) -> std::result::Result<(), WalkDefect> {
    if m.validate(g).is_err() {
        return Err(WalkDefect::ForeignMatching);
    }
    let vs = &walk.vertices;
    if vs.len() < 2 {
        return Err(WalkDefect::NoEdges);
    }
    if let Some(position) = vs.iter().position(|&v| v >= g.order()) {
        return Err(WalkDefect::VertexOutOfRange { position });
    }
    let mut in_matching = Vec::with_capacity(vs.len() - 1);
    for (i, pair) in vs.windows(2).enumerate() {
        if !g.has_edge(pair[0], pair[1]) {
            return Err(WalkDefect::NotAdjacent { position: i });
        }
        in_matching.push(m.mate(pair[0]) == pair[1]);
    }
    if let Some(position) = in_matching.windows(2).position(|w| w[0] == w[1]) {
        return Err(WalkDefect::NotAlternating { position });
    }
    let actual = WalkKind::from_ends(in_matching[0], in_matching[in_matching.len() - 1]);
    if actual != walk.kind {
        return Err(WalkDefect::KindMismatch {
            claimed: walk.kind,
            actual,
        });
    }
    Ok(())
}

/// Vertices joined to `source` by an mm-alternating walk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReachSet {
    pub source: usize,
    /// Sorted member ids.
    pub members: Vec<usize>,
}

impl ReachSet {
    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn labels(&self, g: &Graph) -> Vec<i64> {
        self.members.iter().map(|&v| g.label(v)).collect()
    }
}

fn check_inputs(g: &Graph, m: &Matching, v: usize) -> Result<()> {
    g.check_vertex(v)?;
    m.validate(g)?;
    if !m.is_perfect_unchecked() {
        return Err(Error::NotPerfect);
    }
    Ok(())
}

const MATCHED: usize = 0;
const UNMATCHED: usize = 1;
const NO_PARENT: usize = usize::MAX;

/// Breadth-first search over `(vertex, last-edge parity)` states started at
/// `(M(v), matched)`. Inputs are assumed checked.
struct StateSearch {
    parent: Vec<usize>,
    start: usize,
}

impl StateSearch {
    fn run(g: &Graph, m: &Matching, v: usize, stop_at_return: bool) -> Self {
        let n = g.order();
        let mut parent = vec![NO_PARENT; 2 * n];
        let mut seen = vec![false; 2 * n];
        let start = 2 * m.mate(v) + MATCHED;
        let target = 2 * v + MATCHED;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(state) = queue.pop_front() {
            let x = state / 2;
            let mut push = |next: usize, queue: &mut VecDeque<usize>| {
                if !seen[next] {
                    seen[next] = true;
                    parent[next] = state;
                    queue.push_back(next);
                }
            };
            if state % 2 == MATCHED {
                for &y in g.neighbors(x) {
                    if m.mate(x) != y {
                        push(2 * y + UNMATCHED, &mut queue);
                    }
                }
            } else {
                push(2 * m.mate(x) + MATCHED, &mut queue);
            }
            if stop_at_return && seen[target] {
                break;
            }
        }
        StateSearch { parent, start }
    }

    fn reached(&self, state: usize) -> bool {
        state == self.start || self.parent[state] != NO_PARENT
    }

    fn path_to(&self, target: usize) -> Vec<usize> {
        let mut states = vec![target];
        let mut s = target;
        while s != self.start {
            s = self.parent[s];
            states.push(s);
        }
        states.reverse();
        states.into_iter().map(|s| s / 2).collect()
    }
}

/// R(M, v): every `u` with an mm-alternating walk from `v` to `u`.
/// `M` must be a perfect matching of `g`. Linear time.
pub fn reachable_set(g: &Graph, m: &Matching, v: usize) -> Result<ReachSet> {
    check_inputs(g, m, v)?;
    let search = StateSearch::run(g, m, v, false);
    let members = (0..g.order())
        .filter(|&u| search.reached(2 * u + MATCHED))
        .collect();
    Ok(ReachSet { source: v, members })
}

/// Whether an mm-alternating closed walk starts and ends at `v`.
pub fn has_mm_closed_walk(g: &Graph, m: &Matching, v: usize) -> Result<bool> {
    check_inputs(g, m, v)?;
    let search = StateSearch::run(g, m, v, true);
    Ok(search.reached(2 * v + MATCHED))
}

/// A shortest mm-alternating closed walk at `v`, if one exists.
///
/// The walk is read off the search tree, so it has at most `2n` edges.
pub fn semi_jposy_witness(g: &Graph, m: &Matching, v: usize) -> Result<Option<AlternatingWalk>> {
    check_inputs(g, m, v)?;
    let search = StateSearch::run(g, m, v, true);
    let target = 2 * v + MATCHED;
    if !search.reached(target) {
        return Ok(None);
    }
    let mut vertices = vec![v];
    vertices.extend(search.path_to(target));
    Ok(Some(AlternatingWalk::new(vertices, WalkKind::Mm)))
}
