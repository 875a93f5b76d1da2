//! Simple undirected graphs on contiguous vertex ids.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..n`; every vertex
//! also carries an external integer label so that fixtures drawn with
//! 1-based (or otherwise arbitrary) labels keep their printed names through
//! induced subgraphs and reports.

mod dot;
mod io;

pub use dot::export_dot;
pub use io::{parse_edge_list, serialize_edge_list};

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeRef {
    pub u: usize,
    pub v: usize,
}

impl EdgeRef {
    /// Canonical edge between two distinct vertices, in either order.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::LoopEdge(a));
        }
        Ok(EdgeRef {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite `x`, if `x` is an endpoint.
    pub fn other(&self, x: usize) -> Option<usize> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Construction options for [`Graph::build`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Silently drop repeated edges instead of rejecting them.
    pub dedup: bool,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<EdgeRef>,
    adjacency: Vec<Vec<usize>>,
    labels: Vec<i64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edge_pairs())
            .field("labels", &self.labels)
            .finish()
    }
}

impl Graph {
    /// Strict construction: loops, out-of-range endpoints and duplicates are errors.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(n, edges, BuildOptions::default())
    }

    pub fn build(n: usize, edges: &[(usize, usize)], options: BuildOptions) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::EndpointOutOfRange { u: a, v: b, n });
            }
            let e = EdgeRef::new(a, b)?;
            if !set.insert(e) && !options.dedup {
                return Err(Error::DuplicateEdge(e.u, e.v));
            }
        }
        Ok(Self::from_canonical(n, set.into_iter().collect(), (0..n as i64).collect()))
    }

    /// Builds a graph whose vertices are named by arbitrary distinct labels.
    ///
    /// Internal ids follow the order of `labels`, so `labels[i]` becomes vertex `i`.
    pub fn from_labels(labels: &[i64], edges: &[(i64, i64)]) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, &l) in labels.iter().enumerate() {
            if index.insert(l, i).is_some() {
                return Err(Error::DuplicateLabel(l));
            }
        }
        let lookup = |l: i64| index.get(&l).copied().ok_or(Error::UnknownLabel(l));
        let pairs = edges
            .iter()
            .map(|&(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut g = Self::new(labels.len(), &pairs)?;
        g.labels = labels.to_vec();
        Ok(g)
    }

    /// Replaces the label table. Labels must be distinct and one per vertex.
    pub fn with_labels(mut self, labels: Vec<i64>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::VertexOutOfRange {
                vertex: labels.len(),
                n: self.n,
            });
        }
        let mut seen = BTreeSet::new();
        for &l in &labels {
            if !seen.insert(l) {
                return Err(Error::DuplicateLabel(l));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    fn from_canonical(n: usize, edges: Vec<EdgeRef>, labels: Vec<i64>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for e in &edges {
            adjacency[e.u].push(e.v);
            adjacency[e.v].push(e.u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adjacency,
            labels,
        }
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new(), (0..n as i64).collect())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| EdgeRef { u, v }))
            .collect();
        Self::from_canonical(n, edges, (0..n as i64).collect())
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| EdgeRef { u: v - 1, v }).collect();
        Self::from_canonical(n, edges, (0..n as i64).collect())
    }

    /// Cycle `0, 1, ..., n-1, 0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut pairs: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        pairs.push((0, n - 1));
        Self::new(n, &pairs).expect("cycle edges are valid")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Edges in canonical lexicographic order.
    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.u, e.v)).collect()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> i64 {
        self.labels[v]
    }

    /// Internal id of the vertex carrying `label`.
    pub fn vertex(&self, label: i64) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Looks up several labels at once.
    pub fn vertices(&self, labels: &[i64]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|&l| self.vertex(l).ok_or(Error::UnknownLabel(l)))
            .collect()
    }

    /// Edge between two labelled vertices.
    pub fn edge_by_labels(&self, a: i64, b: i64) -> Result<EdgeRef> {
        let u = self.vertex(a).ok_or(Error::UnknownLabel(a))?;
        let v = self.vertex(b).ok_or(Error::UnknownLabel(b))?;
        let e = EdgeRef::new(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(e.u, e.v));
        }
        Ok(e)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// The subgraph induced by `subset`, together with the table mapping each
    /// new vertex id to its id in `self`. New ids follow increasing old ids;
    /// labels are carried over.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut keep = vec![false; self.n];
        for &v in subset {
            self.check_vertex(v)?;
            keep[v] = true;
        }
        let remap: Vec<usize> = (0..self.n).filter(|&v| keep[v]).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in remap.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep[e.u] && keep[e.v])
            .map(|e| EdgeRef {
                u: new_id[e.u],
                v: new_id[e.v],
            })
            .collect();
        let labels = remap.iter().map(|&v| self.labels[v]).collect();
        Ok((Self::from_canonical(remap.len(), edges, labels), remap))
    }

    /// `G - e`: same vertex set, one edge fewer.
    pub fn delete_edge(&self, e: EdgeRef) -> Result<Graph> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::MissingEdge(e.u, e.v));
        }
        let edges = self.edges.iter().copied().filter(|&f| f != e).collect();
        Ok(Self::from_canonical(self.n, edges, self.labels.clone()))
    }

    /// Adds vertices and edges on top of an existing graph. New vertices get
    /// labels after the current maximum.
    pub fn extend(&self, extra_vertices: usize, extra_edges: &[(usize, usize)]) -> Result<Graph> {
        let n = self.n + extra_vertices;
        let mut pairs = self.edge_pairs();
        pairs.extend_from_slice(extra_edges);
        let next = self.labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut labels = self.labels.clone();
        labels.extend((0..extra_vertices as i64).map(|i| next + i));
        Self::new(n, &pairs)?.with_labels(labels)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    /// Labels are reset to the identity.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| EdgeRef {
            u: e.u + shift,
            v: e.v + shift,
        }));
        let n = self.n + other.n;
        Self::from_canonical(n, edges, (0..n as i64).collect())
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                i += 1;
                for &y in &self.adjacency[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let mut a = vec![vec![0u8; self.n]; self.n];
        for e in &self.edges {
            a[e.u][e.v] = 1;
            a[e.v][e.u] = 1;
        }
        a
    }

    /// Hex SHA-256 of the canonical edge-list serialization.
    pub fn canonical_hash(&self) -> String {
        hex::encode(Sha256::digest(serialize_edge_list(self).as_bytes()))
    }
}
