use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph};

/// Default vertex bound for Sachs enumeration.
pub const DEFAULT_SACHS_BOUND: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SachsComponent {
    /// A single edge `u < v`.
    K2(usize, usize),
    /// A simple cycle of length at least 3, listed from its smallest vertex
    /// with the smaller of the two neighbors second.
    Cycle(Vec<usize>),
}

impl SachsComponent {
    pub fn vertex_count(&self) -> usize {
        match self {
            SachsComponent::K2(..) => 2,
            SachsComponent::Cycle(c) => c.len(),
        }
    }

    pub fn is_even(&self) -> bool {
        self.vertex_count().is_multiple_of(2)
    }

    pub fn edges(&self) -> Vec<EdgeRef> {
        match self {
            SachsComponent::K2(u, v) => vec![EdgeRef { u: *u, v: *v }],
            SachsComponent::Cycle(c) => (0..c.len())
                .map(|i| EdgeRef::new(c[i], c[(i + 1) % c.len()]).expect("cycle has no loops"))
                .collect(),
        }
    }
}

/// A spanning subgraph whose components are all `K2` or cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SachsSubgraph {
    pub order: usize,
    pub components: Vec<SachsComponent>,
}

impl SachsSubgraph {
    /// c(S): number of cycle components.
    pub fn cycle_count(&self) -> usize {
        self.components
            .iter()
            .filter(|c| matches!(c, SachsComponent::Cycle(_)))
            .count()
    }

    /// κ_e(S): number of components with an even number of vertices.
    pub fn even_component_count(&self) -> usize {
        self.components.iter().filter(|c| c.is_even()).count()
    }

    pub fn edges(&self) -> Vec<EdgeRef> {
        let mut out: Vec<EdgeRef> = self.components.iter().flat_map(|c| c.edges()).collect();
        out.sort_unstable();
        out
    }

    pub fn uses_edge(&self, e: EdgeRef) -> bool {
        self.components.iter().any(|c| c.edges().contains(&e))
    }

    /// Signed term (-1)^κ_e(S) 2^c(S) of the determinant expansion.
    pub fn determinant_term(&self) -> BigInt {
        let magnitude = BigInt::one() << self.cycle_count();
        if self.even_component_count().is_multiple_of(2) {
            magnitude
        } else {
            -magnitude
        }
    }

    /// Term 2^c(S) of the permanent expansion.
    pub fn permanent_term(&self) -> BigInt {
        BigInt::one() << self.cycle_count()
    }

    /// Checks that this is a Sachs subgraph of `g` in canonical form.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.order != g.order() {
            return Err(format!("order {} differs from graph order {}", self.order, g.order()));
        }
        let mut covered = vec![false; g.order()];
        for comp in &self.components {
            let vertices: Vec<usize> = match comp {
                SachsComponent::K2(u, v) => {
                    if u >= v {
                        return Err(format!("K2 ({u}, {v}) is not canonical"));
                    }
                    vec![*u, *v]
                }
                SachsComponent::Cycle(c) => {
                    if c.len() < 3 {
                        return Err(format!("cycle {c:?} is shorter than 3"));
                    }
                    let min = *c.iter().min().unwrap();
                    if c[0] != min || c[1] > c[c.len() - 1] {
                        return Err(format!("cycle {c:?} is not canonical"));
                    }
                    c.clone()
                }
            };
            for &v in &vertices {
                if v >= g.order() {
                    return Err(format!("vertex {v} out of range"));
                }
                if std::mem::replace(&mut covered[v], true) {
                    return Err(format!("vertex {v} is covered twice"));
                }
            }
            for e in comp.edges() {
                if !g.has_edge(e.u, e.v) {
                    return Err(format!("{e} is not an edge"));
                }
            }
        }
        match covered.iter().position(|c| !c) {
            Some(v) => Err(format!("vertex {v} is not covered")),
            None => Ok(()),
        }
    }
}

fn check_bound(g: &Graph, bound: usize) -> Result<()> {
    if g.order() > bound {
        Err(Error::TooLarge {
            what: "Sachs enumeration",
            n: g.order(),
            bound,
        })
    } else {
        Ok(())
    }
}

/// Visits every Sachs subgraph of `g` exactly once.
///
/// The lowest uncovered vertex `u` is either paired with a free neighbor or
/// closed into a simple cycle through free vertices, each cycle generated
/// once by requiring its second vertex to be smaller than its last. The
/// visitor may stop the enumeration early by returning `Break`, in which
/// case the result is `false`.
pub fn for_each_sachs<F>(g: &Graph, bound: usize, mut visit: F) -> Result<bool>
where
    F: FnMut(&SachsSubgraph) -> ControlFlow<()>,
{
    check_bound(g, bound)?;
    let mut walker = Walker {
        g,
        covered: vec![false; g.order()],
        current: SachsSubgraph {
            order: g.order(),
            components: Vec::new(),
        },
        visit: &mut visit,
    };
    Ok(walker.cover_from(0).is_continue())
}

struct Walker<'a, F> {
    g: &'a Graph,
    covered: Vec<bool>,
    current: SachsSubgraph,
    visit: &'a mut F,
}

impl<F: FnMut(&SachsSubgraph) -> ControlFlow<()>> Walker<'_, F> {
    fn cover_from(&mut self, from: usize) -> ControlFlow<()> {
        let Some(u) = (from..self.g.order()).find(|&v| !self.covered[v]) else {
            return (self.visit)(&self.current);
        };
        self.covered[u] = true;
        for &w in self.g.neighbors(u) {
            if !self.covered[w] {
                self.covered[w] = true;
                self.current.components.push(SachsComponent::K2(u, w));
                let flow = self.cover_from(u + 1);
                self.current.components.pop();
                self.covered[w] = false;
                flow?;
            }
        }
        let mut path = vec![u];
        let flow = self.grow_cycle(&mut path);
        self.covered[u] = false;
        flow
    }

    fn grow_cycle(&mut self, path: &mut Vec<usize>) -> ControlFlow<()> {
        let u = path[0];
        let last = *path.last().unwrap();
        for &w in self.g.neighbors(last) {
            if self.covered[w] {
                continue;
            }
            self.covered[w] = true;
            path.push(w);
            let mut flow = ControlFlow::Continue(());
            if path.len() >= 3 && path[1] < w && self.g.has_edge(w, u) {
                self.current.components.push(SachsComponent::Cycle(path.clone()));
                flow = self.cover_from(u + 1);
                self.current.components.pop();
            }
            if flow.is_continue() {
                flow = self.grow_cycle(path);
            }
            path.pop();
            self.covered[w] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// All Sachs subgraphs of `g`, in enumeration order.
pub fn enumerate_sachs(g: &Graph, bound: usize) -> Result<Vec<SachsSubgraph>> {
    let mut out = Vec::new();
    for_each_sachs(g, bound, |s| {
        out.push(s.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn count_sachs(g: &Graph, bound: usize) -> Result<usize> {
    let mut count = 0;
    for_each_sachs(g, bound, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

/// det(G) as the signed sum over Sachs subgraphs of (-1)^κ_e(S) 2^c(S).
pub fn det_via_sachs(g: &Graph, bound: usize) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for_each_sachs(g, bound, |s| {
        total += s.determinant_term();
        ControlFlow::Continue(())
    })?;
    Ok(total)
}

/// perm(G) as the sum over Sachs subgraphs of 2^c(S).
pub fn perm_via_sachs(g: &Graph, bound: usize) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for_each_sachs(g, bound, |s| {
        total += s.permanent_term();
        ControlFlow::Continue(())
    })?;
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(count_sachs(&Graph::complete(2), 20).unwrap(), 1);
        assert_eq!(count_sachs(&Graph::cycle(3), 20).unwrap(), 1);
        assert_eq!(count_sachs(&Graph::cycle(4), 20).unwrap(), 3);
        assert_eq!(count_sachs(&Graph::empty(0), 20).unwrap(), 1);
        assert_eq!(count_sachs(&Graph::empty(1), 20).unwrap(), 0);
    }

    #[test]
    fn c4_enumeration_is_canonical() {
        let all = enumerate_sachs(&Graph::cycle(4), 20).unwrap();
        assert_eq!(
            all,
            vec![
                SachsSubgraph {
                    order: 4,
                    components: vec![SachsComponent::K2(0, 1), SachsComponent::K2(2, 3)]
                },
                SachsSubgraph {
                    order: 4,
                    components: vec![SachsComponent::K2(0, 3), SachsComponent::K2(1, 2)]
                },
                SachsSubgraph {
                    order: 4,
                    components: vec![SachsComponent::Cycle(vec![0, 1, 2, 3])]
                },
            ]
        );
        for s in &all {
            s.validate(&Graph::cycle(4)).unwrap();
        }
    }

    #[test]
    fn harary_small_values() {
        let cases = [
            (Graph::complete(2), -1, 1),
            (Graph::cycle(3), 2, 2),
            (Graph::cycle(4), 0, 4),
            (Graph::path(4), 1, 1),
            (Graph::empty(0), 1, 1),
            (Graph::empty(2), 0, 0),
        ];
        for (g, det, perm) in cases {
            assert_eq!(det_via_sachs(&g, 20).unwrap(), BigInt::from(det), "{g:?}");
            assert_eq!(perm_via_sachs(&g, 20).unwrap(), BigInt::from(perm), "{g:?}");
        }
    }

    #[test]
    fn census() {
        let s = SachsSubgraph {
            order: 9,
            components: vec![
                SachsComponent::K2(0, 1),
                SachsComponent::Cycle(vec![2, 3, 4]),
                SachsComponent::Cycle(vec![5, 6, 7, 8]),
            ],
        };
        assert_eq!(s.cycle_count(), 2);
        assert_eq!(s.even_component_count(), 2);
        assert_eq!(s.determinant_term(), BigInt::from(4));
        assert_eq!(s.permanent_term(), BigInt::from(4));
    }

    #[test]
    fn bound_enforced() {
        assert!(matches!(
            count_sachs(&Graph::cycle(22), 20),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn validation_catches_defects() {
        let g = Graph::cycle(4);
        let bad = SachsSubgraph {
            order: 4,
            components: vec![SachsComponent::K2(0, 1)],
        };
        assert!(bad.validate(&g).is_err());
        let bad = SachsSubgraph {
            order: 4,
            components: vec![SachsComponent::K2(0, 2), SachsComponent::K2(1, 3)],
        };
        assert!(bad.validate(&g).is_err());
        let bad = SachsSubgraph {
            order: 4,
            components: vec![SachsComponent::Cycle(vec![0, 3, 2, 1])],
        };
        assert!(bad.validate(&g).is_err());
    }
}
