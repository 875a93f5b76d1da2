//! Brute-force oracles written independently of the library algorithms.
#![allow(dead_code)]

use sdke::{Graph, Matching};

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// α(G) by trying every vertex subset.
pub fn alpha(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 20);
    let adj = adjacency_masks(g);
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s & 1 << v == 0 || adj[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// μ(G) by dynamic programming over vertex subsets.
pub fn mu(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 20);
    let adj = adjacency_masks(g);
    let mut best = vec![0usize; 1 << n];
    for s in 1usize..1 << n {
        let v = s.trailing_zeros() as usize;
        let rest = s & !(1 << v);
        let mut b = best[rest];
        let mut nb = adj[v] as usize & rest;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            b = b.max(1 + best[rest & !(1 << w)]);
        }
        best[s] = b;
    }
    best[(1 << n) - 1]
}

/// Every perfect matching, as sorted pair lists.
pub fn perfect_matchings(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    fn rec(g: &Graph, used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some(v) = used.iter().position(|u| !u) else {
            out.push(cur.clone());
            return;
        };
        used[v] = true;
        for &w in g.neighbors(v) {
            if !used[w] {
                used[w] = true;
                cur.push((v.min(w), v.max(w)));
                rec(g, used, cur, out);
                cur.pop();
                used[w] = false;
            }
        }
        used[v] = false;
    }
    let mut out = Vec::new();
    rec(g, &mut vec![false; g.order()], &mut Vec::new(), &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// det and perm of the adjacency matrix by the Leibniz sum. Small n only.
pub fn leibniz(g: &Graph) -> (i64, i64) {
    assert!(g.order() <= 8);
    let mut det = 0;
    let mut perm = 0;
    for p in permutations(g.order()) {
        if (0..g.order()).all(|i| g.has_edge(i, p[i])) {
            det += sign(&p);
            perm += 1;
        }
    }
    (det, perm)
}

/// Vertices reachable from `v` along walks that start and end with a
/// matched edge, found by extending every alternating walk up to `2n + 2`
/// edges.
pub fn reach_by_walks(g: &Graph, m: &Matching, v: usize) -> Vec<usize> {
    let n = g.order();
    let mut hit = vec![false; n];
    // (current vertex, next edge must be matched, edges so far)
    let mut stack = vec![(v, true, 0usize)];
    while let Some((x, want_matched, len)) = stack.pop() {
        if !want_matched && len > 0 {
            hit[x] = true;
        }
        if len == 2 * n + 2 {
            continue;
        }
        if want_matched {
            stack.push((m.mate(x), false, len + 1));
        } else {
            for &y in g.neighbors(x) {
                if y != m.mate(x) {
                    stack.push((y, true, len + 1));
                }
            }
        }
    }
    (0..n).filter(|&u| hit[u]).collect()
}

/// Random graph with a planted perfect matching on pairs (0,1), (2,3), ...
/// taken from a bit string: bit `k` decides the `k`-th remaining pair.
pub fn planted_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if v == u + 1 && u % 2 == 0 {
                edges.push((u, v));
            } else {
                if bits.get(k).copied().unwrap_or(false) {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits.get(k).copied().unwrap_or(false) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}
