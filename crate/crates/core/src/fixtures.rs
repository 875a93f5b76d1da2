//! Small named graphs used throughout the tests and examples.
//!
//! Vertex labels are the ones printed on the drawings, so `ladder()` uses
//! labels `1..=8` while `jposy12()` uses `0..=11`. Look vertices up with
//! [`Graph::vertex`] rather than assuming ids equal labels.

use crate::graph::Graph;
use crate::matching::Matching;

fn labelled(labels: impl IntoIterator<Item = i64>, edges: &[(i64, i64)]) -> Graph {
    let labels: Vec<i64> = labels.into_iter().collect();
    Graph::from_labels(&labels, edges).expect("fixture edges are valid")
}

fn matching(g: &Graph, pairs: &[(i64, i64)]) -> Matching {
    Matching::from_label_pairs(g, pairs).expect("fixture matching is valid")
}

/// The 2x4 ladder on labels 1..=8 (bipartite, two drawn perfect matchings).
pub fn ladder() -> Graph {
    labelled(
        1..=8,
        &[
            (1, 2),
            (1, 5),
            (2, 3),
            (2, 6),
            (3, 4),
            (3, 7),
            (4, 8),
            (5, 6),
            (6, 7),
            (7, 8),
        ],
    )
}

pub fn ladder_matching_a(g: &Graph) -> Matching {
    matching(g, &[(1, 5), (2, 6), (3, 7), (4, 8)])
}

pub fn ladder_matching_b(g: &Graph) -> Matching {
    matching(g, &[(1, 5), (2, 6), (3, 4), (7, 8)])
}

/// An 8-vertex graph on labels 1..=8 with an empty KE part.
pub fn octet() -> Graph {
    labelled(
        1..=8,
        &[
            (1, 2),
            (1, 4),
            (2, 3),
            (2, 5),
            (3, 6),
            (4, 5),
            (4, 7),
            (4, 8),
            (5, 6),
            (5, 7),
            (5, 8),
            (7, 8),
        ],
    )
}

pub fn octet_matching_a(g: &Graph) -> Matching {
    matching(g, &[(1, 2), (4, 5), (3, 6), (7, 8)])
}

pub fn octet_matching_b(g: &Graph) -> Matching {
    matching(g, &[(1, 2), (3, 6), (5, 7), (4, 8)])
}

const JPOSY12_EDGES: [(i64, i64); 17] = [
    (1, 2),
    (1, 5),
    (3, 4),
    (0, 6),
    (7, 8),
    (9, 5),
    (9, 4),
    (0, 5),
    (5, 8),
    (2, 0),
    (10, 8),
    (2, 3),
    (4, 5),
    (1, 0),
    (6, 7),
    (8, 9),
    (10, 11),
];

const JPOSY12_MATCHING: [(i64, i64); 6] = [(2, 3), (4, 5), (1, 0), (6, 7), (8, 9), (10, 11)];

/// The 12-vertex graph on labels 0..=11 carrying a Jposy through blossom
/// 9,5,4,9; its KE part is the pendant edge 10-11.
pub fn jposy12() -> Graph {
    labelled(0..=11, &JPOSY12_EDGES)
}

pub fn jposy12_matching(g: &Graph) -> Matching {
    matching(g, &JPOSY12_MATCHING)
}

/// The alternating closed walk drawn along the Jposy of [`jposy12`], by label.
pub const JPOSY12_WALK: [i64; 18] = [9, 8, 5, 4, 3, 2, 0, 1, 2, 3, 4, 5, 1, 0, 6, 7, 8, 9];

/// A 9-vertex graph (labels 1..=9, not matchable) whose KE part is {6, 7}.
pub fn unmatchable9() -> Graph {
    labelled(
        1..=9,
        &[
            (3, 2),
            (3, 1),
            (3, 8),
            (8, 7),
            (4, 5),
            (4, 6),
            (1, 2),
            (3, 4),
            (6, 7),
            (8, 9),
        ],
    )
}

/// The maximum matching drawn on [`unmatchable9`]; vertex 5 is exposed.
pub fn unmatchable9_matching(g: &Graph) -> Matching {
    matching(g, &[(1, 2), (3, 4), (6, 7), (8, 9)])
}

/// Label-to-name table for the letter vertices of [`composite32`].
pub const COMPOSITE32_NAMES: [(i64, &str); 20] = [
    (12, "c"),
    (13, "d"),
    (14, "e"),
    (15, "f"),
    (16, "g"),
    (17, "d1"),
    (18, "h"),
    (19, "i"),
    (20, "j"),
    (21, "k"),
    (22, "l"),
    (23, "m"),
    (24, "r"),
    (25, "s"),
    (26, "t"),
    (27, "u"),
    (28, "v"),
    (29, "w"),
    (30, "z"),
    (31, "c1"),
];

/// A 32-vertex matchable graph extending [`jposy12`]. Labels 0..=11 are the
/// vertices of `jposy12`; the letter vertices are numbered per
/// [`COMPOSITE32_NAMES`]. Labels 0..=17 form the SD part, 18..=31 the KE part.
pub fn composite32() -> Graph {
    let (c, d, e, f, g, d1) = (12, 13, 14, 15, 16, 17);
    let (h, i, j, k, l, m) = (18, 19, 20, 21, 22, 23);
    let (r, s, t, u, v, w, z, c1) = (24, 25, 26, 27, 28, 29, 30, 31);
    let mut edges = JPOSY12_EDGES.to_vec();
    edges.extend_from_slice(&[
        (8, e),
        (9, e),
        (11, c),
        (10, d),
        (d, g),
        (f, g),
        (f, d1),
        (g, h),
        (i, j),
        (h, k),
        (k, m),
        (j, l),
        (11, r),
        (t, r),
        (t, s),
        (t, v),
        (t, w),
        (w, z),
        // drawn matching
        (e, f),
        (c, d),
        (g, d1),
        (i, h),
        (j, k),
        (l, m),
        (s, r),
        (t, u),
        (v, w),
        (z, c1),
    ]);
    labelled(0..=31, &edges)
}

pub fn composite32_matching(g: &Graph) -> Matching {
    let mut pairs = JPOSY12_MATCHING.to_vec();
    pairs.extend_from_slice(&[
        (14, 15),
        (12, 13),
        (16, 17),
        (19, 18),
        (20, 21),
        (22, 23),
        (25, 24),
        (26, 27),
        (28, 29),
        (30, 31),
    ]);
    matching(g, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::sd_ke_partition;
    use crate::determinantal::det_adjacency;
    use num_bigint::BigInt;

    #[test]
    fn composite32_partition_and_determinants() {
        let g = composite32();
        let m = composite32_matching(&g);
        assert!(m.is_perfect_unchecked());
        let p = sd_ke_partition(&g, &m).unwrap();
        assert_eq!(p.sd_labels(&g), (0..=17).collect::<Vec<i64>>());
        assert_eq!(p.ke_labels(&g), (18..=31).collect::<Vec<i64>>());
        assert_eq!(det_adjacency(&p.ke_part), BigInt::from(-1));
        assert_eq!(det_adjacency(&p.sd_part), BigInt::from(-5));
        assert_eq!(det_adjacency(&g), BigInt::from(5));
    }
}
