mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::subsequence;
use sdke::alternating::{has_mm_closed_walk, reachable_set, semi_jposy_witness, verify_walk};
use sdke::decomposition::{sd_ke_partition, sd_ke_partition_in_order};
use sdke::determinantal::{det_adjacency, det_via_sachs, perm_adjacency, perm_via_sachs};
use sdke::matching::{enumerate_perfect_matchings, maximum_matching, perfect_matching};
use sdke::verification::independence_number;
use sdke::{parse_edge_list, serialize_edge_list, Graph, Matching};

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| common::graph_from_bits(n, &bits))
    })
}

/// Graphs with the perfect matching (0,1), (2,3), ... planted.
fn planted_graph(max_pairs: usize) -> impl Strategy<Value = Graph> {
    (1..=max_pairs).prop_flat_map(|pairs| {
        let n = 2 * pairs;
        proptest::collection::vec(prop::bool::weighted(0.3), n * (n - 1) / 2)
            .prop_map(move |bits| common::planted_from_bits(n, &bits))
    })
}

fn planted_matching(g: &Graph) -> Matching {
    let pairs: Vec<(usize, usize)> = (0..g.order() / 2).map(|i| (2 * i, 2 * i + 1)).collect();
    Matching::from_pairs(g, &pairs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn blossom_matches_subset_dp(g in any_graph(11)) {
        let m = maximum_matching(&g);
        m.validate(&g).unwrap();
        prop_assert_eq!(m.size(), common::mu(&g));
    }

    #[test]
    fn independence_number_matches_subsets(g in any_graph(12)) {
        prop_assert_eq!(independence_number(&g, 30).unwrap(), common::alpha(&g));
    }

    #[test]
    fn reachable_set_matches_walk_search(g in planted_graph(4)) {
        let m = planted_matching(&g);
        for v in 0..g.order() {
            let oracle = common::reach_by_walks(&g, &m, v);
            prop_assert_eq!(&reachable_set(&g, &m, v).unwrap().members, &oracle);
            prop_assert_eq!(has_mm_closed_walk(&g, &m, v).unwrap(), oracle.contains(&v));
        }
    }

    #[test]
    fn witnesses_are_short_closed_mm_walks(g in planted_graph(5)) {
        let m = planted_matching(&g);
        for v in 0..g.order() {
            match semi_jposy_witness(&g, &m, v).unwrap() {
                Some(w) => {
                    prop_assert!(verify_walk(&g, &m, &w).is_ok());
                    prop_assert!(w.is_closed());
                    prop_assert_eq!(w.start(), Some(v));
                    prop_assert!(w.len() <= 2 * g.order());
                }
                None => prop_assert!(!has_mm_closed_walk(&g, &m, v).unwrap()),
            }
        }
    }

    #[test]
    fn sachs_expansions_match_leibniz(g in any_graph(7)) {
        let (det, perm) = common::leibniz(&g);
        prop_assert_eq!(det_via_sachs(&g, 20).unwrap(), BigInt::from(det));
        prop_assert_eq!(perm_via_sachs(&g, 20).unwrap(), BigInt::from(perm));
        prop_assert_eq!(det_adjacency(&g), BigInt::from(det));
        prop_assert_eq!(perm_adjacency(&g, 20).unwrap(), BigInt::from(perm));
    }

    #[test]
    fn partition_ignores_matching_and_order(
        g in planted_graph(5),
        order in Just((0..10).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let base = sd_ke_partition(&g, &planted_matching(&g)).unwrap();
        for m in enumerate_perfect_matchings(&g, 12).unwrap().iter() {
            prop_assert_eq!(&sd_ke_partition(&g, m).unwrap().sd_vertices, &base.sd_vertices);
        }
        let order: Vec<usize> = order.into_iter().filter(|&v| v < g.order()).collect();
        let p = sd_ke_partition_in_order(&g, &base.matching, &order).unwrap();
        prop_assert_eq!(p.sd_vertices, base.sd_vertices);
    }

    #[test]
    fn sd_side_is_closed_under_the_matching(g in planted_graph(6)) {
        let m = planted_matching(&g);
        let p = sd_ke_partition(&g, &m).unwrap();
        for v in 0..g.order() {
            prop_assert_eq!(p.is_sd(v), p.is_sd(m.mate(v)));
            let both = has_mm_closed_walk(&g, &m, v).unwrap()
                && has_mm_closed_walk(&g, &m, m.mate(v)).unwrap();
            prop_assert_eq!(p.is_sd(v), both);
        }
    }

    #[test]
    fn products_and_mu_split(g in planted_graph(6)) {
        let p = sd_ke_partition(&g, &planted_matching(&g)).unwrap();
        prop_assert_eq!(det_adjacency(&g), det_adjacency(&p.sd_part) * det_adjacency(&p.ke_part));
        prop_assert_eq!(
            perm_adjacency(&g, 20).unwrap(),
            perm_adjacency(&p.sd_part, 20).unwrap() * perm_adjacency(&p.ke_part, 20).unwrap()
        );
        prop_assert_eq!(common::mu(&g), common::mu(&p.sd_part) + common::mu(&p.ke_part));
        prop_assert_eq!(common::alpha(&p.ke_part) + common::mu(&p.ke_part), p.ke_part.order());
    }

    #[test]
    fn edge_list_round_trip(g in any_graph(12)) {
        let text = serialize_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_edge_list(&back), text);
        prop_assert_eq!(back.canonical_hash(), g.canonical_hash());
    }

    #[test]
    fn induced_subgraph_keeps_inner_edges(
        g in any_graph(10),
        keep in subsequence((0..10).collect::<Vec<usize>>(), 0..=10),
    ) {
        let keep: Vec<usize> = keep.into_iter().filter(|&v| v < g.order()).collect();
        let (h, remap) = g.induced_subgraph(&keep).unwrap();
        let inner = g.edges().iter().filter(|e| keep.contains(&e.u) && keep.contains(&e.v)).count();
        prop_assert_eq!(h.size(), inner);
        prop_assert_eq!(h.order(), keep.len());
        for e in h.edges() {
            prop_assert!(g.has_edge(remap[e.u], remap[e.v]));
        }
    }

    #[test]
    fn disjoint_union_multiplies(a in any_graph(6), b in any_graph(6)) {
        let u = a.disjoint_union(&b);
        prop_assert_eq!(u.size(), a.size() + b.size());
        prop_assert_eq!(det_adjacency(&u), det_adjacency(&a) * det_adjacency(&b));
        prop_assert_eq!(
            perm_adjacency(&u, 20).unwrap(),
            perm_adjacency(&a, 20).unwrap() * perm_adjacency(&b, 20).unwrap()
        );
    }

    #[test]
    fn permanent_bounds(g in any_graph(9)) {
        let det = det_adjacency(&g);
        let perm = perm_adjacency(&g, 20).unwrap();
        prop_assert!(perm >= det.magnitude().clone().into());
        let matchings = common::perfect_matchings(&g).len();
        prop_assert!(perm >= BigInt::from(matchings));
        prop_assert_eq!(perfect_matching(&g).is_ok(), matchings > 0);
    }
}
