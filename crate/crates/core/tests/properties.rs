// SPDX-License-Identifier: Apache-2.0

mod common;

use std::collections::{BTreeSet, HashSet};

use common::*;
use proptest::prelude::*;
use sigcolor_core::analysis::{class_ratio_cosets, class_ratio_full, EnumerationOptions};
use sigcolor_core::color::{exact_chromatic_index, verify_coloring, IncidenceColoring};
use sigcolor_core::graph::{Sign, SignedGraph, VertexSet};
use sigcolor_core::products::{cartesian, corona, strong, tensor};
use sigcolor_core::theorems::{color_cartesian_combined, greedy_tree_edge_coloring};

fn arb_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = SignedGraph> {
    (2..=max_n)
        .prop_flat_map(move |n| (Just(n), prop::collection::vec((0..n, 0..n, any::<bool>()), 1..=max_m)))
        .prop_filter_map("needs an edge", |(n, raw)| {
            let mut seen = BTreeSet::new();
            let edges: Vec<_> = raw
                .into_iter()
                .filter(|&(u, v, _)| u != v && seen.insert((u.min(v), u.max(v))))
                .map(|(u, v, neg)| (u, v, if neg { Sign::Minus } else { Sign::Plus }))
                .collect();
            (!edges.is_empty()).then(|| SignedGraph::new(n, edges).unwrap())
        })
}

fn arb_subset(n: usize) -> impl Strategy<Value = VertexSet> {
    prop::collection::vec(any::<bool>(), n)
        .prop_map(move |bits| VertexSet::from_vertices(n, (0..n).filter(|&v| bits[v])).unwrap())
}

fn arb_graph_and_subset() -> impl Strategy<Value = (SignedGraph, VertexSet)> {
    arb_graph(7, 12).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), arb_subset(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn behr_bound_and_witness(g in arb_graph(7, 12)) {
        let (chi, witness) = exact_chromatic_index(&g).unwrap();
        let d = delta(&g);
        prop_assert!(chi == d || chi == d + 1);
        prop_assert_eq!(witness.k(), chi);
        prop_assert!(valid(&g, &witness));
        prop_assert!(verify_coloring(&g, &witness).unwrap().is_valid());
    }

    #[test]
    fn switching_keeps_the_chromatic_index((g, x) in arb_graph_and_subset()) {
        let h = g.switch(&x).unwrap();
        prop_assert_eq!(balanced(&g), balanced(&h));
        let (chi, c) = exact_chromatic_index(&g).unwrap();
        prop_assert_eq!(exact_chromatic_index(&h).unwrap().0, chi);
        prop_assert!(valid(&h, &c.negate_at(&g, &x)));
    }

    #[test]
    fn balance_matches_labeling(g in arb_graph(7, 12)) {
        prop_assert_eq!(g.is_balanced(), balanced(&g));
        if let Some(x) = g.balance_witness() {
            prop_assert_eq!(negatives(&g.switch(&x).unwrap()), 0);
        }
    }

    #[test]
    fn tampering_is_caught(g in arb_graph(6, 10), pick in any::<prop::sample::Index>(), end in 0usize..2) {
        let (_, c) = exact_chromatic_index(&g).unwrap();
        let mut values = c.values().to_vec();
        let e = pick.index(values.len());
        values[e][end] += 1;
        let tampered = IncidenceColoring::new(c.k(), values);
        prop_assert!(!valid(&g, &tampered));
        prop_assert!(!verify_coloring(&g, &tampered).unwrap().is_valid());
    }

    #[test]
    fn json_round_trip(g in arb_graph(7, 12)) {
        let back = SignedGraph::from_json(&g.to_json()).unwrap();
        prop_assert_eq!(&back, &g);
        let (_, c) = exact_chromatic_index(&g).unwrap();
        prop_assert_eq!(IncidenceColoring::from_json(&g, &c.to_json(&g)).unwrap(), c);
    }

    #[test]
    fn product_shapes(a in arb_graph(4, 5), b in arb_graph(4, 5)) {
        let (d1, d2) = (delta(&a), delta(&b));
        let (n1, n2, m1, m2) = (a.n(), b.n(), a.m(), b.m());
        let c = cartesian(&a, &b).graph;
        prop_assert_eq!((c.n(), c.m(), delta(&c)), (n1 * n2, n1 * m2 + n2 * m1, d1 + d2));
        let t = tensor(&a, &b).graph;
        prop_assert_eq!((t.m(), delta(&t)), (2 * m1 * m2, d1 * d2));
        let s = strong(&a, &b).graph;
        prop_assert_eq!((s.m(), delta(&s)), (n1 * m2 + n2 * m1 + 2 * m1 * m2, d1 + d2 + d1 * d2));
        let links = vec![Sign::Minus; n1 * n2];
        let k = corona(&a, &b, &links).unwrap().graph;
        prop_assert_eq!((k.n(), k.m()), (n1 * (1 + n2), m1 + n1 * (m2 + n2)));
        for (i, e) in c.edges().iter().enumerate() {
            // Cartesian edges inherit the factor edge's sign.
            let (u1, u2, v1, v2) = (e.u / n2, e.u % n2, e.v / n2, e.v % n2);
            let src = if u1 == v1 { b.edge(b.find_edge(u2, v2).unwrap()) } else { a.edge(a.find_edge(u1, v1).unwrap()) };
            prop_assert_eq!(c.edge(i).sign, src.sign);
        }
        for e in t.edges() {
            let (u1, u2, v1, v2) = (e.u / n2, e.u % n2, e.v / n2, e.v % n2);
            let s1 = a.edge(a.find_edge(u1, v1).unwrap()).sign;
            let s2 = b.edge(b.find_edge(u2, v2).unwrap()).sign;
            prop_assert_eq!(e.sign, s1 * s2);
        }
    }

    #[test]
    fn forests_combine(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b) = (random_forest(&mut r, 5), random_forest(&mut r, 5));
        let ca = sigcolor_core::color::color_signed_forest(&a).unwrap();
        let cb = sigcolor_core::color::color_signed_forest(&b).unwrap();
        let c = color_cartesian_combined(&a, &ca, &b, &cb).unwrap();
        prop_assert_eq!(c.k(), delta(&a) + delta(&b));
        prop_assert!(valid(&cartesian(&a, &b).graph, &c));
    }

    #[test]
    fn greedy_tree_is_proper(seed in any::<u64>()) {
        let t = random_tree(&mut rng(seed), 7);
        let colors = greedy_tree_edge_coloring(&t).unwrap();
        prop_assert!(colors.iter().all(|&c| 1 <= c && c <= delta(&t)));
        for v in 0..t.n() {
            let at: Vec<usize> = t.neighbors(v).iter().map(|&(_, e)| colors[e]).collect();
            prop_assert_eq!(at.iter().collect::<HashSet<_>>().len(), at.len());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn cosets_equal_full(g in arb_graph(6, 10)) {
        let opts = EnumerationOptions { jobs: Some(1), ..Default::default() };
        let full = class_ratio_full(&g, &opts).unwrap();
        let cos = class_ratio_cosets(&g, &opts).unwrap();
        prop_assert_eq!(full.ratio, cos.ratio);
        prop_assert_eq!(full.total, 1u64 << g.m());
        prop_assert_eq!(cos.total, 1u64 << (g.m() + g.component_count() - g.n()));
    }

    #[test]
    fn coset_has_two_to_the_n_minus_c_members(g in arb_graph(6, 9)) {
        let n = g.n();
        let members: HashSet<Vec<Sign>> = (0..1u64 << n)
            .map(|bits| {
                let x = VertexSet::from_vertices(n, (0..n).filter(|&v| bits >> v & 1 == 1)).unwrap();
                g.switch(&x).unwrap().signs()
            })
            .collect();
        prop_assert_eq!(members.len(), 1usize << (n - g.component_count()));
    }
}
