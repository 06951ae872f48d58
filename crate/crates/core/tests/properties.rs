use std::sync::OnceLock;

use proptest::prelude::*;

use cubmatch::constructions::{generate_all_cubic, glue, splice_identity};
use cubmatch::decomposition::{contract, marked_components};
use cubmatch::io::{parse_edge_list, parse_graph6, serialize_edge_list, to_graph6};
use cubmatch::verify::{check_lambda_bounds, check_vertex_composition};
use cubmatch::{are_isomorphic, canonical_form, invariants, lambda_profile, EdgeId, Multigraph};

fn corpus(min_kappa: usize) -> &'static [Multigraph] {
    static TWO: OnceLock<Vec<Multigraph>> = OnceLock::new();
    static THREE: OnceLock<Vec<Multigraph>> = OnceLock::new();
    let cell = if min_kappa >= 3 { &THREE } else { &TWO };
    cell.get_or_init(|| {
        (2..=10)
            .step_by(2)
            .flat_map(|n| generate_all_cubic(n, min_kappa).unwrap())
            .collect()
    })
}

fn graph(min_kappa: usize) -> impl Strategy<Value = Multigraph> {
    (0..corpus(min_kappa).len()).prop_map(move |i| corpus(min_kappa)[i].clone())
}

fn multigraph() -> impl Strategy<Value = Multigraph> {
    (2usize..12).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..30).prop_map(move |pairs| {
            Multigraph::new(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_list_round_trip_is_exact(g in multigraph()) {
        prop_assert_eq!(parse_edge_list(&serialize_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip(g in multigraph()) {
        match to_graph6(&g) {
            Ok(s) => prop_assert_eq!(parse_graph6(&s).unwrap().sorted_edges(), g.sorted_edges()),
            Err(_) => prop_assert!(!g.is_simple()),
        }
    }

    #[test]
    fn splice_then_contract_recovers_both_sides(
        g1 in graph(2), g2 in graph(2), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()
    ) {
        let (u, v) = (a.index(g1.order()), b.index(g2.order()));
        let s = splice_identity(&g1, u, &g2, v).unwrap();
        let left: Vec<usize> = s.left_map.iter().flatten().copied().collect();
        let right: Vec<usize> = s.right_map.iter().flatten().copied().collect();
        prop_assert_eq!(s.graph.boundary(&left).len(), 3);
        prop_assert!(are_isomorphic(&contract(&s.graph, &right).unwrap().graph, &g1));
        prop_assert!(are_isomorphic(&contract(&s.graph, &left).unwrap().graph, &g2));
    }

    #[test]
    fn glue_then_split_recovers_both_sides(
        g1 in graph(2), g2 in graph(2), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(),
        crossed in any::<bool>()
    ) {
        let (e1, e2) = (EdgeId(a.index(g1.size())), EdgeId(b.index(g2.size())));
        let g = glue(&g1, e1, &g2, e2, crossed).unwrap();
        let shore: Vec<usize> = (0..g1.order()).collect();
        let (m1, m2) = marked_components(&g, &g.cut(&shore).unwrap()).unwrap();
        prop_assert!(are_isomorphic(&m1.graph, &g1));
        prop_assert!(are_isomorphic(&m2.graph, &g2));
    }

    #[test]
    fn lambda_profile_is_label_invariant(
        (g, p) in graph(2).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        })
    ) {
        let h = g.relabel(&p).unwrap();
        let (pg, ph) = (lambda_profile(&g).unwrap(), lambda_profile(&h).unwrap());
        let mut mapped: Vec<usize> = pg.lambda_set.iter().map(|&v| p[v]).collect();
        mapped.sort_unstable();
        prop_assert_eq!(mapped, ph.lambda_set);
        prop_assert_eq!(pg.rho, ph.rho);
        prop_assert_eq!(invariants(&g).unwrap(), invariants(&h).unwrap());
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn partner_counts_sum_to_rho(g in graph(2)) {
        prop_assume!(g.is_bipartite());
        let p = lambda_profile(&g).unwrap();
        let bip = g.bipartition().unwrap();
        let total: usize = (0..g.order()).filter(|&v| bip.in_a(v)).map(|v| p.partners[v]).sum();
        prop_assert_eq!(total, p.rho);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn spliced_graphs_satisfy_lambda_bound(
        g1 in graph(3), g2 in graph(3), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()
    ) {
        let s = splice_identity(&g1, a.index(g1.order()), &g2, b.index(g2.order())).unwrap();
        let r = check_lambda_bounds(&s.graph).unwrap();
        prop_assert!(r.green(), "{:?}", r.failures);
        let r = check_vertex_composition(&s.graph).unwrap();
        prop_assert!(r.green(), "{:?}", r.failures);
    }
}
