use indeplab_core::decomposition::{
    is_2_bicritical_fast, is_almost_bipartite, is_almost_bipartite_oracle, is_koenig_egervary,
    is_koenig_egervary_fast, larson, larson_oracle,
};
use indeplab_core::exact::{alpha, is_2_bicritical_oracle, IndependenceOracle};
use indeplab_core::fast::{critical_difference_fast, diadem_fast, max_critical_independent_set_fast};
use indeplab_core::matching::{matching_number, max_matching};
use indeplab_core::{graph6, Caps, Graph, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            let edges: Vec<_> = pairs.iter().zip(&bits).filter(|(_, &b)| b).map(|(&e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn subset(n: usize) -> impl Strategy<Value = VertexSet> {
    proptest::collection::vec(any::<bool>(), n)
        .prop_map(move |bits| VertexSet::from_vertices(n, (0..n).filter(|&v| bits[v])).unwrap())
}

fn graph_and_two_subsets(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), subset(n), subset(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn neighborhood_is_monotone((g, a, b) in graph_and_two_subsets(12)) {
        let small = a.intersection(&b);
        prop_assert!(g.neighborhood(&small).unwrap().is_subset(&g.neighborhood(&a).unwrap()));
    }

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let text = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&text).unwrap(), g.clone());
        prop_assert_eq!(graph6::encode(&graph6::decode(&text).unwrap()), text);
    }

    #[test]
    fn maximum_matching_is_valid(g in graph(14)) {
        let m = max_matching(&g);
        prop_assert!(m.is_valid_for(&g));
        prop_assert_eq!(m.size(), matching_number(&g));
    }

    #[test]
    fn fast_matches_oracle(g in graph(11)) {
        let caps = Caps::default();
        let oracle = IndependenceOracle::new(&g, &caps).unwrap();
        let profile = oracle.profile(&caps);
        prop_assert_eq!(profile.zhang_identity(), Some(true));
        prop_assert_eq!(critical_difference_fast(&g), profile.difference());
        let j = max_critical_independent_set_fast(&g);
        prop_assert!(profile.max_critical.contains(&j));
        prop_assert_eq!(diadem_fast(&g), profile.diadem());
        prop_assert_eq!(is_koenig_egervary_fast(&g), is_koenig_egervary(&g, &caps).unwrap());
        prop_assert_eq!(is_2_bicritical_fast(&g), is_2_bicritical_oracle(&g, &caps).unwrap());
    }

    #[test]
    fn larson_parts_match_oracle(g in graph(11)) {
        let caps = Caps::default();
        let parts = larson(&g, &caps).unwrap();
        prop_assert!(parts.alpha_verified);
        let profile = IndependenceOracle::new(&g, &caps).unwrap().profile(&caps);
        prop_assert_eq!(parts.ker(), profile.ker());
        let (nucleus, diadem) = parts.nucleus_and_diadem();
        prop_assert_eq!(nucleus, profile.nucleus());
        prop_assert_eq!(diadem, profile.diadem());
        prop_assert_eq!(larson_oracle(&g, &caps).unwrap().l, parts.l);
    }

    #[test]
    fn maximum_independent_sets_lie_between_core_and_corona(g in graph(12)) {
        let oracle = IndependenceOracle::new(&g, &Caps::default()).unwrap();
        let omega = oracle.omega();
        let (core, corona) = (omega.intersection(), omega.union());
        for s in &omega {
            prop_assert!(core.is_subset(s) && s.is_subset(&corona));
            prop_assert_eq!(s.len(), oracle.alpha());
        }
    }

    #[test]
    fn criticality_chain(g in graph(11)) {
        let caps = Caps::default();
        let profile = IndependenceOracle::new(&g, &caps).unwrap().profile(&caps);
        let (ker, nucleus, diadem) = (profile.ker(), profile.nucleus(), profile.diadem());
        prop_assert!(ker.is_subset(&nucleus));
        for j in &profile.max_critical {
            prop_assert!(nucleus.is_subset(j) && j.is_subset(&diadem));
        }
        for i in &profile.critical {
            prop_assert!(profile.max_critical.iter().any(|j| i.is_subset(j)));
        }
    }

    #[test]
    fn bipartite_graphs_are_koenig_egervary(g in graph(14)) {
        if g.is_bipartite() {
            let a = alpha(&g, &Caps::default()).unwrap();
            prop_assert_eq!(a + matching_number(&g), g.order());
        }
    }

    #[test]
    fn almost_bipartite_block_test_matches_cycles(g in graph(10)) {
        prop_assert_eq!(is_almost_bipartite(&g), is_almost_bipartite_oracle(&g, &Caps::default()).unwrap());
    }
}
