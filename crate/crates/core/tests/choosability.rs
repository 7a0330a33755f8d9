mod common;

use planesquare::choosability::{
    chromatic_number, clique_f_choosable, is_f_choosable, is_k_choosable, l_coloring,
    ChoosabilityError, DemandFunction, ListAssignment,
};
use planesquare::square::{Adjacency, SimpleGraph};
use proptest::prelude::*;

fn tiny_graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..=4).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            SimpleGraph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e))
        })
    })
}

fn proper(g: &SimpleGraph, col: &[u32]) -> bool {
    g.edges().iter().all(|e| col[e.0] != col[e.1])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn f_choosability_matches_naive_oracle(
        (g, f) in tiny_graph().prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), proptest::collection::vec(0u32..=3, n))
        })
    ) {
        prop_assume!(f.iter().sum::<u32>() <= 6);
        let got = is_f_choosable(&g, &DemandFunction::new(f.iter().map(|&x| x as i64)).unwrap()).unwrap();
        prop_assert_eq!(got.choosable, common::naive_f_choosable(&g, &f));
        if let Some(bad) = got.bad_assignment {
            prop_assert!(!common::naive_colorable(&g, &bad.lists));
            prop_assert_eq!(bad.sizes(), f.iter().map(|&x| x as usize).collect::<Vec<_>>());
        }
    }

    #[test]
    fn l_coloring_is_proper_and_complete(
        (g, lists) in tiny_graph().prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), proptest::collection::vec(proptest::collection::vec(0u32..4, 0..4), n))
        })
    ) {
        let la = ListAssignment::from_vecs(&lists);
        let got = l_coloring(&g, &la).unwrap();
        prop_assert_eq!(got.is_some(), common::naive_colorable(&g, &la.lists));
        if let Some(col) = got {
            prop_assert!(proper(&g, &col));
            prop_assert!(col.iter().zip(&la.lists).all(|(c, l)| l.contains(c)));
        }
    }

    #[test]
    fn clique_rule_matches_exhaustive_check(n in 1usize..=4, f in proptest::collection::vec(0u32..=6, 4)) {
        let f = &f[..n];
        let h = SimpleGraph::complete(n);
        let exact = is_f_choosable(&h, &DemandFunction::new(f.iter().map(|&x| x as i64)).unwrap()).unwrap();
        prop_assert_eq!(clique_f_choosable(f), exact.choosable);
    }
}

#[test]
fn k24_is_two_colorable_but_not_two_choosable() {
    let g = SimpleGraph::complete_bipartite(2, 4);
    assert_eq!(chromatic_number(&g).unwrap(), 2);
    let v = is_k_choosable(&g, 2).unwrap();
    assert!(!v.choosable);
    let bad = v.bad_assignment.unwrap();
    assert!(bad.sizes().iter().all(|&s| s == 2));
    assert!(!common::naive_colorable(&g, &bad.lists));
    assert!(is_k_choosable(&g, 3).unwrap().choosable);
}

#[test]
fn chromatic_numbers_of_standard_graphs() {
    assert_eq!(chromatic_number(&SimpleGraph::empty(0)).unwrap(), 0);
    assert_eq!(chromatic_number(&SimpleGraph::empty(3)).unwrap(), 1);
    assert_eq!(chromatic_number(&SimpleGraph::cycle(5)).unwrap(), 3);
    assert_eq!(chromatic_number(&SimpleGraph::cycle(6)).unwrap(), 2);
    assert_eq!(chromatic_number(&SimpleGraph::complete(7)).unwrap(), 7);
}

#[test]
fn zero_demand_is_not_choosable_but_empty_graph_is() {
    let g = SimpleGraph::empty(1);
    assert!(!is_k_choosable(&g, 0).unwrap().choosable);
    assert!(is_k_choosable(&SimpleGraph::empty(0), 0).unwrap().choosable);
}

#[test]
fn limits_are_enforced() {
    assert!(matches!(
        is_k_choosable(&SimpleGraph::empty(7), 2),
        Err(ChoosabilityError::TooManyVertices { .. })
    ));
    assert!(matches!(
        chromatic_number(&SimpleGraph::empty(13)),
        Err(ChoosabilityError::TooManyVertices { .. })
    ));
    assert!(DemandFunction::new([13]).is_err());
    assert!(DemandFunction::new([-1]).is_err());
    assert!(matches!(
        is_f_choosable(&SimpleGraph::empty(2), &DemandFunction::new([1]).unwrap()),
        Err(ChoosabilityError::DemandLengthMismatch { .. })
    ));
    assert!(matches!(
        l_coloring(
            &SimpleGraph::empty(2),
            &ListAssignment::from_vecs(&[vec![1]])
        ),
        Err(ChoosabilityError::MissingList { .. })
    ));
}
