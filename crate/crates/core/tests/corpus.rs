mod common;

use std::collections::BTreeSet;

use planesquare::corpus::{
    canonical_form, canonical_labeling, enumerate_class, find_embedding, is_planar, lattice_sample,
    named, named_examples, random_class_member, CorpusError,
};
use planesquare::square::{Adjacency, SimpleGraph};
use proptest::prelude::*;

fn sized(n: usize) -> Vec<SimpleGraph> {
    enumerate_class(n.max(2))
        .unwrap()
        .into_iter()
        .filter(|g| g.vertex_count() == n)
        .map(|g| SimpleGraph::of(&g))
        .collect()
}

#[test]
fn enumeration_matches_naive_filter() {
    for n in 2..=6 {
        let ours: BTreeSet<_> = sized(n).iter().map(common::brute_canonical).collect();
        assert_eq!(ours.len(), sized(n).len(), "duplicate classes at n = {n}");
        assert_eq!(ours, common::naive_class(n), "n = {n}");
    }
}

#[test]
fn cumulative_counts() {
    let counts: Vec<usize> = (2..=7).map(|n| enumerate_class(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 3, 9, 22, 56, 151]);
}

#[test]
fn enumerated_graphs_are_embedded_class_members() {
    for g in enumerate_class(7).unwrap() {
        let r = g.class_membership();
        assert!(r.in_class && r.is_connected, "{:?}", g.to_file());
    }
}

#[test]
fn enumeration_is_deterministic() {
    assert_eq!(enumerate_class(6).unwrap(), enumerate_class(6).unwrap());
}

#[test]
fn out_of_range_sizes_are_rejected() {
    assert_eq!(
        enumerate_class(0),
        Err(CorpusError::NOutOfRange {
            n: 0,
            min: 2,
            max: 8
        })
    );
    assert!(enumerate_class(9).is_err());
    assert!(random_class_member(3, 1).is_err());
}

#[test]
fn planarity_agrees_with_rotation_search() {
    let mut graphs = vec![
        SimpleGraph::complete(5),
        SimpleGraph::complete_bipartite(3, 3),
        SimpleGraph::complete(4),
        SimpleGraph::complete_bipartite(2, 4),
    ];
    // K5 minus an edge is planar
    graphs.push(SimpleGraph::from_edges(
        5,
        SimpleGraph::complete(5)
            .edges()
            .into_iter()
            .filter(|e| (e.0, e.1) != (0, 1))
            .map(|e| (e.0, e.1)),
    ));
    for g in graphs {
        assert_eq!(is_planar(&g), common::planar_by_rotations(&g));
    }
}

#[test]
fn examples_are_named_and_documented() {
    let names: Vec<&str> = named_examples().iter().map(|g| g.name).collect();
    assert_eq!(
        names,
        ["sharpness9", "k24", "c6", "q3", "grid3x3", "hexprism"]
    );
    for name in names {
        assert!(!named(name).unwrap().provenance.is_empty());
    }
    assert!(
        !named("sharpness9")
            .unwrap()
            .graph
            .class_membership()
            .in_class
    );
    for name in ["k24", "c6", "q3", "grid3x3", "hexprism"] {
        assert!(
            named(name).unwrap().graph.class_membership().in_class,
            "{name}"
        );
    }
}

#[test]
fn lattice_sample_is_reproducible() {
    let a = lattice_sample(50, 40);
    assert_eq!(a, lattice_sample(50, 40));
    assert!(a.iter().all(|g| (2..=40).contains(&g.vertex_count())));
}

fn small_graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            SimpleGraph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e))
        })
    })
}

proptest! {
    #[test]
    fn canonical_form_is_a_complete_invariant(g in small_graph(), h in small_graph()) {
        let same = g.vertex_count() == h.vertex_count()
            && common::brute_canonical(&g) == common::brute_canonical(&h);
        prop_assert_eq!(canonical_form(&g) == canonical_form(&h), same);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in small_graph().prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })) {
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.permuted(&perm)));
        let mut p = canonical_labeling(&g);
        p.sort_unstable();
        prop_assert_eq!(p, (0..g.vertex_count()).collect::<Vec<_>>());
    }

    #[test]
    fn embedding_search_matches_rotation_search(g in small_graph()) {
        let found = find_embedding(&g);
        prop_assert_eq!(found.is_some(), common::planar_by_rotations(&g));
        if let Some(pg) = found {
            prop_assert!(pg.euler_ok());
            prop_assert_eq!(SimpleGraph::of(&pg), g);
        }
    }

    #[test]
    fn random_members_have_the_requested_size(seed in any::<u64>(), n in 2usize..80) {
        let g = random_class_member(seed, n).unwrap();
        prop_assert_eq!(g.vertex_count(), n);
        prop_assert!(g.class_membership().in_class);
        prop_assert!(g.is_connected());
        prop_assert_eq!(&g, &random_class_member(seed, n).unwrap());
    }
}
