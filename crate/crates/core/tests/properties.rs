use proptest::prelude::*;
use sombor_core::graph::{canonical_form, Graph};
use sombor_core::oracle::prufer_decode;
use sombor_core::sombor::{compare, edge_weight, sombor_index, SomborValue};
use std::cmp::Ordering;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| proptest::collection::vec(0..n, n - 2).prop_map(move |seq| prufer_decode(&seq, n).unwrap()))
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.n()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

fn pairs(max: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    proptest::collection::vec((1..=max, 1..=max), 0..12)
}

/// Reference connectivity-free tree check by depth-first search.
fn dfs_is_tree(g: &Graph) -> bool {
    if g.n() == 0 || g.m() + 1 != g.n() {
        return false;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

proptest! {
    #[test]
    fn canonical_form_ignores_labels((g, perm) in with_permutation(9)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert_eq!(canonical_form(&g).unwrap().to_graph().degree_sequence(), g.degree_sequence());
    }

    #[test]
    fn sombor_is_label_invariant((g, perm) in with_permutation(10)) {
        let h = g.relabel(&perm).unwrap();
        let (a, b) = (sombor_index(&g), sombor_index(&h));
        prop_assert_eq!(a.pairs(), b.pairs());
        prop_assert_eq!(compare(&a, &b).ordering, Ordering::Equal);
    }

    #[test]
    fn sombor_matches_direct_sum(g in graph(10)) {
        let direct: f64 = g.edges().map(|(u, v)| edge_weight(g.deg(u), g.deg(v))).sum();
        prop_assert!((sombor_index(&g).value - direct).abs() < 1e-9);
    }

    #[test]
    fn adding_an_edge_increases_the_index(g in graph(9), a in 0usize..9, b in 0usize..9) {
        let (a, b) = (a % g.n(), b % g.n());
        prop_assume!(a != b && !g.has_edge(a, b));
        let h = g.with_edge(a, b).unwrap();
        prop_assert_eq!(compare(&sombor_index(&h), &sombor_index(&g)).ordering, Ordering::Greater);
        prop_assert_eq!(h.without_edge(a, b).unwrap(), g);
    }

    #[test]
    fn witnesses_leave_trees(g in graph(8)) {
        for w in g.quasi_tree_witnesses() {
            prop_assert!(w.k >= 1 && g.deg(w.apex) == w.k);
            prop_assert!(dfs_is_tree(&g.without_vertex(w.apex).unwrap()));
        }
        let count = (0..g.n())
            .filter(|&v| g.deg(v) >= 1 && dfs_is_tree(&g.without_vertex(v).unwrap()))
            .count();
        prop_assert_eq!(count, g.quasi_tree_witnesses().len());
    }

    #[test]
    fn tree_leaves_are_witnesses(t in tree(10)) {
        prop_assert!(t.is_tree());
        let leaves: Vec<usize> = (0..t.n()).filter(|&v| t.deg(v) == 1).collect();
        let apexes: Vec<usize> = t.quasi_tree_witnesses().into_iter().map(|w| w.apex).collect();
        prop_assert_eq!(leaves, apexes);
    }

    #[test]
    fn comparison_is_antisymmetric(a in pairs(12), b in pairs(12)) {
        let (x, y) = (SomborValue::from_pairs(a), SomborValue::from_pairs(b));
        prop_assert_eq!(compare(&x, &y).ordering, compare(&y, &x).ordering.reverse());
    }

    #[test]
    fn comparison_is_transitive(a in pairs(8), b in pairs(8), c in pairs(8)) {
        let mut v = [SomborValue::from_pairs(a), SomborValue::from_pairs(b), SomborValue::from_pairs(c)];
        v.sort_by(|x, y| compare(x, y).ordering);
        prop_assert_ne!(compare(&v[0], &v[1]).ordering, Ordering::Greater);
        prop_assert_ne!(compare(&v[1], &v[2]).ordering, Ordering::Greater);
        prop_assert_ne!(compare(&v[0], &v[2]).ordering, Ordering::Greater);
    }

    #[test]
    fn exact_ties_agree_with_values(a in pairs(10), b in pairs(10)) {
        let (x, y) = (SomborValue::from_pairs(a), SomborValue::from_pairs(b));
        if compare(&x, &y).ordering == Ordering::Equal {
            prop_assert!((x.value - y.value).abs() < 1e-9);
        }
    }
}
