use sombor_core::families::{construct, Family, FamilySpec};
use sombor_core::formulas::{phi, phi_dprime};
use sombor_core::graph::{canonical_form, CanonicalForm};
use sombor_core::oracle::{census, enumerate_rank, quasi_tree_classes, EnumerationTask, Universe, Verifier};

fn form(family: Family, n: usize, k: usize) -> CanonicalForm {
    canonical_form(&construct(FamilySpec::new(family, n, k).unwrap()).unwrap().0).unwrap()
}

#[test]
fn maxima_agree_with_phi_up_to_order_eight() {
    for n in 4..=8 {
        for k in 1..n {
            let top = enumerate_rank(&EnumerationTask::quasi_tree(n, k).top(1)).unwrap();
            let want = phi(n, k).unwrap().value;
            assert!((top[0].value.value - want).abs() < 1e-9, "n={n} k={k}");
            assert_eq!(top[0].unique().unwrap().form, form(Family::Q, n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn q93_is_third() {
    let r = enumerate_rank(&EnumerationTask::quasi_tree(9, 3)).unwrap();
    assert_eq!(r.len(), 3);
    assert_eq!(r[2].unique().unwrap().form, form(Family::Qdprime, 9, 3));
    assert!((r[2].value.value - phi_dprime(9, 3).unwrap().value).abs() < 1e-9);
}

#[test]
fn q54_leads_its_universe() {
    let r = enumerate_rank(&EnumerationTask::quasi_tree(5, 4).top(2)).unwrap();
    assert_eq!(r[0].unique().unwrap().form, form(Family::Q, 5, 4));
}

#[test]
fn labelled_counts_add_up_over_classes() {
    let r = enumerate_rank(&EnumerationTask::quasi_tree(7, 2).top(5)).unwrap();
    for e in &r {
        assert_eq!(e.labeled_count, e.reps.iter().map(|x| x.labeled_count).sum::<u64>());
        assert!(e.reps.windows(2).all(|w| w[0].form < w[1].form));
    }
}

#[test]
fn census_sizes() {
    assert_eq!(quasi_tree_classes(4).unwrap().len(), 5);
    for k in 1..=5 {
        let u = Universe::QuasiTree { n: 6, k };
        assert_eq!(census(u).unwrap().values().sum::<u64>(), u.labeled_size());
    }
    // labelled trees on 6 vertices fall into 6 isomorphism classes
    assert_eq!(census(Universe::Tree { n: 6 }).unwrap().len(), 6);
    // connected unicyclic graphs on 6 vertices: 13 classes
    assert_eq!(census(Universe::Unicyclic { n: 6 }).unwrap().len(), 13);
}

#[test]
fn all_k_merge_at_order_eight() {
    let mut v = Verifier::new(0);
    let levels = v.all_k_levels(8).unwrap();
    assert_eq!(levels.len(), 3);
    assert_eq!(levels[0].unique().unwrap().form, form(Family::Q, 8, 7));
    assert_eq!(levels[2].unique().unwrap().form, form(Family::Qdprime, 8, 7));
}

#[test]
fn all_k_third_level_at_order_nine_is_q97() {
    let mut v = Verifier::new(0);
    let levels = v.all_k_levels(9).unwrap();
    assert_eq!(levels[2].unique().unwrap().form, form(Family::Q, 9, 7));
}
