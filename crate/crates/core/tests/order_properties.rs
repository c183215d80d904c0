mod common;

use common::*;
use proptest::prelude::*;
use qualdom::order::{
    check_spo, classify, is_interval_order, is_linear_extension, linear_extension_violations, transitive_closure,
    transitive_reduction, Classification, Relation,
};

fn relation_pairs(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (0..=max_n).prop_flat_map(|n| {
        let cells = n * n;
        (Just(n), proptest::collection::vec(any::<bool>(), cells)).prop_map(move |(n, bits)| {
            let pairs = bits.iter().enumerate().filter(|(_, &b)| b).map(|(c, _)| (c / n, c % n)).collect();
            (n, pairs)
        })
    })
}

/// Closed random DAG: forward pairs under a shuffled labelling.
fn strict_partial_order(max_n: usize) -> impl Strategy<Value = Relation> {
    (1..=max_n).prop_flat_map(|n| {
        let forward = n * (n - 1) / 2;
        (
            Just(n),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(proptest::bool::weighted(0.35), forward),
        )
            .prop_map(|(n, perm, bits)| {
                let forward = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                let pairs = forward.zip(bits).filter(|(_, b)| *b).map(|((i, j), _)| (perm[i], perm[j]));
                Relation::from_pairs(n, pairs).unwrap().transitive_closure()
            })
    })
}

fn to_matrix(r: &Relation) -> Matrix {
    matrix(r.len_elements(), r.pairs())
}

proptest! {
    #[test]
    fn closure_matches_brute_force((n, pairs) in relation_pairs(7)) {
        let r = Relation::from_pairs(n, pairs.iter().copied()).unwrap();
        let c = transitive_closure(&r);
        prop_assert_eq!(to_matrix(&c), brute_closure(&matrix(n, pairs)));
    }

    #[test]
    fn closure_is_idempotent_and_extensive((n, pairs) in relation_pairs(7)) {
        let r = Relation::from_pairs(n, pairs).unwrap();
        let c = transitive_closure(&r);
        prop_assert!(r.is_subset(&c));
        prop_assert_eq!(transitive_closure(&c), c);
    }

    #[test]
    fn closure_is_monotone((n, pairs) in relation_pairs(6), extra in any::<(usize, usize)>()) {
        prop_assume!(n > 0);
        let r = Relation::from_pairs(n, pairs).unwrap();
        let mut bigger = r.clone();
        bigger.insert(extra.0 % n, extra.1 % n);
        prop_assert!(transitive_closure(&r).is_subset(&transitive_closure(&bigger)));
    }

    #[test]
    fn check_spo_agrees_with_brute_force((n, pairs) in relation_pairs(6)) {
        let r = Relation::from_pairs(n, pairs.iter().copied()).unwrap();
        prop_assert_eq!(check_spo(&r).is_ok(), brute_spo(&matrix(n, pairs)).is_ok());
    }

    #[test]
    fn closed_dags_are_partial_orders(r in strict_partial_order(9)) {
        prop_assert_eq!(check_spo(&r), Ok(()));
    }

    #[test]
    fn reduction_is_minimal_and_regenerates(r in strict_partial_order(9)) {
        let h = transitive_reduction(&r).unwrap();
        prop_assert!(h.is_subset(&r));
        prop_assert_eq!(transitive_closure(&h), r.clone());
        for (i, j) in h.pairs() {
            let mut fewer = h.clone();
            fewer.remove(i, j);
            prop_assert!(!transitive_closure(&fewer).contains(i, j));
        }
    }

    #[test]
    fn classification_hierarchy(r in strict_partial_order(7)) {
        let class = classify(&r);
        let m = to_matrix(&r);
        let n = r.len_elements();
        prop_assert_eq!(class >= Classification::IntervalOrder, brute_interval(&m));
        prop_assert_eq!(class >= Classification::IntervalOrder, is_interval_order(&r).is_ok());
        let incomparable = |i: usize, j: usize| i != j && !m[i][j] && !m[j][i];
        let weak = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| {
            !(incomparable(i, j) && incomparable(j, k)) || i == k || incomparable(i, k)
        })));
        prop_assert_eq!(class >= Classification::WeakOrder, weak);
        let total = (0..n).all(|i| (0..n).all(|j| !incomparable(i, j)));
        prop_assert_eq!(class == Classification::TotalOrder, total);
    }

    #[test]
    fn non_orders_classify_with_the_first_violation((n, pairs) in relation_pairs(5)) {
        let r = Relation::from_pairs(n, pairs).unwrap();
        match (check_spo(&r), classify(&r)) {
            (Err(v), Classification::NotStrictPartialOrder { reason }) => prop_assert_eq!(v, reason),
            (Ok(()), c) => prop_assert!(c >= Classification::StrictPartialOrder),
            (Err(_), c) => prop_assert!(false, "classified {:?}", c),
        }
    }

    #[test]
    fn topological_orders_are_linear_extensions(r in strict_partial_order(9)) {
        let n = r.len_elements();
        let mut ranking: Vec<usize> = (0..n).collect();
        // more successors first is a topological order of a transitive relation
        ranking.sort_by_key(|&i| std::cmp::Reverse(r.successors(i).count()));
        prop_assert!(is_linear_extension(&ranking, &r).unwrap());
        ranking.reverse();
        prop_assert_eq!(linear_extension_violations(&ranking, &r).unwrap().len(), r.len());
    }
}

#[test]
fn linear_extension_rejects_non_permutations() {
    let r = Relation::from_pairs(3, [(0, 1)]).unwrap();
    assert!(is_linear_extension(&[0, 1], &r).is_err());
    assert!(is_linear_extension(&[0, 1, 1], &r).is_err());
    assert!(is_linear_extension(&[0, 1, 3], &r).is_err());
}

#[test]
fn reduction_rejects_non_orders() {
    let cyclic = Relation::from_pairs(2, [(0, 1), (1, 0)]).unwrap();
    assert!(transitive_reduction(&cyclic).is_err());
}
