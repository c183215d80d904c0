mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qualdom::diagnostics::{consistency_report, weighted_sum_rank, WeightVector};
use qualdom::dominance::{dominance_graph, DominanceEngine};
use qualdom::model::{OrderingOutcome, Problem, Value, ValueDomain};
use qualdom::synth::{random_interval_order, random_partial_order, random_problem, DomainKind, SynthConfig};

/// Random problem with mixed domains and either a partial-order or an
/// interval-order importance relation.
fn problem(seed: u64, interval: bool) -> Problem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(1..=10);
    let m = rng.random_range(1..=6);
    let importance = if interval {
        random_interval_order(&mut rng, m)
    } else {
        let density = rng.random_range(0.0..0.8);
        random_partial_order(&mut rng, m, density)
    };
    let cfg = SynthConfig::mixed(&mut rng, n, m);
    random_problem(&mut rng, &cfg, importance)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn irreflexive_and_asymmetric(seed in any::<u64>()) {
        let p = problem(seed, false);
        let engine = DominanceEngine::new(&p).unwrap();
        for a in 0..p.alternatives.len() {
            prop_assert!(engine.dominates(a, a).unwrap().is_none());
            for b in 0..p.alternatives.len() {
                let both = engine.dominates(a, b).unwrap().is_some() && engine.dominates(b, a).unwrap().is_some();
                prop_assert!(!both);
            }
        }
    }

    #[test]
    fn every_witness_is_sound(seed in any::<u64>()) {
        let p = problem(seed, false);
        let closed = importance_matrix(&p);
        let engine = DominanceEngine::new(&p).unwrap();
        for a in 0..p.alternatives.len() {
            for b in 0..p.alternatives.len() {
                let all = engine.witnesses(a, b);
                match engine.dominates(a, b).unwrap() {
                    Some(w) => {
                        prop_assert_eq!(w.strict_on, OrderingOutcome::Better);
                        prop_assert_eq!(Some(&w.attribute), all.first());
                        let (holds, checked) = witness_holds(&p, &closed, a, b, w.attribute);
                        prop_assert!(holds);
                        prop_assert_eq!(&w.checked_set, &checked);
                    }
                    None => prop_assert!(all.is_empty()),
                }
                for &w in &all {
                    prop_assert!(witness_holds(&p, &closed, a, b, w).0);
                }
                let expected: Vec<usize> = (0..p.attributes.len())
                    .filter(|&w| witness_holds(&p, &closed, a, b, w).0)
                    .collect();
                prop_assert_eq!(all, expected);
            }
        }
    }

    #[test]
    fn interval_importance_gives_a_partial_order(seed in any::<u64>()) {
        let p = problem(seed, true);
        let g = dominance_graph(&p).unwrap();
        prop_assert!(g.is_spo());
        let layers = g.layered_ranking().unwrap();
        let report = consistency_report(&layers.flatten(), &g).unwrap();
        prop_assert!(report.violated_pairs.is_empty());
        prop_assert_eq!(report.agreement_ratio, 1.0);
    }

    #[test]
    fn parallel_graph_matches_sequential(seed in any::<u64>()) {
        let p = problem(seed, false);
        let engine = DominanceEngine::new(&p).unwrap();
        let par = engine.graph();
        let seq = engine.graph_sequential();
        prop_assert_eq!(par.edges, seq.edges);
    }

    #[test]
    fn removal_never_changes_surviving_pairs(seed in any::<u64>(), removed in any::<prop::sample::Index>()) {
        let p = problem(seed, false);
        let removed = removed.index(p.alternatives.len());
        let full = dominance_graph(&p).unwrap();
        let reduced = p.without_alternative(removed);
        let g = dominance_graph(&reduced).unwrap();
        let original = |i: usize| if i < removed { i } else { i + 1 };
        for a in 0..reduced.alternatives.len() {
            for b in 0..reduced.alternatives.len() {
                prop_assert_eq!(g.contains(a, b), full.contains(original(a), original(b)));
            }
        }
    }

    #[test]
    fn weighted_sum_is_affine_invariant(seed in any::<u64>(), scale in 1..20i32, shift in -50..50i32, raw in proptest::collection::vec(0.0..1.0f64, 1..6)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(2..=10);
        let m = raw.len();
        let kinds = (0..m).map(|_| if rng.random_bool(0.7) { DomainKind::Numeric } else { DomainKind::Ordinal }).collect();
        let cfg = SynthConfig { alternatives: n, kinds, value_range: 9, ordinal_levels: 4 };
        let p = random_problem(&mut rng, &cfg, vec![]);
        let total: f64 = raw.iter().sum();
        prop_assume!(total > 0.0);
        let mut weights: Vec<f64> = raw.iter().map(|x| x / total).collect();
        let drift: f64 = 1.0 - weights.iter().sum::<f64>();
        weights[0] += drift;
        let w = WeightVector::new(weights).unwrap();

        let Some(k) = (0..m).find(|&k| matches!(p.attributes[k].domain, ValueDomain::Numeric { .. })) else {
            return Ok(());
        };
        let mut q = p.clone();
        for alt in &mut q.alternatives {
            if let Value::Number(x) = alt.values[k] {
                alt.values[k] = Value::Number(scale as f64 * x + shift as f64);
            }
        }
        let before = weighted_sum_rank(&p, &w).unwrap();
        let after = weighted_sum_rank(&q, &w).unwrap();
        prop_assert_eq!(before.order, after.order);
        prop_assert_eq!(before.scores, after.scores);
    }
}

#[test]
fn self_dominance_is_never_reported_on_fixtures() {
    for name in ["cost_perf.json", "mixed.json", "tradeoffs.json", "building_design.json"] {
        let p = qualdom::io::parse_problem(&fixture_text(name)).unwrap();
        let g = dominance_graph(&p).unwrap();
        assert!(g.edges.iter().all(|e| e.winner != e.loser), "{name}");
    }
}
