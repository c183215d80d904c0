//! Quantitative baselines measured against the dominance reference order.
//!
//! The baseline is a min–max normalized weighted sum. Normalization depends
//! on which alternatives are present, so removing one alternative can flip
//! the order of two others even with fixed weights. The dominance relation is
//! pairwise and has no such dependence; [`rank_reversal_probe`] makes the
//! contrast observable.

use std::cmp::Ordering;

use serde::Serialize;

use crate::dominance::DominanceGraph;
use crate::error::Error;
use crate::model::{Direction, Problem, Value, ValueDomain};
use crate::order::linear_extension_violations;

const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

/// Nonnegative attribute weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self, Error> {
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(Error::InvalidWeights(format!("weight {w} is not a nonnegative number")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::InvalidWeights(format!("weights sum to {sum}, not 1")));
        }
        Ok(WeightVector(weights))
    }

    pub fn uniform(m: usize) -> Result<Self, Error> {
        WeightVector::new(vec![1.0 / m as f64; m])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightedRanking {
    /// Alternative indices, best first.
    pub order: Vec<usize>,
    /// Score per alternative index.
    pub scores: Vec<f64>,
}

/// Raw numeric reading of a value: numbers as given, ordinal levels as their
/// index on an equally spaced scale.
fn raw_score(domain: &ValueDomain, value: &Value) -> f64 {
    match (domain, value) {
        (ValueDomain::Ordinal { levels }, Value::Level(l)) => levels.iter().position(|x| x == l).unwrap_or(0) as f64,
        (_, Value::Number(x)) => *x,
        _ => 0.0,
    }
}

pub fn weighted_sum_rank(p: &Problem, w: &WeightVector) -> Result<WeightedRanking, Error> {
    p.ensure_valid()?;
    if w.0.len() != p.attributes.len() {
        return Err(Error::InvalidWeights(format!("{} weights for {} attributes", w.0.len(), p.attributes.len())));
    }
    if let Some(attr) = p.attributes.iter().find(|a| matches!(a.domain, ValueDomain::Interval { .. })) {
        return Err(Error::IntervalAttribute(attr.name.clone()));
    }

    let n = p.alternatives.len();
    let mut scores = vec![0.0; n];
    for (k, attr) in p.attributes.iter().enumerate() {
        let raw: Vec<f64> = p.alternatives.iter().map(|alt| raw_score(&attr.domain, &alt.values[k])).collect();
        let lo = raw.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = raw.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let minimize = matches!(attr.domain, ValueDomain::Numeric { direction: Direction::Minimize });
        for (score, x) in scores.iter_mut().zip(raw) {
            let normalized = if hi == lo {
                0.5
            } else if minimize {
                (hi - x) / (hi - lo)
            } else {
                (x - lo) / (hi - lo)
            };
            *score += w.0[k] * normalized;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        scores[b]
            .partial_cmp(&scores[a])
            .unwrap_or(Ordering::Equal)
            .then_with(|| p.alternatives[a].id.cmp(&p.alternatives[b].id))
    });
    Ok(WeightedRanking { order, scores })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConsistencyReport {
    pub total_reference_pairs: usize,
    /// Dominance edges `(winner, loser)` that the ranking inverts.
    pub violated_pairs: Vec<(usize, usize)>,
    pub agreement_ratio: f64,
}

pub fn consistency_report(ranking: &[usize], g: &DominanceGraph) -> Result<ConsistencyReport, Error> {
    let violated_pairs = linear_extension_violations(ranking, &g.relation)?;
    let total = g.edges.len();
    let agreement_ratio = if total == 0 { 1.0 } else { (total - violated_pairs.len()) as f64 / total as f64 };
    Ok(ConsistencyReport { total_reference_pairs: total, violated_pairs, agreement_ratio })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AgreementMetrics {
    pub comparable_pair_agreement: f64,
    /// Fraction of unordered pairs that dominance decides one way or the other.
    pub decided_ratio: f64,
}

pub fn agreement_metrics(ranking: &[usize], g: &DominanceGraph) -> Result<AgreementMetrics, Error> {
    let report = consistency_report(ranking, g)?;
    let n = g.len();
    let pairs = n * n.saturating_sub(1) / 2;
    let decided = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| g.contains(i, j) || g.contains(j, i))
        .count();
    let decided_ratio = if pairs == 0 { 0.0 } else { decided as f64 / pairs as f64 };
    Ok(AgreementMetrics { comparable_pair_agreement: report.agreement_ratio, decided_ratio })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReversalReport {
    pub removed_alternative: String,
    /// `(x, y)`: `x` ranked above `y` with every alternative present, below
    /// it once `removed_alternative` is gone.
    pub reversed_pairs: Vec<(String, String)>,
}

/// Removes each alternative in turn and reports surviving pairs whose
/// relative order in the weighted ranking flips. Order is position in the
/// tie-broken ranking, so a pair that falls into a tie resolved the other way
/// by id counts as flipped.
pub fn rank_reversal_probe(p: &Problem, w: &WeightVector) -> Result<Vec<ReversalReport>, Error> {
    let full = weighted_sum_rank(p, w)?;
    let n = p.alternatives.len();

    let mut reports = Vec::with_capacity(n);
    for removed in 0..n {
        let reduced = weighted_sum_rank(&p.without_alternative(removed), w)?;
        // reduced indices skip `removed`
        let original = |i: usize| if i < removed { i } else { i + 1 };
        let mut reduced_pos = vec![usize::MAX; n];
        for (pos, &x) in reduced.order.iter().enumerate() {
            reduced_pos[original(x)] = pos;
        }
        let mut reversed_pairs = Vec::new();
        for (pos, &x) in full.order.iter().enumerate() {
            for &y in &full.order[pos + 1..] {
                if x == removed || y == removed {
                    continue;
                }
                if reduced_pos[y] < reduced_pos[x] {
                    reversed_pairs.push((p.alternatives[x].id.clone(), p.alternatives[y].id.clone()));
                }
            }
        }
        reports.push(ReversalReport { removed_alternative: p.alternatives[removed].id.clone(), reversed_pairs });
    }
    Ok(reports)
}
